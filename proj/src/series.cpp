#include "bergman/series.hpp"

namespace bergman {

PowerSeries differentiate(const PowerSeries& f) {
    int n = f.degree_cap();
    if (n == 0) return PowerSeries::zero(0);
    Eigen::ArrayXcd c(n);
    for (int k = 0; k < n; ++k) c[k] = double(k + 1) * f.coeff(k + 1);
    return PowerSeries(c);
}

PowerSeries integrate_from_0(const PowerSeries& f) {
    int n = f.degree_cap();
    Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(n + 2);
    for (int k = 0; k <= n; ++k) c[k + 1] = f.coeff(k) / double(k + 1);
    return PowerSeries(c);
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, int cap) {
    Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(cap + 1);
    int nf = f.degree_cap(), ng = g.degree_cap();
    for (int i = 0; i <= std::min(nf, cap); ++i) {
        Complex a = f.coeff(i);
        if (a == Complex(0)) continue;
        int jmax = std::min(ng, cap - i);
        for (int j = 0; j <= jmax; ++j) c[i + j] += a * g.coeff(j);
    }
    return PowerSeries(c);
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
    int cap = std::max(f.degree_cap(), g.degree_cap());
    Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(cap + 1);
    for (int k = 0; k <= cap; ++k) c[k] = f.coeff(k) + g.coeff(k);
    return PowerSeries(c);
}

PowerSeries scale(const PowerSeries& f, Complex t) {
    return PowerSeries((f.coeffs() * t).eval());
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& phi, int cap) {
    if (std::abs(phi.coeff(0)) >= 1.0)
        throw std::domain_error("compose: |phi(0)| >= 1, not a self-map candidate");
    // Horner in the series algebra: r = a_N; r = r*phi + a_k.
    PowerSeries r = PowerSeries::constant(f.coeff(f.degree_cap()), cap);
    for (int k = f.degree_cap() - 1; k >= 0; --k) {
        r = multiply(r, phi, cap);
        Eigen::ArrayXcd c = r.coeffs();
        c[0] += f.coeff(k);
        r = PowerSeries(c);
    }
    return r;
}

Complex evaluate(const PowerSeries& f, Complex z) {
    Complex r = 0;
    for (int k = f.degree_cap(); k >= 0; --k) r = r * z + f.coeff(k);
    return r;
}

}  // namespace bergman
