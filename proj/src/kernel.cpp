#include "bergman/kernel.hpp"

#include <cmath>

namespace bergman {

KernelMoments radial_moments(const RadialWeight& w, int N, double s) {
    if (N < 0) throw std::invalid_argument("radial_moments: N must be >= 0");
    if (!(s > 0)) throw std::invalid_argument("radial_moments: s must be > 0");
    auto profile = [&w, s](double r) { return std::pow(w.omega(r), s); };
    return KernelMoments{radial_moments_profile(profile, N), w};
}

Complex kernel_eval_raw(const KernelMoments& m, Complex z, Complex zeta) {
    Complex x = zeta * std::conj(z);
    Complex acc = 0;
    for (int n = m.max_index(); n >= 0; --n) acc = acc * x + 1.0 / m.c[n];
    return acc;
}

Complex kernel_eval(const KernelMoments& m, Complex z, Complex zeta) {
    if (std::abs(z) >= 1.0 || std::abs(zeta) >= 1.0)
        throw std::domain_error("kernel_eval: points must lie in the open disk");
    Complex v = kernel_eval_raw(m, z, zeta);
    int N = m.max_index();
    double x = std::abs(zeta * std::conj(z));
    if (N >= 1 && x > 0) {
        double tN = std::pow(x, N) / m.c[N];
        double q = x * m.c[N - 1] / m.c[N];  // approximates the next term ratio
        double tail = (q < 1.0) ? tN * q / (1.0 - q) : std::numeric_limits<double>::infinity();
        if (!(tail <= 1e-10 * std::abs(v)))
            throw std::runtime_error("kernel_eval: truncation tail bound violated; "
                                     "increase moment count to about N=" + std::to_string(2 * N));
    }
    return v;
}

double kernel_norm(const KernelMoments& m, const DiskGrid& grid, Complex z, double p) {
    if (!(p > 0)) throw std::invalid_argument("kernel_norm: p must be positive");
    if (std::abs(z) > grid.r_max)
        throw std::invalid_argument("kernel_norm: z must lie inside the grid");
    const RadialWeight& w = m.weight;

    if (std::isinf(p)) {
        double best = 0;
        for (Eigen::Index j = 0; j < grid.nodes.size(); ++j) {
            double v = std::abs(kernel_eval_raw(m, z, grid.nodes[j])) *
                       std::sqrt(w.omega(grid.node_abs[j]));
            best = std::max(best, v);
        }
        return best;
    }

    double acc = 0;
    // Ring-major walk: the omega factor depends on the radius only.
    Eigen::Index idx = 0;
    for (int jr = 0; jr < grid.n_r; ++jr) {
        double wfac = std::pow(w.omega(grid.radii[jr]), p / 2.0);
        for (int i = 0; i < grid.n_theta; ++i, ++idx) {
            double kv = std::abs(kernel_eval_raw(m, z, grid.nodes[idx]));
            acc += grid.weights[idx] * std::pow(kv, p) * wfac;
        }
    }
    double norm = std::pow(acc, 1.0 / p);

    if (p == 2.0) {
        double diag = std::sqrt(kernel_eval_raw(m, z, z).real());
        if (std::abs(norm - diag) > 1e-3 * diag)
            throw std::runtime_error("kernel_norm: p=2 quadrature disagrees with K_z(z)^{1/2}; "
                                     "grid or moment truncation insufficient");
    }
    return norm;
}

PowerSeries normalized_kernel(const KernelMoments& m, const DiskGrid& grid, Complex z,
                              double p, int cap) {
    double nrm = kernel_norm(m, grid, z, p);
    cap = std::min(cap, m.max_index());
    Eigen::ArrayXcd coef(cap + 1);
    Complex zb = std::conj(z), pw = 1.0;
    for (int k = 0; k <= cap; ++k) {
        coef[k] = pw / (m.c[k] * nrm);
        pw *= zb;
    }
    return PowerSeries(coef);
}

PowerSeries test_function(const KernelMoments& m, const DiskGrid& grid, Complex a) {
    (void)grid;
    if (std::abs(a) < 0.3)
        throw std::invalid_argument("test_function: |a| must be >= 0.3 for the kernel proxy");
    const RadialWeight& w = m.weight;
    double r = std::abs(a);
    double fac = std::sqrt(w.omega(r)) * w.tau(r) * w.tau(r);
    int cap = m.max_index();
    Eigen::ArrayXcd coef(cap + 1);
    Complex ab = std::conj(a), pw = 1.0;
    for (int k = 0; k <= cap; ++k) {
        coef[k] = fac * pw / m.c[k];
        pw *= ab;
    }
    return PowerSeries(coef);
}

}  // namespace bergman
