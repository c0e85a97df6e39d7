#ifndef BERGMAN_SERIES_HPP
#define BERGMAN_SERIES_HPP

#include <Eigen/Core>
#include <complex>
#include <stdexcept>

namespace bergman {

using Complex = std::complex<double>;

/// Truncated Taylor expansion about 0: coeffs[k] multiplies z^k.
class PowerSeries {
public:
    PowerSeries() : coeffs_(Eigen::ArrayXcd::Zero(1)) {}
    explicit PowerSeries(Eigen::ArrayXcd coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() == 0) coeffs_ = Eigen::ArrayXcd::Zero(1);
    }

    static PowerSeries zero(int cap) { return PowerSeries(Eigen::ArrayXcd::Zero(cap + 1)); }
    static PowerSeries constant(Complex a0, int cap = 0) {
        Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(cap + 1);
        c[0] = a0;
        return PowerSeries(c);
    }
    static PowerSeries identity(int cap = 1) {
        Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(std::max(cap, 1) + 1);
        c[1] = 1.0;
        return PowerSeries(c);
    }
    static PowerSeries monomial(int k, Complex a = 1.0) {
        Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(k + 1);
        c[k] = a;
        return PowerSeries(c);
    }

    int degree_cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Eigen::ArrayXcd& coeffs() const { return coeffs_; }
    Complex coeff(int k) const { return k <= degree_cap() ? coeffs_[k] : Complex(0); }

    PowerSeries truncated(int cap) const {
        Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(cap + 1);
        int m = std::min(cap, degree_cap());
        c.head(m + 1) = coeffs_.head(m + 1);
        return PowerSeries(c);
    }

private:
    Eigen::ArrayXcd coeffs_;
};

/// Term-wise derivative; degree cap drops by one.
PowerSeries differentiate(const PowerSeries& f);

/// Antiderivative vanishing at 0; degree cap grows by one.
PowerSeries integrate_from_0(const PowerSeries& f);

/// Cauchy product truncated at cap.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, int cap);

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries scale(const PowerSeries& f, Complex t);

/// Taylor coefficients of f(phi(z)) up to cap by Horner-style nested
/// truncated multiplication. f is a polynomial, so the expansion about
/// phi(0) is exact; requires |phi(0)| < 1.
PowerSeries compose(const PowerSeries& f, const PowerSeries& phi, int cap);

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const PowerSeries& f, Complex z);

}  // namespace bergman

#endif
