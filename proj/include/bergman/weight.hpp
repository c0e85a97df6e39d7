#ifndef BERGMAN_WEIGHT_HPP
#define BERGMAN_WEIGHT_HPP

#include <Eigen/Core>
#include <functional>
#include <stdexcept>
#include <string>

namespace bergman {

/// Radial weight omega(r) = (1-r)^gamma * exp(-b/(1-r)^alpha) = e^{-2 phi(r)}
/// together with its potential phi, derivatives, regularized Laplacian and
/// the induced length scale tau = (laplacian)^{-1/2}.
///
/// The radial Laplacian phi'' + phi'/r blows up at the origin (phi has a
/// conical point there) and for small gamma it also has an interior minimum;
/// tau is therefore frozen below r_flat = max(eps_center, argmin laplacian),
/// which keeps tau non-increasing on [0,1).
class RadialWeight {
public:
    RadialWeight(double gamma, double alpha, double b, double eps_center = 0.05);

    double gamma() const { return gamma_; }
    double alpha() const { return alpha_; }
    double b() const { return b_; }
    double eps_center() const { return eps_center_; }
    double r_flat() const { return r_flat_; }

    double omega(double r) const;      // e^{-2 phi}
    double phi(double r) const;        // potential
    double phi1(double r) const;       // d phi / dr
    double phi2(double r) const;       // d^2 phi / dr^2
    double laplacian(double r) const;  // phi'' + phi'/r, frozen below r_flat
    double tau(double r) const;        // laplacian^{-1/2}; throws for r >= 1
    double psi(double r) const;        // 1/(1 + phi')

private:
    double laplacian_raw(double r) const;

    double gamma_, alpha_, b_, eps_center_;
    double r_flat_;
};

struct ClassLReport {
    double c1_est = 0;        // max tau(r)/(1-r)
    double c2_est = 0;        // max sampled |tau(r)-tau(s)|/|r-s|
    double m_tau = 0;         // min(1, 1/c1, 1/c2)/4
    bool tau_decreasing = false;
    bool tau_prime_to_zero = false;
    bool linear_bound_ok = false;  // tau <= c1 (1-r) with finite c1
    bool pass() const { return tau_decreasing && tau_prime_to_zero && linear_bound_ok; }
};

/// Sample the class-L structural conditions on a radius grid; also usable
/// with an arbitrary tau profile (for test doubles) via the overload below.
ClassLReport check_class_L(const RadialWeight& w, const Eigen::ArrayXd& grid);
ClassLReport check_class_L_profile(const std::function<double(double)>& tau,
                                   const Eigen::ArrayXd& grid);

/// m_tau from a default 400-point grid on [0, 0.999].
double m_tau(const RadialWeight& w);

}  // namespace bergman

#endif
