#include "bergman/weight.hpp"

#include <cmath>
#include <functional>

namespace bergman {

RadialWeight::RadialWeight(double gamma, double alpha, double b, double eps_center)
    : gamma_(gamma), alpha_(alpha), b_(b), eps_center_(eps_center) {
    if (gamma < 0) throw std::invalid_argument("RadialWeight: gamma must be >= 0, got " + std::to_string(gamma));
    if (alpha <= 0) throw std::invalid_argument("RadialWeight: alpha must be > 0, got " + std::to_string(alpha));
    if (b <= 0) throw std::invalid_argument("RadialWeight: b must be > 0, got " + std::to_string(b));
    if (eps_center <= 0 || eps_center >= 0.2)
        throw std::invalid_argument("RadialWeight: eps_center must lie in (0, 0.2), got " + std::to_string(eps_center));

    // Locate the interior minimum of the raw radial Laplacian (if any) by
    // coarse sampling plus golden-section refinement; freeze tau below it.
    double best_r = eps_center_, best_v = laplacian_raw(eps_center_);
    const int n = 400;
    for (int i = 1; i <= n; ++i) {
        double r = eps_center_ + (0.9 - eps_center_) * i / n;
        double v = laplacian_raw(r);
        if (v < best_v) { best_v = v; best_r = r; }
    }
    double lo = std::max(eps_center_, best_r - 0.01), hi = std::min(0.9, best_r + 0.01);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, c = hi;
    double x1 = c - gr * (c - a), x2 = a + gr * (c - a);
    double f1 = laplacian_raw(x1), f2 = laplacian_raw(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) { c = x2; x2 = x1; f2 = f1; x1 = c - gr * (c - a); f1 = laplacian_raw(x1); }
        else         { a = x1; x1 = x2; f1 = f2; x2 = a + gr * (c - a); f2 = laplacian_raw(x2); }
    }
    r_flat_ = 0.5 * (a + c);
}

double RadialWeight::phi(double r) const {
    // 2 phi = -gamma ln(1-r) + b (1-r)^{-alpha}
    double u = 1.0 - r;
    return 0.5 * (-gamma_ * std::log(u) + b_ * std::pow(u, -alpha_));
}

double RadialWeight::omega(double r) const {
    double u = 1.0 - r;
    return std::pow(u, gamma_) * std::exp(-b_ * std::pow(u, -alpha_));
}

double RadialWeight::phi1(double r) const {
    double u = 1.0 - r;
    return 0.5 * (gamma_ / u + alpha_ * b_ * std::pow(u, -alpha_ - 1.0));
}

double RadialWeight::phi2(double r) const {
    double u = 1.0 - r;
    return 0.5 * (gamma_ / (u * u) + alpha_ * (alpha_ + 1.0) * b_ * std::pow(u, -alpha_ - 2.0));
}

double RadialWeight::laplacian_raw(double r) const {
    return phi2(r) + phi1(r) / r;
}

double RadialWeight::laplacian(double r) const {
    return laplacian_raw(std::max(r, r_flat_));
}

double RadialWeight::tau(double r) const {
    if (r >= 1.0) throw std::domain_error("tau: radius must be < 1");
    return 1.0 / std::sqrt(laplacian(r));
}

double RadialWeight::psi(double r) const {
    return 1.0 / (1.0 + phi1(r));
}

ClassLReport check_class_L_profile(const std::function<double(double)>& tau,
                                   const Eigen::ArrayXd& grid) {
    ClassLReport rep;
    const Eigen::Index n = grid.size();
    Eigen::ArrayXd t(n);
    for (Eigen::Index i = 0; i < n; ++i) t[i] = tau(grid[i]);

    rep.c1_est = (t / (1.0 - grid)).maxCoeff();
    rep.linear_bound_ok = std::isfinite(rep.c1_est);

    double c2 = 0;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        c2 = std::max(c2, std::abs(t[i + 1] - t[i]) / std::abs(grid[i + 1] - grid[i]));
    rep.c2_est = c2;

    rep.m_tau = 0.25 * std::min({1.0, 1.0 / rep.c1_est, 1.0 / rep.c2_est});

    // Non-increasing everywhere; strictly decreasing over the outer half.
    rep.tau_decreasing = true;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        double slack = (grid[i] < 0.5) ? 1e-12 : 0.0;
        if (t[i + 1] > t[i] + slack) { rep.tau_decreasing = false; break; }
    }

    // tau' -> 0: compare difference quotients over the outermost decade.
    double last_q = std::abs(t[n - 1] - t[n - 2]) / (grid[n - 1] - grid[n - 2]);
    Eigen::Index mid = n / 2;
    double mid_q = std::abs(t[mid + 1] - t[mid]) / (grid[mid + 1] - grid[mid]);
    rep.tau_prime_to_zero = last_q < mid_q || last_q < 1e-3;

    // e:A requires a finite c1 that works as r -> 1: the ratio must not be
    // attained only in the limit. Flag failure when the ratio still climbs
    // at the end of the grid.
    double r_last = t[n - 1] / (1.0 - grid[n - 1]);
    double r_prev = t[n - 5] / (1.0 - grid[n - 5]);
    if (r_last > rep.c1_est * 0.999 && r_last > 1.05 * r_prev) rep.linear_bound_ok = false;

    return rep;
}

ClassLReport check_class_L(const RadialWeight& w, const Eigen::ArrayXd& grid) {
    return check_class_L_profile([&w](double r) { return w.tau(r); }, grid);
}

double m_tau(const RadialWeight& w) {
    Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(400, 0.0, 0.999);
    return check_class_L(w, grid).m_tau;
}

}  // namespace bergman
