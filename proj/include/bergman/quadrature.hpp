#ifndef BERGMAN_QUADRATURE_HPP
#define BERGMAN_QUADRATURE_HPP

#include <Eigen/Core>
#include <complex>
#include <functional>

#include "bergman/weight.hpp"

namespace bergman {

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, Eigen::ArrayXd& nodes, Eigen::ArrayXd& weights);

/// Adaptive Gauss-Legendre integration of f over [a, b] to relative
/// tolerance rel_tol. Throws std::runtime_error on non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-12);

/// Monomial squared norms c_n = 2 int_0^1 r^{2n+1} profile(r) dr for
/// n = 0..N, with substitution u = 1-r and panels refined toward u = 0.
Eigen::ArrayXd radial_moments_profile(const std::function<double(double)>& profile, int N,
                                      double rel_tol = 1e-11);

struct KernelMoments;  // defined in kernel.hpp

/// Quadrature nodes and weights for the normalized area measure on the
/// sub-disk |z| <= r_max. Radial nodes are Gauss-Legendre in the clustered
/// variable t with 1-r = (1-r_max)^t; angular nodes are uniform.
struct DiskGrid {
    Eigen::ArrayXcd nodes;    // flattened (radial-major) complex nodes
    Eigen::ArrayXd weights;   // per-node weights, sum = r_max^2
    Eigen::ArrayXd radii;     // the n_r radial node values
    Eigen::ArrayXd node_abs;  // |z_j|, cached
    double r_max = 0;
    int n_r = 0, n_theta = 0;
};

DiskGrid disk_grid(const RadialWeight& w, int n_r, int n_theta, double r_max);

/// Smallest radius where omega(r) * (1 + phi'(r))^8 < 1e-30: integrand
/// tails beyond it are negligible for every criterion exponent in use.
double auto_r_max(const RadialWeight& w);

/// Sum of weights[j] * f(nodes[j]); throws on a non-finite value.
template <typename F>
std::complex<double> integrate(const DiskGrid& g, F&& f) {
    std::complex<double> acc = 0, comp = 0;  // Kahan
    for (Eigen::Index j = 0; j < g.nodes.size(); ++j) {
        std::complex<double> v = f(g.nodes[j]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("integrate: non-finite value at node (" +
                                     std::to_string(g.nodes[j].real()) + ", " +
                                     std::to_string(g.nodes[j].imag()) + ")");
        std::complex<double> y = g.weights[j] * v - comp;
        std::complex<double> t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

template <typename F>
double integrate_real(const DiskGrid& g, F&& f) {
    double acc = 0, comp = 0;
    for (Eigen::Index j = 0; j < g.nodes.size(); ++j) {
        double v = f(g.nodes[j]);
        if (!std::isfinite(v))
            throw std::runtime_error("integrate: non-finite value at node (" +
                                     std::to_string(g.nodes[j].real()) + ", " +
                                     std::to_string(g.nodes[j].imag()) + ")");
        double y = g.weights[j] * v - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

}  // namespace bergman

#endif
