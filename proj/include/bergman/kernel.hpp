#ifndef BERGMAN_KERNEL_HPP
#define BERGMAN_KERNEL_HPP

#include <limits>

#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"
#include "bergman/weight.hpp"

namespace bergman {

constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// Monomial squared norms c_n = ||z^n||^2 in A^2_omega; the reproducing
/// kernel is the diagonal series K_z(zeta) = sum (zeta conj(z))^n / c_n.
struct KernelMoments {
    Eigen::ArrayXd c;
    RadialWeight weight;

    int max_index() const { return static_cast<int>(c.size()) - 1; }
};

/// c_n = 2 int_0^1 r^{2n+1} omega(r)^s dr for n = 0..N.
KernelMoments radial_moments(const RadialWeight& w, int N, double s = 1.0);

/// Truncated kernel sum with a tail-bound check at 1e-10 relative accuracy;
/// throws with a suggested moment count when the truncation is too short.
Complex kernel_eval(const KernelMoments& m, Complex z, Complex zeta);

/// Same sum without the tail check, for quadrature loops where far nodes
/// are crushed by the weight factor.
Complex kernel_eval_raw(const KernelMoments& m, Complex z, Complex zeta);

/// ||K_z||_{A^p_omega} by quadrature (sup of |K_z| omega^{1/2} for p = inf).
/// p = 2 is cross-checked against K_z(z)^{1/2}.
double kernel_norm(const KernelMoments& m, const DiskGrid& grid, Complex z, double p);

/// k_{p,z} = K_z / ||K_z||_{A^p_omega} as a power series of degree cap.
PowerSeries normalized_kernel(const KernelMoments& m, const DiskGrid& grid, Complex z,
                              double p, int cap);

/// Kernel-proxy test function F_a = K_a * omega(a)^{1/2} tau(a)^2, which is
/// of unit size against omega^{1/2} near a and decays off the diagonal.
PowerSeries test_function(const KernelMoments& m, const DiskGrid& grid, Complex a);

}  // namespace bergman

#endif
