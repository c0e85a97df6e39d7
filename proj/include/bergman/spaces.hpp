#ifndef BERGMAN_SPACES_HPP
#define BERGMAN_SPACES_HPP

#include "bergman/kernel.hpp"
#include "bergman/lattice.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"
#include "bergman/weight.hpp"

namespace bergman {

enum class Space { Ap, Ainf, Sp, Sinf };

struct NormReport {
    double value = 0;
    Space space = Space::Ap;
    double p = 2;
    double r_max = 0;
};

/// A^p: (int |f|^p omega^{p/2})^{1/p};  A^inf: sup |f| omega^{1/2};
/// S^p: the same with an extra (1+phi')^{-p} density; S^inf analogously.
/// Sups are taken over grid nodes plus a local refinement patch around the
/// best node.
NormReport norm(const PowerSeries& f, Space space, double p, const DiskGrid& grid,
                const RadialWeight& w);

/// (|f(0)|^p + ||f'||_{S^p}^p)^{1/p} / ||f||_{A^p}  (sum form for p = inf).
double littlewood_paley_ratio(const PowerSeries& f, double p, const DiskGrid& grid,
                              const RadialWeight& w);

/// F = sum_k lambda_k F_{z_k} / tau(z_k)^{2/p}  (no tau factor for p = inf).
PowerSeries atomic_family(const Lattice& lattice, const KernelMoments& m, const DiskGrid& grid,
                          double p, const Eigen::ArrayXcd& coefficients);

}  // namespace bergman

#endif
