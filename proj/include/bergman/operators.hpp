#ifndef BERGMAN_OPERATORS_HPP
#define BERGMAN_OPERATORS_HPP

#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"
#include "bergman/spaces.hpp"
#include "bergman/weight.hpp"

namespace bergman {

/// Pair of symbols (phi, g); phi must be an analytic self-map candidate on
/// the working sub-disk, certified by dense boundary sampling.
struct SymbolPair {
    PowerSeries phi;
    PowerSeries g;
    double self_map_sup = 0;  // max |phi| over the sampled rim

    /// Samples |phi| on |z| = r_max; throws when the sup reaches 1.
    void certify(double r_max, int n_samples = 2048);
};

enum class OperatorKind { GI, GV, Vg, Jg };

/// GI f = int_0^z f'(phi(xi)) g(xi) dxi
PowerSeries apply_GI(const SymbolPair& s, const PowerSeries& f, int cap);

/// GV f = int_0^z f(phi(xi)) g(xi) dxi
PowerSeries apply_GV(const SymbolPair& s, const PowerSeries& f, int cap);

/// V_g f = int_0^z f g', J_g f = int_0^z f' g.
PowerSeries apply_Vg(const PowerSeries& g0, const PowerSeries& f);
PowerSeries apply_Jg(const PowerSeries& g0, const PowerSeries& f);

PowerSeries apply_operator(OperatorKind kind, const SymbolPair& s, const PowerSeries& f, int cap);

struct OpNormEstimate {
    double best_ratio = 0;
    int witness = -1;
};

/// max over the family of ||T f||_{A^q} / ||f||_{A^p}: an empirical lower
/// bound on the operator norm. Zero-norm members are skipped.
OpNormEstimate operator_norm_lower_bound(OperatorKind kind, const SymbolPair& s, double p,
                                         double q, const std::vector<PowerSeries>& family,
                                         const DiskGrid& grid, const RadialWeight& w, int cap);

}  // namespace bergman

#endif
