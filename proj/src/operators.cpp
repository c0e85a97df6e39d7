#include "bergman/operators.hpp"

#include <cmath>

namespace bergman {

void SymbolPair::certify(double r_max, int n_samples) {
    if (std::abs(phi.coeff(0)) >= 1.0)
        throw std::domain_error("SymbolPair: |phi(0)| >= 1");
    double sup = 0;
    for (int i = 0; i < n_samples; ++i) {
        Complex z = std::polar(r_max, 2.0 * M_PI * i / n_samples);
        sup = std::max(sup, std::abs(evaluate(phi, z)));
    }
    self_map_sup = sup;
    if (sup >= 1.0)
        throw std::domain_error("SymbolPair: sup |phi| = " + std::to_string(sup) +
                                " on |z| = " + std::to_string(r_max) + "; not a self-map");
}

PowerSeries apply_GI(const SymbolPair& s, const PowerSeries& f, int cap) {
    PowerSeries inner = multiply(compose(differentiate(f), s.phi, cap), s.g, cap);
    return integrate_from_0(inner).truncated(cap);
}

PowerSeries apply_GV(const SymbolPair& s, const PowerSeries& f, int cap) {
    PowerSeries inner = multiply(compose(f, s.phi, cap), s.g, cap);
    return integrate_from_0(inner).truncated(cap);
}

PowerSeries apply_Vg(const PowerSeries& g0, const PowerSeries& f) {
    int cap = f.degree_cap() + g0.degree_cap();
    return integrate_from_0(multiply(f, differentiate(g0), cap));
}

PowerSeries apply_Jg(const PowerSeries& g0, const PowerSeries& f) {
    int cap = f.degree_cap() + g0.degree_cap();
    return integrate_from_0(multiply(differentiate(f), g0, cap));
}

PowerSeries apply_operator(OperatorKind kind, const SymbolPair& s, const PowerSeries& f, int cap) {
    switch (kind) {
        case OperatorKind::GI: return apply_GI(s, f, cap);
        case OperatorKind::GV: return apply_GV(s, f, cap);
        case OperatorKind::Vg: return apply_Vg(s.g, f).truncated(cap);
        case OperatorKind::Jg: return apply_Jg(s.g, f).truncated(cap);
    }
    throw std::logic_error("apply_operator: unknown kind");
}

OpNormEstimate operator_norm_lower_bound(OperatorKind kind, const SymbolPair& s, double p,
                                         double q, const std::vector<PowerSeries>& family,
                                         const DiskGrid& grid, const RadialWeight& w, int cap) {
    if (family.empty()) throw std::invalid_argument("operator_norm_lower_bound: empty family");
    OpNormEstimate est;
    Space sp = std::isinf(p) ? Space::Ainf : Space::Ap;
    Space sq = std::isinf(q) ? Space::Ainf : Space::Ap;
    for (size_t i = 0; i < family.size(); ++i) {
        double denom = norm(family[i], sp, p, grid, w).value;
        if (denom == 0) continue;
        PowerSeries Tf = apply_operator(kind, s, family[i], cap);
        double num = norm(Tf, sq, q, grid, w).value;
        double ratio = num / denom;
        if (ratio > est.best_ratio) {
            est.best_ratio = ratio;
            est.witness = int(i);
        }
    }
    return est;
}

}  // namespace bergman
