#include "bergman/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace bergman {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::BoundedIndicated: return "bounded-indicated";
        case Verdict::UnboundedIndicated: return "unbounded-indicated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

DiscreteMeasure pullback_measure(const SymbolPair& s, const RadialWeight& w, const DiskGrid& grid,
                                 double q, int n) {
    DiscreteMeasure mu;
    mu.nodes = grid.nodes;
    mu.masses.resize(grid.nodes.size());
    for (Eigen::Index j = 0; j < grid.nodes.size(); ++j) {
        Complex xi = grid.nodes[j];
        double r = grid.node_abs[j];
        double dens = std::pow(std::abs(evaluate(s.g, xi)), q) * std::pow(w.omega(r), q / 2.0) /
                      std::pow(1.0 + w.phi1(r), q);
        if (n == 1) {
            double rp = std::abs(evaluate(s.phi, xi));
            dens *= std::pow(1.0 + w.phi1(rp), n * q);
        }
        mu.masses[j] = grid.weights[j] * dens;
    }
    return mu;
}

double GB_transform(int n, double p, double q, const SymbolPair& s, Complex z,
                    const DiskGrid& grid, const KernelMoments& m, const RadialWeight& w) {
    if (!(q > 0) || !(p > 0)) throw std::invalid_argument("GB_transform: p, q must be positive");
    double knorm = kernel_norm(m, grid, z, p);
    double acc = 0;
    for (Eigen::Index j = 0; j < grid.nodes.size(); ++j) {
        Complex xi = grid.nodes[j];
        double gv = std::abs(evaluate(s.g, xi));
        if (gv == 0) continue;
        Complex u = evaluate(s.phi, xi);
        double ru = std::abs(u);
        if (ru >= 1.0)
            throw std::runtime_error("GB_transform: |phi| >= 1 at a grid node; not a self-map");
        double kv = std::abs(kernel_eval_raw(m, z, u)) / knorm;
        double r = grid.node_abs[j];
        double val = std::pow(kv, q) * std::pow(gv, q) * std::pow(w.omega(r), q / 2.0) /
                     std::pow(1.0 + w.phi1(r), q);
        if (n == 1) val *= std::pow(1.0 + w.phi1(ru), q);
        acc += grid.weights[j] * val;
    }
    return acc;
}

double pointwise_symbol_function(SymbolFunctionKind kind, const SymbolPair& s, Complex z,
                                 double p, const RadialWeight& w) {
    double r = std::abs(z);
    Complex u = evaluate(s.phi, z);
    double ru = std::abs(u);
    if (ru >= 1.0) throw std::domain_error("pointwise_symbol_function: |phi(z)| >= 1");
    double gv = std::abs(evaluate(s.g, z));
    double wratio = std::sqrt(w.omega(r) / w.omega(ru));
    double v = gv * wratio / (1.0 + w.phi1(r));
    if (kind == SymbolFunctionKind::MI || kind == SymbolFunctionKind::NI)
        v *= 1.0 + w.phi1(ru);
    if (kind == SymbolFunctionKind::MI || kind == SymbolFunctionKind::MV)
        v *= std::pow(w.laplacian(ru), 1.0 / p);
    return v;
}

double necessary_condition(OperatorKind kind, const SymbolPair& s, Complex z, double p, double q,
                           const RadialWeight& w) {
    double r = std::abs(z);
    Complex u = evaluate(s.phi, z);
    double ru = std::abs(u);
    if (ru >= 1.0) throw std::domain_error("necessary_condition: |phi(z)| >= 1");
    double gv = std::abs(evaluate(s.g, z));
    double tratio = std::pow(w.tau(r), 2.0 / q) / std::pow(w.tau(ru), 2.0 / p);
    double wratio = std::sqrt(w.omega(r) / w.omega(ru));
    bool gi = (kind == OperatorKind::GI || kind == OperatorKind::Jg);
    if (gi) return gv * tratio * (1.0 + w.phi1(ru)) / (1.0 + w.phi1(r)) * wratio;
    return tratio * gv / (1.0 + w.phi1(r)) * wratio;
}

double carleson_average(const DiscreteMeasure& mu, const RadialWeight& w, double delta, Complex z) {
    double t = w.tau(std::abs(z));
    double rad = delta * t;
    double acc = 0;
    for (Eigen::Index j = 0; j < mu.nodes.size(); ++j)
        if (std::abs(mu.nodes[j] - z) < rad) acc += mu.masses[j];
    return acc / (t * t);
}

double berezin_G_t(const DiscreteMeasure& mu, double t, Complex z, const KernelMoments& m,
                   const DiskGrid& grid, const RadialWeight& w) {
    if (!(t > 0)) throw std::invalid_argument("berezin_G_t: t must be positive");
    double knorm = kernel_norm(m, grid, z, t);
    double acc = 0;
    for (Eigen::Index j = 0; j < mu.nodes.size(); ++j) {
        if (mu.masses[j] == 0) continue;
        double kv = std::abs(kernel_eval_raw(m, z, mu.nodes[j])) / knorm;
        acc += mu.masses[j] * std::pow(kv, t) * std::pow(w.omega(std::abs(mu.nodes[j])), t / 2.0);
    }
    return acc;
}

EmbeddingValue embedding_functional(const DiscreteMeasure& mu, const RadialWeight& w, double delta,
                                    Complex z, double p, double q) {
    double t = w.tau(std::abs(z));
    double rad = delta * t;
    double local = 0;
    for (Eigen::Index j = 0; j < mu.nodes.size(); ++j) {
        if (std::abs(mu.nodes[j] - z) >= rad) continue;
        double r = std::abs(mu.nodes[j]);
        local += std::pow(1.0 + w.phi1(r), q) * std::pow(w.omega(r), -q / 2.0) * mu.masses[j];
    }
    EmbeddingValue ev;
    ev.K_integrand = local * std::pow(t, -2.0 * q / p);
    ev.F_value = local / (t * t);
    return ev;
}

namespace {

struct EffectiveOp {
    int n;  // 1 for the GI family, 0 for GV
    SymbolPair pair;
};

EffectiveOp effective_op(OperatorKind kind, const SymbolPair& s, double r_max) {
    EffectiveOp e;
    switch (kind) {
        case OperatorKind::GI: e = {1, s}; break;
        case OperatorKind::GV: e = {0, s}; break;
        case OperatorKind::Vg: e = {0, SymbolPair{PowerSeries::identity(), differentiate(s.g), 0}}; break;
        case OperatorKind::Jg: e = {1, SymbolPair{PowerSeries::identity(), s.g, 0}}; break;
    }
    e.pair.certify(r_max);
    return e;
}

bool is_identity(const PowerSeries& f) {
    for (int k = 0; k <= f.degree_cap(); ++k)
        if (f.coeff(k) != Complex(k == 1 ? 1.0 : 0.0)) return false;
    return f.degree_cap() >= 1;
}

double sup_statistic(const EffectiveOp& e, double p, double q,
                     const std::vector<Complex>& sweep, const DiskGrid& grid,
                     const KernelMoments& m, const RadialWeight& w,
                     std::vector<SweepSample>* samples) {
    bool q_inf = std::isinf(q), p_inf = std::isinf(p);
    double sup = 0;
    for (Complex z : sweep) {
        double v;
        if (!q_inf) {
            v = GB_transform(e.n, p, q, e.pair, z, grid, m, w);
        } else if (!p_inf) {
            v = pointwise_symbol_function(e.n == 1 ? SymbolFunctionKind::MI : SymbolFunctionKind::MV,
                                          e.pair, z, p, w);
        } else {
            v = pointwise_symbol_function(e.n == 1 ? SymbolFunctionKind::NI : SymbolFunctionKind::NV,
                                          e.pair, z, p, w);
        }
        if (samples) samples->push_back({z, v});
        sup = std::max(sup, v);
    }
    return sup;
}

double ls_statistic(const EffectiveOp& e, double p, double q, double s_exp, const DiskGrid& grid,
                    const KernelMoments& m, const RadialWeight& w) {
    // Outer integral over a coarse probe grid; d lambda = dA / tau^2.
    int n_r = std::max(16, grid.n_r / 12), n_th = std::max(8, grid.n_theta / 32);
    if (n_th % 2) ++n_th;
    DiskGrid outer = disk_grid(w, n_r, n_th, grid.r_max);
    double acc = 0;
    for (Eigen::Index j = 0; j < outer.nodes.size(); ++j) {
        double gb = GB_transform(e.n, p, q, e.pair, outer.nodes[j], grid, m, w);
        double t = w.tau(outer.node_abs[j]);
        acc += outer.weights[j] * std::pow(gb, s_exp) / (t * t);
    }
    return std::pow(acc, 1.0 / s_exp);
}

}  // namespace

CriterionReport evaluate_boundedness(OperatorKind kind, const SymbolPair& s, double p, double q,
                                     const std::vector<Complex>& sweep, const DiskGrid& grid,
                                     const KernelMoments& m, const RadialWeight& w) {
    if (sweep.empty()) throw std::invalid_argument("evaluate_boundedness: empty sweep");
    EffectiveOp e = effective_op(kind, s, grid.r_max);

    CriterionReport rep;
    rep.p = p;
    rep.q = q;
    rep.n = e.n;
    rep.r_max = grid.r_max;
    switch (kind) {
        case OperatorKind::GI: rep.criterion = "GI"; break;
        case OperatorKind::GV: rep.criterion = "GV"; break;
        case OperatorKind::Vg: rep.criterion = "Vg"; break;
        case OperatorKind::Jg: rep.criterion = "Jg"; break;
    }

    std::vector<Complex> sorted = sweep;
    std::sort(sorted.begin(), sorted.end(),
              [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });

    bool sup_case = (p <= q);
    double s_exp = 0;
    if (!sup_case) {
        s_exp = std::isinf(p) ? 1.0 : p / (p - q);
        if (std::isinf(q)) sup_case = true;  // q = inf implies p = inf here
    }

    double stat;
    if (sup_case) {
        stat = sup_statistic(e, p, q, sorted, grid, m, w, &rep.sweep);
        rep.statistic_kind = "sup";
    } else {
        sup_statistic(e, p, q, sorted, grid, m, w, &rep.sweep);  // sweep values for trend only
        stat = ls_statistic(e, p, q, s_exp, grid, m, w);
        rep.statistic_kind = "Ls_dlambda";
        rep.s_exponent = s_exp;
    }
    rep.statistic = stat;

    // Stability under one tau-step of r_max extension.
    double r_ext = std::min(grid.r_max + w.tau(grid.r_max), 0.99995);
    double stat_ext = stat;
    if (r_ext > grid.r_max + 1e-12) {
        DiskGrid ext = disk_grid(w, grid.n_r, grid.n_theta, r_ext);
        if (sup_case) stat_ext = sup_statistic(e, p, q, sorted, ext, m, w, nullptr);
        else stat_ext = ls_statistic(e, p, q, s_exp, ext, m, w);
    }
    rep.extension_change = (stat > 0) ? std::abs(stat_ext - stat) / stat : 0.0;

    // Growth across the last decade of 1 - r along the sweep.
    const auto& sw = rep.sweep;
    size_t nsw = sw.size();
    double v_end = sw.back().value;
    double d_end = 1.0 - std::abs(sw.back().z);
    size_t ref = 0;
    double best = 1e300;
    for (size_t i = 0; i < nsw; ++i) {
        double diff = std::abs((1.0 - std::abs(sw[i].z)) - 10.0 * d_end);
        if (diff < best) { best = diff; ref = i; }
    }
    double v_ref = sw[ref].value;
    rep.growth_ratio = (v_ref > 0) ? v_end / v_ref : (v_end > 0 ? 1e300 : 1.0);
    bool monotone_up = true;
    for (size_t i = ref; i + 1 < nsw; ++i)
        if (sw[i + 1].value < 0.99 * sw[i].value) { monotone_up = false; break; }

    // Boundary trend: outer quartile vs the quartile before it.
    size_t qn = std::max<size_t>(1, nsw / 4);
    double outer_mean = 0, inner_mean = 0;
    for (size_t i = nsw - qn; i < nsw; ++i) outer_mean += sw[i].value;
    outer_mean /= qn;
    size_t lo = nsw >= 2 * qn ? nsw - 2 * qn : 0;
    for (size_t i = lo; i < nsw - qn; ++i) inner_mean += sw[i].value;
    inner_mean /= std::max<size_t>(1, (nsw - qn) - lo);
    rep.boundary_trend = inner_mean > 0 ? outer_mean / inner_mean : (outer_mean > 0 ? 1e300 : 0);

    if (stat == 0) {
        rep.verdict = Verdict::BoundedIndicated;
    } else if (rep.growth_ratio >= 10.0 && monotone_up) {
        rep.verdict = Verdict::UnboundedIndicated;
    } else if (rep.extension_change < 0.10) {
        rep.verdict = Verdict::BoundedIndicated;
    } else {
        rep.verdict = Verdict::Inconclusive;
    }

    // Corollary-2 style cross report for the GV family with identity symbol.
    if (e.n == 0 && is_identity(e.pair.phi) && p == q && !std::isinf(p)) {
        double sup_psi = 0;
        for (Complex z : sorted)
            sup_psi = std::max(sup_psi,
                               w.psi(std::abs(z)) * std::abs(evaluate(e.pair.g, z)));
        rep.cor2_sup_psi_g = sup_psi;
    }
    return rep;
}

std::string CriterionReport::to_json() const {
    nlohmann::json j;
    j["criterion"] = criterion;
    j["params"] = {{"p", std::isinf(p) ? -1.0 : p},
                   {"q", std::isinf(q) ? -1.0 : q},
                   {"n", n},
                   {"r_max", r_max},
                   {"s_exponent", s_exponent}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sweep)
        arr.push_back({{"z_re", s.z.real()}, {"z_im", s.z.imag()}, {"value", s.value}});
    j["sweep"] = arr;
    j["statistic"] = statistic;
    j["statistic_kind"] = statistic_kind;
    j["verdict"] = bergman::to_string(verdict);
    j["diagnostics"] = {{"extension_change", extension_change},
                        {"growth_ratio", growth_ratio},
                        {"boundary_trend", boundary_trend}};
    if (cor2_sup_psi_g) j["diagnostics"]["cor2_sup_psi_g"] = *cor2_sup_psi_g;
    return j.dump(2);
}

std::string CriterionReport::sweep_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "z_re,z_im,value\n";
    for (const auto& s : sweep)
        os << s.z.real() << "," << s.z.imag() << "," << s.value << "\n";
    return os.str();
}

}  // namespace bergman
