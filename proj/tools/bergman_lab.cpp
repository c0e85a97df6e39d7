// Batch front-end: configure weight/symbols/exponents, run sweeps, emit reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "bergman/criteria.hpp"
#include "bergman/kernel.hpp"
#include "bergman/lattice.hpp"
#include "bergman/operators.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/spaces.hpp"
#include "bergman/weight.hpp"

using nlohmann::json;
using namespace bergman;

namespace {

struct RunConfig {
    double gamma = 0, alpha = 1, b = 1, eps_center = 0.05;
    int n_r = 200, n_theta = 256;
    double r_max = -1;  // -1 means auto
    int moments = 512;
    int degree = 64;
    std::string op = "GV";
    std::vector<Complex> phi_coeffs = {0.0, 1.0};
    std::vector<Complex> g_coeffs = {1.0};
    double p = 2, q = 2;
    double sweep_lo = 0.3, sweep_hi = 0.9;
    int sweep_count = 13;
    double delta = -1;  // lattice delta; -1 means m_tau/4
    std::uint64_t seed = 1;
};

std::vector<Complex> parse_coeffs(const json& j) {
    std::vector<Complex> out;
    for (const auto& e : j) {
        if (e.is_array())
            out.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        else
            out.emplace_back(e.get<double>(), 0.0);
    }
    return out;
}

double parse_exponent(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInfExponent;
        throw std::runtime_error("config: exponent must be a number or \"inf\"");
    }
    return j.get<double>();
}

RunConfig load_config(const std::string& path) {
    RunConfig c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j = json::parse(in);
    if (j.contains("weight")) {
        const auto& w = j["weight"];
        c.gamma = w.value("gamma", c.gamma);
        c.alpha = w.value("alpha", c.alpha);
        c.b = w.value("b", c.b);
        c.eps_center = w.value("eps_center", c.eps_center);
    }
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        c.n_r = g.value("n_r", c.n_r);
        c.n_theta = g.value("n_theta", c.n_theta);
        if (g.contains("r_max") && !g["r_max"].is_string()) c.r_max = g["r_max"].get<double>();
    }
    if (j.contains("operator")) {
        const auto& o = j["operator"];
        c.op = o.value("op", c.op);
        if (o.contains("phi")) c.phi_coeffs = parse_coeffs(o["phi"]);
        if (o.contains("g")) c.g_coeffs = parse_coeffs(o["g"]);
    }
    if (j.contains("p")) c.p = parse_exponent(j["p"]);
    if (j.contains("q")) c.q = parse_exponent(j["q"]);
    if (j.contains("moments")) c.moments = j["moments"].get<int>();
    if (j.contains("degree")) c.degree = j["degree"].get<int>();
    if (j.contains("sweep")) {
        const auto& s = j["sweep"];
        c.sweep_lo = s.value("r_lo", c.sweep_lo);
        c.sweep_hi = s.value("r_hi", c.sweep_hi);
        c.sweep_count = s.value("count", c.sweep_count);
    }
    if (j.contains("delta")) c.delta = j["delta"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    return c;
}

PowerSeries series_from(const std::vector<Complex>& coeffs) {
    Eigen::ArrayXcd c(std::max<size_t>(coeffs.size(), 1));
    c.setZero();
    for (size_t k = 0; k < coeffs.size(); ++k) c[Eigen::Index(k)] = coeffs[k];
    return PowerSeries(c);
}

OperatorKind parse_op(const std::string& s) {
    if (s == "GI") return OperatorKind::GI;
    if (s == "GV") return OperatorKind::GV;
    if (s == "Vg") return OperatorKind::Vg;
    if (s == "Jg") return OperatorKind::Jg;
    throw std::runtime_error("config: op must be one of GI, GV, Vg, Jg");
}

std::vector<Complex> radial_sweep(const RunConfig& c) {
    std::vector<Complex> sw;
    for (int i = 0; i < c.sweep_count; ++i) {
        double t = c.sweep_count == 1 ? 0.0 : double(i) / (c.sweep_count - 1);
        sw.emplace_back(c.sweep_lo + t * (c.sweep_hi - c.sweep_lo), 0.0);
    }
    return sw;
}

std::vector<PowerSeries> random_polynomials(std::uint64_t seed, int count, int deg) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<PowerSeries> fam;
    for (int i = 0; i < count; ++i) {
        Eigen::ArrayXcd co(deg + 1);
        for (int k = 0; k <= deg; ++k) co[k] = Complex(U(rng), U(rng));
        fam.emplace_back(co);
    }
    return fam;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out_path, std::ios::binary);
        os << text;
    }
}

struct Session {
    RunConfig cfg;
    RadialWeight w;
    double r_max;
    DiskGrid grid;
    KernelMoments mom;

    explicit Session(const RunConfig& c)
        : cfg(c),
          w(c.gamma, c.alpha, c.b, c.eps_center),
          r_max(c.r_max > 0 ? c.r_max : auto_r_max(w)),
          grid(disk_grid(w, c.n_r, c.n_theta, r_max)),
          mom(radial_moments(w, c.moments)) {}
};

json weight_info(const Session& S) {
    json j;
    j["weight"] = {{"gamma", S.cfg.gamma}, {"alpha", S.cfg.alpha}, {"b", S.cfg.b},
                   {"eps_center", S.cfg.eps_center}, {"r_flat", S.w.r_flat()}};
    j["r_max"] = S.r_max;
    Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(400, 0.0, 0.999);
    ClassLReport rep = check_class_L(S.w, grid);
    j["class_L"] = {{"c1_est", rep.c1_est}, {"c2_est", rep.c2_est}, {"m_tau", rep.m_tau},
                    {"tau_decreasing", rep.tau_decreasing},
                    {"tau_prime_to_zero", rep.tau_prime_to_zero},
                    {"linear_bound_ok", rep.linear_bound_ok}, {"pass", rep.pass()}};
    json samples = json::array();
    for (double r : {0.0, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99}) {
        samples.push_back({{"r", r}, {"omega", S.w.omega(r)}, {"phi1", S.w.phi1(r)},
                           {"tau", S.w.tau(r)}, {"psi", S.w.psi(r)}});
    }
    j["samples"] = samples;
    return j;
}

json kernel_bands(const Session& S) {
    json j;
    j["r_max"] = S.r_max;
    for (double p : {1.0, 2.0, kInfExponent}) {
        json rows = json::array();
        double lo = 1e300, hi = 0;
        for (int i = 0; i < 13; ++i) {
            double r = 0.3 + 0.05 * i;
            double nrm = kernel_norm(S.mom, S.grid, r, p);
            double texp = std::isinf(p) ? 2.0 : 2.0 * (p - 1.0) / p;
            double ratio = nrm * std::sqrt(S.w.omega(r)) * std::pow(S.w.tau(r), texp);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            rows.push_back({{"r", r}, {"ratio", ratio}});
        }
        std::string key = std::isinf(p) ? "p_inf" : (p == 1.0 ? "p_1" : "p_2");
        j[key] = {{"rows", rows}, {"band_lo", lo}, {"band_hi", hi}, {"spread", hi / lo}};
    }
    return j;
}

json lp_check(const Session& S) {
    auto fam = random_polynomials(S.cfg.seed, 20, std::min(S.cfg.degree, 30));
    json j;
    for (double p : {1.0, 2.0, kInfExponent}) {
        double lo = 1e300, hi = 0;
        json rows = json::array();
        for (size_t i = 0; i < fam.size(); ++i) {
            double r = littlewood_paley_ratio(fam[i], p, S.grid, S.w);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            rows.push_back(r);
        }
        std::string key = std::isinf(p) ? "p_inf" : (p == 1.0 ? "p_1" : "p_2");
        j[key] = {{"ratios", rows}, {"spread", hi / lo}};
    }
    return j;
}

json lattice_run(const Session& S, const std::string& format, const std::string& out) {
    double delta = S.cfg.delta > 0 ? S.cfg.delta : m_tau(S.w) / 4.0;
    double lr = std::min(S.r_max, 0.95);
    Lattice L = build_lattice(S.w, delta, lr);
    CoveringReport rep = verify_lattice(L, S.grid);
    if (format == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "re,im,tau\n";
        for (Eigen::Index k = 0; k < L.size(); ++k)
            os << L.centers[k].real() << "," << L.centers[k].imag() << ","
               << S.w.tau(std::abs(L.centers[k])) << "\n";
        emit(os.str(), out);
        return json();
    }
    json j;
    j["delta"] = delta;
    j["r_max"] = lr;
    j["n_centers"] = rep.n_centers;
    j["separation_ok"] = rep.separation_ok;
    j["coverage_ok"] = rep.coverage_ok;
    j["multiplicity_max"] = rep.multiplicity_max;
    j["tau_outermost"] = rep.tau_last;
    return j;
}

json criterion_run(const Session& S, CriterionReport* out_rep = nullptr) {
    SymbolPair s{series_from(S.cfg.phi_coeffs), series_from(S.cfg.g_coeffs), 0};
    CriterionReport rep = evaluate_boundedness(parse_op(S.cfg.op), s, S.cfg.p, S.cfg.q,
                                               radial_sweep(S.cfg), S.grid, S.mom, S.w);
    if (out_rep) *out_rep = rep;
    return json::parse(rep.to_json());
}

json opnorm_run(const Session& S, double* best = nullptr) {
    SymbolPair s{series_from(S.cfg.phi_coeffs), series_from(S.cfg.g_coeffs), 0};
    s.certify(S.r_max);
    std::vector<PowerSeries> fam;
    for (double a : {0.0, 0.3, 0.6, 0.8, 0.9})
        fam.push_back(normalized_kernel(S.mom, S.grid, a, S.cfg.p, S.cfg.degree));
    for (auto& f : random_polynomials(S.cfg.seed, 5, std::min(S.cfg.degree, 30)))
        fam.push_back(std::move(f));
    OpNormEstimate est = operator_norm_lower_bound(parse_op(S.cfg.op), s, S.cfg.p, S.cfg.q, fam,
                                                   S.grid, S.w, S.cfg.degree);
    if (best) *best = est.best_ratio;
    json j;
    j["best_ratio"] = est.best_ratio;
    j["witness"] = est.witness;
    j["family_size"] = fam.size();
    return j;
}

json xcheck_run(const Session& S) {
    CriterionReport rep;
    json jc = criterion_run(S, &rep);
    double best = 0;
    json jo = opnorm_run(S, &best);
    json j;
    j["criterion"] = jc;
    j["opnorm"] = jo;
    // Consistency: a bounded-indicated criterion must come with a finite,
    // modest empirical lower bound; an unbounded one carries no constraint.
    bool consistent = true;
    if (rep.verdict == Verdict::BoundedIndicated && rep.statistic > 0) {
        double scale = std::isinf(S.cfg.q) ? rep.statistic : std::pow(rep.statistic, 1.0 / S.cfg.q);
        consistent = best <= 100.0 * std::max(scale, 1.0);
    }
    j["consistent"] = consistent;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for exponentially weighted Bergman spaces"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json";
    std::uint64_t seed_flag = 0;
    double rmax_flag = 0;
    int degree_flag = 0;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed_flag, "override RNG seed");
    app.add_option("--rmax", rmax_flag, "override grid r_max");
    app.add_option("--degree", degree_flag, "override series degree cap");

    auto* sc_weight = app.add_subcommand("weight-info", "tau, phi', class-L report");
    auto* sc_kernel = app.add_subcommand("kernel-bands", "kernel norm band checks");
    auto* sc_lp = app.add_subcommand("lp-check", "Littlewood-Paley ratio bands");
    auto* sc_lattice = app.add_subcommand("lattice", "build and verify a (delta,tau)-lattice");
    auto* sc_criterion = app.add_subcommand("criterion", "evaluate a boundedness criterion");
    auto* sc_opnorm = app.add_subcommand("opnorm", "empirical operator norm lower bound");
    auto* sc_xcheck = app.add_subcommand("xcheck", "criterion vs opnorm joint report");
    // Let the shared flags appear after the subcommand name as well.
    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = load_config(config_path);
        if (seed_flag) cfg.seed = seed_flag;
        if (rmax_flag > 0) cfg.r_max = rmax_flag;
        if (degree_flag > 0) cfg.degree = degree_flag;
        Session S(cfg);

        json j;
        if (sc_weight->parsed()) j = weight_info(S);
        else if (sc_kernel->parsed()) j = kernel_bands(S);
        else if (sc_lp->parsed()) j = lp_check(S);
        else if (sc_lattice->parsed()) {
            j = lattice_run(S, format, out_path);
            if (format == "csv") return 0;
        } else if (sc_criterion->parsed()) {
            CriterionReport rep;
            j = criterion_run(S, &rep);
            if (format == "csv") {
                emit(rep.sweep_csv(), out_path);
                return 0;
            }
        } else if (sc_opnorm->parsed()) j = opnorm_run(S);
        else if (sc_xcheck->parsed()) j = xcheck_run(S);

        emit(j.dump(2), out_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
