#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bergman/criteria.hpp"

using namespace bergman;

namespace {

const RadialWeight& ref() {
    static RadialWeight w(0.0, 1.0, 1.0);
    return w;
}
const KernelMoments& moments() {
    static KernelMoments m = radial_moments(ref(), 512);
    return m;
}
const DiskGrid& grid() {
    static DiskGrid g = disk_grid(ref(), 200, 256, auto_r_max(ref()));
    return g;
}

// Coarse configuration for the exhaustive case-table runs.
const KernelMoments& cmoments() {
    static KernelMoments m = radial_moments(ref(), 128);
    return m;
}
const DiskGrid& cgrid() {
    static DiskGrid g = disk_grid(ref(), 60, 32, 0.8);
    return g;
}

std::vector<Complex> radial_sweep(double lo, double hi, int n) {
    std::vector<Complex> out;
    for (int i = 0; i < n; ++i) out.push_back(Complex(lo + (hi - lo) * i / (n - 1), 0));
    return out;
}

SymbolPair make(PowerSeries phi, PowerSeries g) { return SymbolPair{std::move(phi), std::move(g)}; }

}  // namespace

TEST_CASE("zero symbol g collapses every criterion to a bounded verdict") {
    SymbolPair s = make(PowerSeries::monomial(1, 0.5), PowerSeries::zero(4));
    std::vector<Complex> sweep = radial_sweep(0.3, 0.6, 4);
    for (OperatorKind k : {OperatorKind::GI, OperatorKind::GV, OperatorKind::Vg,
                           OperatorKind::Jg}) {
        CriterionReport rep = evaluate_boundedness(k, s, 1, 1, sweep, cgrid(), cmoments(), ref());
        CHECK(rep.statistic == 0.0);
        CHECK(rep.verdict == Verdict::BoundedIndicated);
    }
}

TEST_CASE("GB transform is q-homogeneous in g") {
    SymbolPair s1 = make(PowerSeries::monomial(1, 0.5), PowerSeries::monomial(1));
    SymbolPair s3 = make(PowerSeries::monomial(1, 0.5), PowerSeries::monomial(1, 3.0));
    for (double q : {1.0, 2.0}) {
        for (int n : {0, 1}) {
            double a = GB_transform(n, 1, q, s1, Complex(0.4, 0), cgrid(), cmoments(), ref());
            double b = GB_transform(n, 1, q, s3, Complex(0.4, 0), cgrid(), cmoments(), ref());
            CHECK(a > 0);
            CHECK(b == doctest::Approx(std::pow(3.0, q) * a).epsilon(1e-12));
        }
    }
}

TEST_CASE("pointwise symbol functions at the identity symbol") {
    const RadialWeight& w = ref();
    PowerSeries g = PowerSeries::monomial(2, Complex(1.0, -2.0));
    SymbolPair s = make(PowerSeries::identity(), g);
    for (double r : {0.2, 0.5, 0.8}) {
        Complex z(r, 0);
        double gv = std::abs(evaluate(g, z));
        CHECK(pointwise_symbol_function(SymbolFunctionKind::NI, s, z, 2, w) ==
              doctest::Approx(gv).epsilon(1e-13));
        CHECK(pointwise_symbol_function(SymbolFunctionKind::NV, s, z, 2, w) ==
              doctest::Approx(gv / (1.0 + w.phi1(r))).epsilon(1e-13));
        for (double p : {1.0, 2.0}) {
            double lap = std::pow(w.laplacian(r), 1.0 / p);
            CHECK(pointwise_symbol_function(SymbolFunctionKind::MI, s, z, p, w) ==
                  doctest::Approx(gv * lap).epsilon(1e-13));
            CHECK(pointwise_symbol_function(SymbolFunctionKind::MV, s, z, p, w) ==
                  doctest::Approx(gv * lap / (1.0 + w.phi1(r))).epsilon(1e-13));
        }
    }
    SymbolPair out = make(PowerSeries::constant(1.5, 1), g);
    CHECK_THROWS_AS(pointwise_symbol_function(SymbolFunctionKind::NI, out, Complex(0.1, 0), 2, w),
                    std::domain_error);
}

TEST_CASE("NV decays to zero along the boundary for a contracting symbol") {
    SymbolPair s = make(PowerSeries::monomial(1, 0.5), PowerSeries::constant(1.0));
    double prev = 1e300, first = 0;
    for (double r : {0.5, 0.7, 0.85, 0.95}) {
        double v = pointwise_symbol_function(SymbolFunctionKind::NV, s, Complex(r, 0), 2, ref());
        if (first == 0) first = v;
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 1e-3 * first);
}

TEST_CASE("necessary-condition functions at the identity symbol") {
    const RadialWeight& w = ref();
    PowerSeries g = PowerSeries::monomial(1, Complex(0.5, 1.5));
    SymbolPair s = make(PowerSeries::identity(), g);
    for (double r : {0.3, 0.6, 0.85}) {
        Complex z(r, 0);
        double gv = std::abs(evaluate(g, z));
        CHECK(necessary_condition(OperatorKind::GI, s, z, 2, 2, w) ==
              doctest::Approx(gv).epsilon(1e-13));
        CHECK(necessary_condition(OperatorKind::GV, s, z, 2, 2, w) ==
              doctest::Approx(gv / (1.0 + w.phi1(r))).epsilon(1e-13));
        // Mixed exponents pick up the tau ratio.
        double tr = std::pow(w.tau(r), 2.0 / 4.0) / std::pow(w.tau(r), 2.0 / 2.0);
        CHECK(necessary_condition(OperatorKind::GV, s, z, 2, 4, w) ==
              doctest::Approx(tr * gv / (1.0 + w.phi1(r))).epsilon(1e-13));
    }
}

TEST_CASE("Carleson average: empty and point-mass measures") {
    const RadialWeight& w = ref();
    Complex z(0.5, 0);
    double t = w.tau(0.5);
    DiscreteMeasure empty{Eigen::ArrayXcd::Zero(1), Eigen::ArrayXd::Zero(1)};
    CHECK(carleson_average(empty, w, 0.1, z) == 0.0);

    DiscreteMeasure pm;
    pm.nodes = Eigen::ArrayXcd::Constant(1, z + Complex(0.01, 0));
    pm.masses = Eigen::ArrayXd::Constant(1, 2.5);
    CHECK(carleson_average(pm, w, 0.5, z) == doctest::Approx(2.5 / (t * t)).epsilon(1e-14));
    // Outside the delta*tau disk the mass is invisible.
    CHECK(carleson_average(pm, w, 0.01, z) == 0.0);
}

TEST_CASE("Berezin transform: linearity and point-mass size") {
    const RadialWeight& w = ref();
    DiscreteMeasure a, b;
    a.nodes = Eigen::ArrayXcd::Constant(1, Complex(0.4, 0.1));
    a.masses = Eigen::ArrayXd::Constant(1, 1.0);
    b.nodes = Eigen::ArrayXcd::Constant(1, Complex(0.2, -0.3));
    b.masses = Eigen::ArrayXd::Constant(1, 3.0);
    DiscreteMeasure ab;
    ab.nodes.resize(2);
    ab.nodes << a.nodes[0], b.nodes[0];
    ab.masses.resize(2);
    ab.masses << a.masses[0], b.masses[0];
    Complex z(0.5, 0);
    double ga = berezin_G_t(a, 2, z, moments(), grid(), w);
    double gb = berezin_G_t(b, 2, z, moments(), grid(), w);
    double gab = berezin_G_t(ab, 2, z, moments(), grid(), w);
    CHECK(gab == doctest::Approx(ga + gb).epsilon(1e-12));

    // Unit point mass sitting at z itself: G_2 ~ tau(z)^{-2} up to a kernel band.
    for (double r : {0.4, 0.6, 0.8}) {
        Complex c(r, 0);
        DiscreteMeasure pm;
        pm.nodes = Eigen::ArrayXcd::Constant(1, c);
        pm.masses = Eigen::ArrayXd::Constant(1, 1.0);
        double v = berezin_G_t(pm, 2, c, moments(), grid(), w) * w.tau(r) * w.tau(r);
        CHECK(v > 0.3);
        CHECK(v < 1.0);
    }
}

TEST_CASE("Berezin and Carleson views of a smooth measure are comparable") {
    const RadialWeight& w = ref();
    SymbolPair s = make(PowerSeries::monomial(1, 0.5), PowerSeries::constant(1.0));
    DiscreteMeasure mu = pullback_measure(s, w, grid(), 1, 0);
    double delta = m_tau(w);
    double lo = 1e300, hi = 0;
    for (double r : {0.4, 0.5, 0.6, 0.7}) {
        Complex z(r, 0);
        double g2 = berezin_G_t(mu, 2, z, moments(), grid(), w);
        double ca = carleson_average(mu, w, delta, z);
        CHECK(ca > 0);
        double ratio = g2 / ca;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 10.0);
}

TEST_CASE("embedding functionals") {
    const RadialWeight& w = ref();
    Complex z(0.5, 0);
    DiscreteMeasure empty{Eigen::ArrayXcd::Zero(1), Eigen::ArrayXd::Zero(1)};
    EmbeddingValue e0 = embedding_functional(empty, w, 0.2, z, 2, 1);
    CHECK(e0.K_integrand == 0.0);
    CHECK(e0.F_value == 0.0);

    SymbolPair s = make(PowerSeries::monomial(1, 0.5), PowerSeries::constant(1.0));
    DiscreteMeasure mu = pullback_measure(s, w, grid(), 2, 0);
    EmbeddingValue eq = embedding_functional(mu, w, 0.2, z, 2, 2);
    CHECK(eq.K_integrand == doctest::Approx(eq.F_value).epsilon(1e-14));
    CHECK(std::isfinite(eq.F_value));
    CHECK(eq.F_value > 0);
    // For q < p the K functional carries a milder tau power.
    EmbeddingValue em = embedding_functional(mu, w, 0.2, z, 2, 1);
    CHECK(em.K_integrand == doctest::Approx(em.F_value * w.tau(0.5)).epsilon(1e-13));
}

TEST_CASE("GV with identity symbol and bounded g is indicated bounded") {
    SymbolPair s = make(PowerSeries::identity(), PowerSeries::constant(1.0));
    std::vector<Complex> sweep = radial_sweep(0.3, 0.9, 13);
    CriterionReport rep =
        evaluate_boundedness(OperatorKind::GV, s, 2, 2, sweep, grid(), moments(), ref());
    CHECK(rep.verdict == Verdict::BoundedIndicated);
    CHECK(rep.extension_change < 0.10);
    CHECK(rep.statistic > 0);
    CHECK(rep.statistic_kind == "sup");
    REQUIRE(rep.cor2_sup_psi_g.has_value());
    double want = 0;
    for (Complex z : sweep) want = std::max(want, ref().psi(std::abs(z)));
    CHECK(*rep.cor2_sup_psi_g == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("GI into a larger exponent with g = 1 is indicated unbounded") {
    SymbolPair s = make(PowerSeries::identity(), PowerSeries::constant(1.0));
    std::vector<Complex> sweep = radial_sweep(0.3, 0.9, 13);
    CriterionReport rep =
        evaluate_boundedness(OperatorKind::GI, s, 2, 4, sweep, grid(), moments(), ref());
    CHECK(rep.verdict == Verdict::UnboundedIndicated);
    CHECK(rep.growth_ratio >= 10.0);
}

TEST_CASE("statistic scales like |c|^q under g -> c g; verdict is scale-invariant") {
    std::vector<Complex> sweep = radial_sweep(0.3, 0.9, 13);
    SymbolPair s1 = make(PowerSeries::identity(), PowerSeries::constant(1.0));
    SymbolPair s3 = make(PowerSeries::identity(), PowerSeries::constant(3.0));
    CriterionReport r1 =
        evaluate_boundedness(OperatorKind::GV, s1, 2, 2, sweep, grid(), moments(), ref());
    CriterionReport r3 =
        evaluate_boundedness(OperatorKind::GV, s3, 2, 2, sweep, grid(), moments(), ref());
    CHECK(r3.statistic == doctest::Approx(9.0 * r1.statistic).epsilon(1e-10));
    CHECK(r3.verdict == r1.verdict);
}

TEST_CASE("a boundary-concentrated g separates from a constant g") {
    std::vector<Complex> sweep = radial_sweep(0.3, 0.9, 13);
    SymbolPair flat = make(PowerSeries::identity(), PowerSeries::constant(1.0));
    Eigen::ArrayXcd c = Eigen::ArrayXcd::Ones(41);
    SymbolPair peaked = make(PowerSeries::identity(), PowerSeries(c));
    CriterionReport rf =
        evaluate_boundedness(OperatorKind::GV, flat, 2, 2, sweep, grid(), moments(), ref());
    CriterionReport rp =
        evaluate_boundedness(OperatorKind::GV, peaked, 2, 2, sweep, grid(), moments(), ref());
    CHECK(rp.statistic > 1.5 * rf.statistic);
    CHECK(rp.boundary_trend > rf.boundary_trend);
}

TEST_CASE("case table covers every exponent combination") {
    std::vector<Complex> sweep = radial_sweep(0.3, 0.45, 2);
    SymbolPair s = make(PowerSeries::monomial(1, 0.5), PowerSeries::monomial(1));
    double inf = kInfExponent;
    // p = 2 is excluded: its kernel-norm self-check needs the full grid.
    for (double p : {1.0, 2.5, 3.0, inf}) {
        for (double q : {1.0, 2.0, 4.0, inf}) {
            for (OperatorKind k : {OperatorKind::GI, OperatorKind::GV}) {
                CriterionReport rep =
                    evaluate_boundedness(k, s, p, q, sweep, cgrid(), cmoments(), ref());
                CHECK(std::isfinite(rep.statistic));
                CHECK(rep.statistic >= 0);
                CHECK(rep.sweep.size() == sweep.size());
                bool sup_case = (p <= q);
                CHECK(rep.statistic_kind == (sup_case ? "sup" : "Ls_dlambda"));
                if (!sup_case) {
                    double want_s = std::isinf(p) ? 1.0 : p / (p - q);
                    CHECK(rep.s_exponent == doctest::Approx(want_s).epsilon(1e-14));
                }
                std::string j = rep.to_json();
                CHECK(j.find("\"verdict\"") != std::string::npos);
            }
        }
    }
}

TEST_CASE("report serialization") {
    std::vector<Complex> sweep = radial_sweep(0.3, 0.5, 3);
    SymbolPair s = make(PowerSeries::identity(), PowerSeries::constant(1.0));
    CriterionReport rep =
        evaluate_boundedness(OperatorKind::Vg, s, 1, 1, sweep, cgrid(), cmoments(), ref());
    std::string csv = rep.sweep_csv();
    CHECK(csv.rfind("z_re,z_im,value\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    std::string j = rep.to_json();
    CHECK(j.find("\"criterion\": \"Vg\"") != std::string::npos);
    CHECK(j.find("\"statistic\"") != std::string::npos);
    // Infinite exponents serialize as -1.
    CriterionReport ri = evaluate_boundedness(OperatorKind::GV, s, kInfExponent, kInfExponent,
                                              sweep, cgrid(), cmoments(), ref());
    CHECK(ri.to_json().find("\"p\": -1.0") != std::string::npos);
}
