#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bergman/kernel.hpp"
#include "bergman/spaces.hpp"

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

double spread(double lo, double hi) { return hi / lo; }

}  // namespace

TEST_CASE("K_0 is the constant 1/c_0") {
    const KernelMoments& m = moments();
    for (Complex zeta : {Complex(0.3, 0.1), Complex(-0.7, 0.2), Complex(0, 0)})
        CHECK(kernel_eval(m, Complex(0, 0), zeta) == Complex(1.0 / m.c[0]));
}

TEST_CASE("Hermitian symmetry of the kernel") {
    const KernelMoments& m = moments();
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> U(-0.6, 0.6);
    for (int i = 0; i < 50; ++i) {
        Complex z(U(rng), U(rng)), zeta(U(rng), U(rng));
        Complex a = kernel_eval(m, z, zeta);
        Complex b = kernel_eval(m, zeta, z);
        CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("diagonal value matched by brute-force <K,K> quadrature") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    double diag = kernel_eval(m, Complex(0.5, 0), Complex(0.5, 0)).real();
    double quad = integrate_real(grid(), [&](Complex zeta) {
        return std::norm(kernel_eval_raw(m, Complex(0.5, 0), zeta)) * w.omega(std::abs(zeta));
    });
    CHECK(quad == doctest::Approx(diag).epsilon(1e-6));
}

TEST_CASE("p=2 norm equals K_z(z)^{1/2}") {
    const KernelMoments& m = moments();
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.8, 0.9}) {
        double nrm = kernel_norm(m, grid(), Complex(r, 0), 2.0);
        double diag = std::sqrt(kernel_eval_raw(m, Complex(r, 0), Complex(r, 0)).real());
        CHECK(nrm == doctest::Approx(diag).epsilon(1e-6));
    }
}

TEST_CASE("norm of K_0 reduces to the norm of a constant") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    for (double p : {1.0, 2.0}) {
        double nrm = kernel_norm(m, grid(), Complex(0, 0), p);
        double wint = integrate_real(grid(), [&](Complex zeta) {
            return std::pow(w.omega(std::abs(zeta)), p / 2.0);
        });
        CHECK(nrm == doctest::Approx(std::pow(wint, 1.0 / p) / m.c[0]).epsilon(1e-10));
    }
}

TEST_CASE("norm growth bands across [0.3, 0.9]") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    for (double p : {1.0, 2.0, kInfExponent}) {
        double lo = 1e300, hi = 0;
        for (int i = 0; i < 13; ++i) {
            double r = 0.3 + 0.05 * i;
            double texp = std::isinf(p) ? 2.0 : 2.0 * (p - 1.0) / p;
            double ratio = kernel_norm(m, grid(), Complex(r, 0), p) * std::sqrt(w.omega(r)) *
                           std::pow(w.tau(r), texp);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(lo > 0);
        CHECK(spread(lo, hi) <= 3.0);
    }
}

TEST_CASE("normalized kernel has unit norm") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    for (double p : {1.0, 2.0, kInfExponent}) {
        for (double r : {0.0, 0.5, 0.8}) {
            PowerSeries k = normalized_kernel(m, grid(), Complex(r, 0), p, m.max_index());
            Space sp = std::isinf(p) ? Space::Ainf : Space::Ap;
            // The sup norm refines around the best node, so it can sit a hair
            // above the node-sup used for the normalization.
            double tol = std::isinf(p) ? 1e-3 : 1e-5;
            CHECK(norm(k, sp, p, grid(), w).value == doctest::Approx(1.0).epsilon(tol));
        }
    }
    // k_{p,0} is a constant series
    PowerSeries k0 = normalized_kernel(m, grid(), Complex(0, 0), 2.0, 8);
    for (int j = 1; j <= 8; ++j) CHECK(std::abs(k0.coeff(j)) == 0);
}

TEST_CASE("normalized kernel stays in a band on the tau-disk around z") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    double delta = m_tau(w) / 4.0;
    for (double p : {1.0, 2.0}) {
        double lo = 1e300, hi = 0;
        for (double r : {0.5, 0.7, 0.9}) {
            Complex z(r, 0);
            PowerSeries k = normalized_kernel(m, grid(), z, p, m.max_index());
            double t2 = w.tau(r) * w.tau(r);
            for (double u : {0.0, 0.4, 0.9})
                for (int a = 0; a < 8; ++a) {
                    Complex zeta = z + std::polar(u * delta * w.tau(r), 2.0 * M_PI * a / 8);
                    double v = std::pow(std::abs(evaluate(k, zeta)), p) *
                               std::pow(w.omega(std::abs(zeta)), p / 2.0) * t2;
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
        }
        CHECK(lo > 0);
        CHECK(spread(lo, hi) <= 10.0);
    }
}

TEST_CASE("normalized kernels with different exponents are comparable") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    double p = 2.0, q = 1.0;
    double lo = 1e300, hi = 0;
    for (double r : {0.5, 0.7, 0.9}) {
        Complex z(r, 0);
        PowerSeries kp = normalized_kernel(m, grid(), z, p, m.max_index());
        PowerSeries kq = normalized_kernel(m, grid(), z, q, m.max_index());
        double tfac = std::pow(w.tau(r), 2.0 * (1.0 - q / p));
        for (double u : {0.0, 0.5})
            for (int a = 0; a < 4; ++a) {
                Complex zeta = z + std::polar(u * 0.05 * w.tau(r), 2.0 * M_PI * a / 4);
                double num = std::pow(std::abs(evaluate(kp, zeta)), q);
                double den = tfac * std::pow(std::abs(evaluate(kq, zeta)), q);
                lo = std::min(lo, num / den);
                hi = std::max(hi, num / den);
            }
    }
    CHECK(spread(lo, hi) <= 10.0);
}

TEST_CASE("weighted kernel moments stay in a band for shifted tau powers") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    for (double p : {1.0, 2.0}) {
        for (double beta : {-2.0, 0.0, 2.0}) {
            double lo = 1e300, hi = 0;
            for (double r : {0.5, 0.6, 0.7, 0.8, 0.9}) {
                Complex z(r, 0);
                double integ = integrate_real(grid(), [&](Complex zeta) {
                    double rz = std::abs(zeta);
                    return std::pow(std::abs(kernel_eval_raw(m, z, zeta)), p) *
                           std::pow(w.omega(rz), p / 2.0) * std::pow(w.tau(rz), beta);
                });
                double v = integ * std::pow(w.omega(r), p / 2.0) *
                           std::pow(w.tau(r), -2.0 * (1.0 - p) - beta);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            CHECK(lo > 0);
            CHECK(spread(lo, hi) <= 10.0);
        }
    }
}

TEST_CASE("kernel-proxy test function: on-diagonal size and norm") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    for (double r : {0.5, 0.6, 0.7, 0.8, 0.9}) {
        Complex a(r, 0);
        PowerSeries F = test_function(m, grid(), a);
        double on_diag = std::abs(evaluate(F, a)) * std::sqrt(w.omega(r));
        CHECK(on_diag >= 0.1);
        CHECK(on_diag <= 10.0);
        double expected = std::sqrt(w.omega(r)) * w.tau(r) * w.tau(r) *
                          std::sqrt(kernel_eval_raw(m, a, a).real());
        CHECK(norm(F, Space::Ap, 2.0, grid(), w).value ==
              doctest::Approx(expected).epsilon(1e-5));
    }
    CHECK_THROWS_AS(test_function(m, grid(), Complex(0.1, 0)), std::invalid_argument);
}

TEST_CASE("test function decays off the diagonal toward the boundary") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    double prev = 1e300, first = 0;
    for (double r : {0.5, 0.7, 0.85, 0.93}) {
        Complex a(r, 0);
        PowerSeries F = test_function(m, grid(), a);
        double off = std::abs(evaluate(F, Complex(0, 0))) * std::sqrt(w.omega(0.0));
        double on = std::abs(evaluate(F, a)) * std::sqrt(w.omega(r));
        double ratio = off / on;
        if (first == 0) first = ratio;
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK(prev < 0.05 * first);
}

TEST_CASE("reproducing property for random polynomials") {
    const KernelMoments& m = moments();
    const RadialWeight& w = ref();
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(-1.0, 1.0), Ur(0.0, 0.8);
    for (int trial = 0; trial < 20; ++trial) {
        int deg = 1 + int(rng() % 40);
        Eigen::ArrayXcd co(deg + 1);
        for (int k = 0; k <= deg; ++k) co[k] = Complex(U(rng), U(rng));
        PowerSeries f{co};
        Complex z = std::polar(Ur(rng), 2.0 * M_PI * U(rng));
        Complex got = integrate(grid(), [&](Complex zeta) {
            return evaluate(f, zeta) * std::conj(kernel_eval_raw(m, z, zeta)) *
                   w.omega(std::abs(zeta));
        });
        Complex want = evaluate(f, z);
        CHECK(std::abs(got - want) <= 1e-6 * std::abs(want));
    }
}

TEST_CASE("diagonal strictly increasing in r") {
    const KernelMoments& m = moments();
    double prev = 0;
    for (double r = 0.0; r <= 0.9; r += 0.05) {
        double v = kernel_eval_raw(m, Complex(r, 0), Complex(r, 0)).real();
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("tail bound violation reports a suggested moment count") {
    KernelMoments small = radial_moments(ref(), 8);
    CHECK_THROWS_WITH_AS(kernel_eval(small, Complex(0.9, 0), Complex(0.9, 0)),
                         doctest::Contains("N=16"), std::runtime_error);
    CHECK_THROWS_AS(kernel_eval(moments(), Complex(1.0, 0), Complex(0.5, 0)),
                    std::domain_error);
    // In the convergent regime the checked and raw sums agree.
    Complex a = kernel_eval(moments(), Complex(0.5, 0), Complex(0.4, 0.2));
    Complex b = kernel_eval_raw(moments(), Complex(0.5, 0), Complex(0.4, 0.2));
    CHECK(a == b);
}
