#include "bergman/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bergman {

void gauss_legendre(int n, Eigen::ArrayXd& nodes, Eigen::ArrayXd& weights) {
    nodes.resize(n);
    weights.resize(n);
    int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        nodes[i - 1] = -z;
        nodes[n - i] = z;
        weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[n - i] = weights[i - 1];
    }
}

namespace {

struct GLRule {
    Eigen::ArrayXd x, w;
    explicit GLRule(int n) { gauss_legendre(n, x, w); }
    double apply(const std::function<double(double)>& f, double a, double b) const {
        double mid = 0.5 * (a + b), half = 0.5 * (b - a), s = 0;
        for (Eigen::Index i = 0; i < x.size(); ++i) s += w[i] * f(mid + half * x[i]);
        return s * half;
    }
};

const GLRule& rule20() { static GLRule r(20); return r; }
const GLRule& rule40() { static GLRule r(40); return r; }

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             double coarse, int depth) {
    double fine = rule40().apply(f, a, b);
    if (std::abs(fine - coarse) <= tol || depth > 48) {
        if (depth > 48 && std::abs(fine - coarse) > tol)
            throw std::runtime_error("integrate_adaptive: tolerance not met");
        return fine;
    }
    double mid = 0.5 * (a + b);
    double cl = rule20().apply(f, a, mid), cr = rule20().apply(f, mid, b);
    return adapt(f, a, mid, 0.5 * tol, cl, depth + 1) +
           adapt(f, mid, b, 0.5 * tol, cr, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol) {
    double coarse = rule20().apply(f, a, b);
    double scale = std::max(std::abs(coarse), 1e-300);
    return adapt(f, a, b, rel_tol * scale, coarse, 0);
}

Eigen::ArrayXd radial_moments_profile(const std::function<double(double)>& profile, int N,
                                      double rel_tol) {
    // Panels in u = 1-r, graded toward the boundary layer at u = 0.
    const std::vector<double> bp = {0.0, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.25, 0.5, 1.0};
    Eigen::ArrayXd c(N + 1);
    for (int n = 0; n <= N; ++n) {
        double e = 2.0 * n + 1.0;
        auto f = [&](double u) {
            double r = 1.0 - u;
            if (r <= 0.0) return 0.0;
            double p = profile(r);
            return p == 0.0 ? 0.0 : 2.0 * std::exp(e * std::log(r)) * p;
        };
        double total = 0;
        try {
            for (size_t k = 0; k + 1 < bp.size(); ++k)
                total += integrate_adaptive(f, bp[k], bp[k + 1], rel_tol);
        } catch (const std::runtime_error&) {
            throw std::runtime_error("radial_moments: quadrature did not converge for moment n=" +
                                     std::to_string(n));
        }
        if (!(total > 0) || !std::isfinite(total))
            throw std::runtime_error("radial_moments: non-positive moment n=" + std::to_string(n));
        c[n] = total;
    }
    return c;
}

double auto_r_max(const RadialWeight& w) {
    auto h = [&](double r) {
        return std::log(std::max(w.omega(r), 1e-300)) + 8.0 * std::log1p(w.phi1(r)) -
               std::log(1e-30);
    };
    double lo = 0.5, hi = 1.0 - 1e-12;
    if (h(lo) <= 0) return lo;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (h(mid) > 0 ? lo : hi) = mid;
    }
    return std::min(0.5 * (lo + hi), 0.9999);
}

DiskGrid disk_grid(const RadialWeight& w, int n_r, int n_theta, double r_max) {
    if (!(r_max > 0 && r_max < 1)) throw std::invalid_argument("disk_grid: r_max must lie in (0,1)");
    if (n_theta % 2 != 0) throw std::invalid_argument("disk_grid: n_theta must be even");

    Eigen::ArrayXd t, glw;
    gauss_legendre(n_r, t, glw);
    t = (t + 1.0) / 2.0;   // to [0,1]
    glw = glw / 2.0;

    double L = -std::log(1.0 - r_max);  // 1-r = exp(-L t)
    DiskGrid g;
    g.r_max = r_max;
    g.n_r = n_r;
    g.n_theta = n_theta;
    g.radii.resize(n_r);
    Eigen::ArrayXd wr(n_r);
    for (int j = 0; j < n_r; ++j) {
        double one_minus_r = std::exp(-L * t[j]);
        double r = 1.0 - one_minus_r;
        g.radii[j] = r;
        wr[j] = glw[j] * (L * one_minus_r) * 2.0 * r;  // 2 r dr/dt
    }

    // Spacing near the outer rim must resolve the tau length scale.
    double gap = r_max - g.radii.maxCoeff();
    double tau_b = w.tau(r_max);
    if (gap > 0.25 * tau_b) {
        int suggest = static_cast<int>(std::ceil(n_r * std::sqrt(4.0 * gap / tau_b))) + 1;
        throw std::invalid_argument("disk_grid: n_r too small for the tau spacing rule near r_max; "
                                    "need n_r >= " + std::to_string(suggest));
    }

    g.nodes.resize(Eigen::Index(n_r) * n_theta);
    g.weights.resize(Eigen::Index(n_r) * n_theta);
    g.node_abs.resize(Eigen::Index(n_r) * n_theta);
    Eigen::Index idx = 0;
    for (int j = 0; j < n_r; ++j) {
        for (int i = 0; i < n_theta; ++i) {
            double th = 2.0 * M_PI * i / n_theta;
            g.nodes[idx] = std::polar(g.radii[j], th);
            g.weights[idx] = wr[j] / n_theta;
            g.node_abs[idx] = g.radii[j];
            ++idx;
        }
    }
    return g;
}

}  // namespace bergman
