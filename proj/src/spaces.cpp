#include "bergman/spaces.hpp"

#include <cmath>

namespace bergman {

namespace {

double sup_weighted(const PowerSeries& f, const DiskGrid& grid, const RadialWeight& w,
                    bool s_space) {
    auto density = [&](double r) {
        double d = std::sqrt(w.omega(r));
        return s_space ? d / (1.0 + w.phi1(r)) : d;
    };
    double best = 0;
    Eigen::Index best_j = 0;
    for (Eigen::Index j = 0; j < grid.nodes.size(); ++j) {
        double v = std::abs(evaluate(f, grid.nodes[j])) * density(grid.node_abs[j]);
        if (v > best) { best = v; best_j = j; }
    }
    // Refinement patch around the winning node.
    double r0 = grid.node_abs[best_j];
    double th0 = std::arg(grid.nodes[best_j]);
    double dr = (grid.r_max - 0.0) / grid.n_r;
    double dth = 2.0 * M_PI / grid.n_theta;
    for (int a = -8; a <= 8; ++a)
        for (int t = -8; t <= 8; ++t) {
            double r = r0 + a * dr / 8.0;
            if (r < 0 || r > grid.r_max) continue;
            double v = std::abs(evaluate(f, std::polar(r, th0 + t * dth / 8.0))) * density(r);
            best = std::max(best, v);
        }
    return best;
}

}  // namespace

NormReport norm(const PowerSeries& f, Space space, double p, const DiskGrid& grid,
                const RadialWeight& w) {
    if (!(p > 0)) throw std::invalid_argument("norm: p must be positive");
    NormReport rep;
    rep.space = space;
    rep.p = p;
    rep.r_max = grid.r_max;

    if (space == Space::Ainf || space == Space::Sinf) {
        rep.value = sup_weighted(f, grid, w, space == Space::Sinf);
        return rep;
    }

    bool s_space = (space == Space::Sp);
    double acc = 0;
    Eigen::Index idx = 0;
    for (int jr = 0; jr < grid.n_r; ++jr) {
        double r = grid.radii[jr];
        double dens = std::pow(w.omega(r), p / 2.0);
        if (s_space) dens /= std::pow(1.0 + w.phi1(r), p);
        for (int i = 0; i < grid.n_theta; ++i, ++idx)
            acc += grid.weights[idx] * std::pow(std::abs(evaluate(f, grid.nodes[idx])), p) * dens;
    }
    rep.value = std::pow(acc, 1.0 / p);
    return rep;
}

double littlewood_paley_ratio(const PowerSeries& f, double p, const DiskGrid& grid,
                              const RadialWeight& w) {
    PowerSeries fp = differentiate(f);
    double f0 = std::abs(f.coeff(0));
    double num, den;
    if (std::isinf(p)) {
        num = f0 + norm(fp, Space::Sinf, p, grid, w).value;
        den = norm(f, Space::Ainf, p, grid, w).value;
    } else {
        double d = norm(fp, Space::Sp, p, grid, w).value;
        num = std::pow(std::pow(f0, p) + std::pow(d, p), 1.0 / p);
        den = norm(f, Space::Ap, p, grid, w).value;
    }
    if (den == 0) throw std::invalid_argument("littlewood_paley_ratio: f has zero norm");
    return num / den;
}

PowerSeries atomic_family(const Lattice& lattice, const KernelMoments& m, const DiskGrid& grid,
                          double p, const Eigen::ArrayXcd& coefficients) {
    if (coefficients.size() != lattice.size())
        throw std::invalid_argument("atomic_family: coefficient count must match lattice size");
    const RadialWeight& w = lattice.weight;
    PowerSeries F = PowerSeries::zero(m.max_index());
    for (Eigen::Index k = 0; k < lattice.size(); ++k) {
        Complex lam = coefficients[k];
        if (lam == Complex(0)) continue;
        Complex a = lattice.centers[k];
        if (std::abs(a) < 0.3) continue;  // proxy atoms live away from the center
        double scale_fac = std::isinf(p) ? 1.0 : std::pow(w.tau(std::abs(a)), -2.0 / p);
        F = add(F, scale(test_function(m, grid, a), lam * scale_fac));
    }
    return F;
}

}  // namespace bergman
