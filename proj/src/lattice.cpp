#include "bergman/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bergman {

namespace {

// Dense cell grid over a radial zone. Cells are sized to the zone's smallest
// tau, so a neighbor query touches O(1) cells at every radius even though
// tau varies by orders of magnitude across the disk.
struct Zone {
    double r_lo = 0, r_hi = 0, cell = 1;
    int dim = 0;
    std::vector<int> head;
};

class ZoneIndex {
public:
    ZoneIndex(const RadialWeight& w, double delta, double r_cap) {
        r_cap = std::max(r_cap, 1e-6);
        double lo = 0.0;
        for (;;) {
            double t_lo = w.tau(lo);
            double hi = r_cap;
            if (w.tau(r_cap) <= 0.5 * t_lo) {
                double a = lo, b = r_cap;
                for (int it = 0; it < 60; ++it) {
                    double mid = 0.5 * (a + b);
                    (w.tau(mid) > 0.5 * t_lo ? a : b) = mid;
                }
                hi = b;
            }
            Zone z;
            z.r_lo = lo;
            z.r_hi = hi;
            // Clamp the cell so a zone never exceeds ~4096^2 cells.
            z.cell = std::max(delta * w.tau(hi), 2.0 * hi / 4096.0);
            z.dim = int(std::ceil(2.0 * hi / z.cell)) + 2;
            z.head.assign(std::size_t(z.dim) * std::size_t(z.dim), -1);
            zones_.push_back(std::move(z));
            if (hi >= r_cap) break;
            lo = hi;
        }
    }

    void insert(Complex p, int id) {
        Zone& z = zones_[zone_of(std::abs(p))];
        if (int(next_.size()) <= id) next_.resize(id + 1, -1);
        int c = cell_of(z, p);
        next_[id] = z.head[c];
        z.head[c] = id;
    }

    template <typename Visit>
    void for_neighbors(Complex p, double radius, Visit&& visit) const {
        double r = std::abs(p);
        for (const Zone& z : zones_) {
            if (z.r_hi < r - radius || z.r_lo > r + radius) continue;
            int ix0 = std::max(0, int(std::floor((p.real() - radius + z.r_hi) / z.cell)));
            int ix1 = std::min(z.dim - 1, int(std::floor((p.real() + radius + z.r_hi) / z.cell)));
            int iy0 = std::max(0, int(std::floor((p.imag() - radius + z.r_hi) / z.cell)));
            int iy1 = std::min(z.dim - 1, int(std::floor((p.imag() + radius + z.r_hi) / z.cell)));
            for (int iy = iy0; iy <= iy1; ++iy)
                for (int ix = ix0; ix <= ix1; ++ix)
                    for (int id = z.head[std::size_t(iy) * z.dim + ix]; id >= 0; id = next_[id])
                        visit(id);
        }
    }

private:
    int zone_of(double r) const {
        for (std::size_t i = 0; i + 1 < zones_.size(); ++i)
            if (r < zones_[i].r_hi) return int(i);
        return int(zones_.size()) - 1;
    }
    static int cell_of(const Zone& z, Complex p) {
        int ix = std::clamp(int(std::floor((p.real() + z.r_hi) / z.cell)), 0, z.dim - 1);
        int iy = std::clamp(int(std::floor((p.imag() + z.r_hi) / z.cell)), 0, z.dim - 1);
        return iy * z.dim + ix;
    }

    std::vector<Zone> zones_;
    std::vector<int> next_;
};

struct Builder {
    const RadialWeight& w;
    double delta;
    std::vector<Complex> centers;
    std::vector<double> taus;
    ZoneIndex index;

    Builder(const RadialWeight& w_, double delta_, double r_cap)
        : w(w_), delta(delta_), index(w_, delta_, r_cap) {}

    bool separated(Complex z, double tz) const {
        bool ok = true;
        index.for_neighbors(z, delta * 2.0 * tz, [&](int id) {
            if (!ok) return;
            double d = std::abs(z - centers[id]);
            if (d < delta * taus[id] - 1e-12 || d < delta * tz - 1e-12) ok = false;
        });
        return ok;
    }

    bool covered(Complex z, double tz, double margin = 1.0) const {
        bool hit = false;
        index.for_neighbors(z, delta * 2.0 * tz, [&](int id) {
            if (hit) return;
            if (std::abs(z - centers[id]) < margin * delta * taus[id]) hit = true;
        });
        return hit;
    }

    void try_add(Complex z) {
        double tz = w.tau(std::abs(z));
        if (!separated(z, tz)) return;
        index.insert(z, int(centers.size()));
        centers.push_back(z);
        taus.push_back(tz);
    }
};

// Ring radii by tau-stepping, then stretched so the outermost ring lands
// exactly on r_max. The stretch factor stays close to 1, so the radial gaps
// remain within [delta*tau, ~1.25*delta*tau]: separated yet covering.
std::vector<double> ring_radii(const RadialWeight& w, double delta, double r_max) {
    std::vector<double> rr;
    if (r_max <= 0) return rr;
    double r = 0;
    for (;;) {
        double rn = r + delta * w.tau(r);
        if (rn >= r_max) break;
        rr.push_back(rn);
        r = rn;
    }
    if (rr.empty()) {
        if (r_max >= delta * w.tau(0.0) - 1e-12) rr.push_back(r_max);
        return rr;
    }
    double f = r_max / rr.back();
    if (f <= 1.25) {
        for (double& x : rr) x *= f;
        rr.back() = r_max;
    } else if (r_max - rr.back() >= delta * w.tau(r_max)) {
        rr.push_back(r_max);
    }
    return rr;
}

// Polar raster with locally tau-proportional spacing; disks are painted onto
// it to certify coverage and to bound the overlap multiplicity.
struct Raster {
    std::vector<double> rr;          // ring radii
    std::vector<int> n;              // points per ring
    std::vector<std::size_t> off;    // offset of ring into the flat arrays
    std::vector<Complex> step;       // e^{2 pi i / n} per ring
    std::size_t total = 0;

    Raster(const RadialWeight& w, double spacing_factor, double delta, double r_max) {
        double r = 0;
        for (;;) {
            rr.push_back(r);
            if (r >= r_max) break;
            r = std::min(r + spacing_factor * delta * w.tau(r), r_max);
        }
        n.resize(rr.size());
        off.resize(rr.size());
        step.resize(rr.size());
        for (std::size_t i = 0; i < rr.size(); ++i) {
            double s = spacing_factor * delta * w.tau(rr[i]);
            n[i] = std::max(1, int(std::ceil(2.0 * M_PI * rr[i] / s)));
            off[i] = total;
            total += std::size_t(n[i]);
            step[i] = std::polar(1.0, 2.0 * M_PI / n[i]);
        }
    }

    // Visit raster points within `radius` of center `zk`.
    template <typename Visit>
    void paint(Complex zk, double radius, Visit&& visit) const {
        double rk = std::abs(zk), th = std::arg(zk);
        auto lo = std::lower_bound(rr.begin(), rr.end(), rk - radius);
        double r2 = radius * radius;
        for (std::size_t i = std::size_t(lo - rr.begin()); i < rr.size() && rr[i] <= rk + radius;
             ++i) {
            double ri = rr[i];
            int ni = n[i];
            int j0 = 0, j1 = ni - 1;
            if (ri > 0 && radius < ri + rk) {
                double cosd = (ri * ri + rk * rk - r2) / (2.0 * ri * rk);
                if (cosd > 1.0) continue;
                double dmax = std::acos(std::max(cosd, -1.0));
                double tstep = 2.0 * M_PI / ni;
                j0 = int(std::floor((th - dmax) / tstep));
                j1 = int(std::ceil((th + dmax) / tstep));
                if (j1 - j0 >= ni) { j0 = 0; j1 = ni - 1; }
            }
            Complex p = ri * std::polar(1.0, 2.0 * M_PI * j0 / ni);
            for (int j = j0; j <= j1; ++j, p *= step[i]) {
                if (std::norm(p - zk) < r2) {
                    int jj = j % ni;
                    if (jj < 0) jj += ni;
                    visit(off[i] + std::size_t(jj));
                }
            }
        }
    }
};

}  // namespace

Lattice build_lattice(const RadialWeight& w, double delta, double r_max) {
    double mt = m_tau(w);
    if (!(delta > 0 && delta < mt))
        throw std::invalid_argument("build_lattice: delta must lie in (0, m_tau) with m_tau=" +
                                    std::to_string(mt));
    if (!(r_max >= 0 && r_max < 1))
        throw std::invalid_argument("build_lattice: r_max must lie in [0, 1)");

    Builder b(w, delta, r_max);
    b.try_add(Complex(0, 0));
    int ring = 0;
    for (double r : ring_radii(w, delta, r_max)) {
        ++ring;
        double t = delta * w.tau(r);
        double half = std::min(1.0, t / (2.0 * r));
        int n = std::max(1, int(std::floor(M_PI / std::asin(half))));
        double phase = 0.5 * ring;  // de-align consecutive rings
        for (int i = 0; i < n; ++i)
            b.try_add(std::polar(r, phase + 2.0 * M_PI * i / n));
    }

    // Coverage repair on a quarter-step probe sweep. Repairing against the
    // 0.8 margin leaves enough slack that points between probes stay inside
    // a full-radius disk.
    for (int pass = 0; pass < 8; ++pass) {
        double rp = 0;
        bool added = false;
        for (;;) {
            double t = delta * w.tau(rp);
            int n = std::max(1, int(std::ceil(2.0 * M_PI * rp / (0.25 * t))));
            for (int i = 0; i < n; ++i) {
                Complex z = std::polar(rp, 2.0 * M_PI * i / n);
                double tz = w.tau(std::abs(z));
                if (!b.covered(z, tz, 0.8) && b.separated(z, tz)) {
                    b.try_add(z);
                    added = true;
                }
            }
            if (rp >= r_max) break;
            rp = std::min(rp + 0.25 * t, r_max);
        }
        if (!added) break;
    }

    Lattice L{Eigen::Map<const Eigen::ArrayXcd>(b.centers.data(), Eigen::Index(b.centers.size())),
              delta, r_max, w};
    return L;
}

CoveringReport verify_lattice(const Lattice& L, const DiskGrid& probe) {
    const RadialWeight& w = L.weight;
    CoveringReport rep;
    rep.n_centers = L.size();
    if (L.size() == 0) {
        rep.separation_ok = true;
        rep.coverage_ok = false;
        return rep;
    }

    std::vector<Complex> centers(L.size());
    std::vector<double> taus(L.size());
    double r_best = 0;
    for (Eigen::Index k = 0; k < L.size(); ++k) {
        centers[k] = L.centers[k];
        taus[k] = w.tau(std::abs(L.centers[k]));
        r_best = std::max(r_best, std::abs(L.centers[k]));
    }
    rep.tau_last = w.tau(r_best);

    ZoneIndex index(w, L.delta, std::max(L.r_max, r_best));
    for (Eigen::Index k = 0; k < L.size(); ++k) index.insert(centers[k], int(k));

    rep.separation_ok = true;
    for (Eigen::Index k = 0; k < L.size() && rep.separation_ok; ++k) {
        index.for_neighbors(centers[k], L.delta * 2.0 * taus[k], [&](int id) {
            if (id == int(k)) return;
            double d = std::abs(centers[k] - centers[id]);
            if (d < L.delta * taus[id] - 1e-10) rep.separation_ok = false;
        });
    }

    // Coverage and multiplicity at the caller's probe nodes.
    rep.coverage_ok = true;
    int mult_max = 0;
    for (Eigen::Index j = 0; j < probe.nodes.size(); ++j) {
        Complex p = probe.nodes[j];
        double ap = probe.node_abs[j];
        if (ap > L.r_max + 1e-15) continue;
        double tp = w.tau(ap);
        bool cov = false;
        int mult = 0;
        index.for_neighbors(p, 6.5 * L.delta * tp, [&](int id) {
            double d = std::abs(p - centers[id]);
            if (d < L.delta * taus[id]) cov = true;
            if (d < 3.0 * L.delta * taus[id]) ++mult;
        });
        if (!cov) rep.coverage_ok = false;
        mult_max = std::max(mult_max, mult);
    }

    // Certified coverage: paint every disk onto a raster with local spacing
    // delta*tau/8 and demand that no raster point stays unpainted.
    {
        Raster fine(w, 1.0 / 8.0, L.delta, L.r_max);
        std::vector<std::uint8_t> hit(fine.total, 0);
        for (Eigen::Index k = 0; k < L.size(); ++k)
            fine.paint(centers[k], L.delta * taus[k], [&](std::size_t idx) { hit[idx] = 1; });
        for (std::uint8_t h : hit)
            if (!h) { rep.coverage_ok = false; break; }
    }

    // Multiplicity of the 3*delta disks on a half-step raster.
    {
        Raster coarse(w, 0.5, L.delta, L.r_max);
        std::vector<std::uint16_t> cnt(coarse.total, 0);
        for (Eigen::Index k = 0; k < L.size(); ++k)
            coarse.paint(centers[k], 3.0 * L.delta * taus[k], [&](std::size_t idx) {
                if (cnt[idx] < 65535) ++cnt[idx];
            });
        for (std::uint16_t c : cnt) mult_max = std::max(mult_max, int(c));
    }
    rep.multiplicity_max = mult_max;
    return rep;
}

}  // namespace bergman
