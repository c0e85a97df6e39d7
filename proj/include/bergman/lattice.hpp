#ifndef BERGMAN_LATTICE_HPP
#define BERGMAN_LATTICE_HPP

#include <Eigen/Core>

#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"
#include "bergman/weight.hpp"

namespace bergman {

/// A (delta,tau)-lattice on the sub-disk |z| <= r_max: centers whose
/// delta*tau disks are pairwise separated yet cover the sub-disk.
struct Lattice {
    Eigen::ArrayXcd centers;
    double delta = 0;
    double r_max = 0;
    RadialWeight weight;

    Eigen::Index size() const { return centers.size(); }
};

struct CoveringReport {
    bool separation_ok = false;
    bool coverage_ok = false;
    int multiplicity_max = 0;   // overlap count of the 3*delta disks
    Eigen::Index n_centers = 0;
    double tau_last = 0;        // tau at the outermost center
};

/// Greedy ring construction followed by separation pruning and a coverage
/// repair pass over a fine probe set.
Lattice build_lattice(const RadialWeight& w, double delta, double r_max);

CoveringReport verify_lattice(const Lattice& L, const DiskGrid& probe);

}  // namespace bergman

#endif
