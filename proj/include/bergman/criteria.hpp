#ifndef BERGMAN_CRITERIA_HPP
#define BERGMAN_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "bergman/kernel.hpp"
#include "bergman/operators.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/weight.hpp"

namespace bergman {

struct DiscreteMeasure {
    Eigen::ArrayXcd nodes;
    Eigen::ArrayXd masses;  // nonnegative

    double total_mass() const { return masses.sum(); }
};

/// Mass = integrand x node weight for |g|^q omega^{q/2} (1+phi')^{-q} dA,
/// with an extra (1+phi'(phi(xi)))^{nq} factor when n = 1.
DiscreteMeasure pullback_measure(const SymbolPair& s, const RadialWeight& w, const DiskGrid& grid,
                                 double q, int n);

/// Discretization of f(z) dA(z) on the grid.
template <typename F>
DiscreteMeasure measure_from_density(const DiskGrid& grid, F&& f) {
    DiscreteMeasure mu;
    mu.nodes = grid.nodes;
    mu.masses.resize(grid.nodes.size());
    for (Eigen::Index j = 0; j < grid.nodes.size(); ++j)
        mu.masses[j] = grid.weights[j] * f(grid.nodes[j]);
    return mu;
}

enum class Verdict { BoundedIndicated, UnboundedIndicated, Inconclusive };
std::string to_string(Verdict v);

struct SweepSample {
    Complex z;
    double value;
};

struct CriterionReport {
    std::string criterion;
    double p = 0, q = 0;
    int n = 0;
    double r_max = 0;
    std::vector<SweepSample> sweep;
    double statistic = 0;
    std::string statistic_kind;      // "sup" or "Ls_dlambda"
    double s_exponent = 0;           // for the L^s branch
    Verdict verdict = Verdict::Inconclusive;
    double extension_change = 0;     // relative change under one tau-step of r_max
    double growth_ratio = 0;         // outer value / value one decade of 1-r inward
    double boundary_trend = 0;       // outer-quartile mean / inner-quartile mean
    std::optional<double> cor2_sup_psi_g = {};  // sup psi_omega |g| cross-report

    std::string to_json() const;
    std::string sweep_csv() const;
};

/// Berezin-type transform GB^phi_{n,p,q}(g)(z) by grid quadrature.
double GB_transform(int n, double p, double q, const SymbolPair& s, Complex z,
                    const DiskGrid& grid, const KernelMoments& m, const RadialWeight& w);

enum class SymbolFunctionKind { MI, NI, MV, NV };

/// Pointwise criterion functions for the q = infinity cases.
double pointwise_symbol_function(SymbolFunctionKind kind, const SymbolPair& s, Complex z,
                                 double p, const RadialWeight& w);

/// Necessary-condition functions from the tau/omega ratio bounds.
double necessary_condition(OperatorKind kind, const SymbolPair& s, Complex z, double p, double q,
                           const RadialWeight& w);

/// mu(D_delta(z)) / tau(z)^2.
double carleson_average(const DiscreteMeasure& mu, const RadialWeight& w, double delta, Complex z);

/// G_t(mu)(z) = sum mass_j |k_{t,z}(node_j)|^t omega(node_j)^{t/2}.
double berezin_G_t(const DiscreteMeasure& mu, double t, Complex z, const KernelMoments& m,
                   const DiskGrid& grid, const RadialWeight& w);

struct EmbeddingValue {
    double K_integrand = 0;  // tau^{-2q/p} local sum
    double F_value = 0;      // tau^{-2} local sum
};

EmbeddingValue embedding_functional(const DiscreteMeasure& mu, const RadialWeight& w, double delta,
                                    Complex z, double p, double q);

/// Full case-table evaluation of the boundedness criteria with verdict.
CriterionReport evaluate_boundedness(OperatorKind kind, const SymbolPair& s, double p, double q,
                                     const std::vector<Complex>& sweep, const DiskGrid& grid,
                                     const KernelMoments& m, const RadialWeight& w);

}  // namespace bergman

#endif
