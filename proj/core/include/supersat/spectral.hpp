#ifndef SUPERSAT_SPECTRAL_HPP
#define SUPERSAT_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

struct SpectralOptions {
    double tol = 1e-10;            // residual tolerance ||Ax - rho x||_2
    long max_iterations = 1000000;
};

/// Spectral radius plus Perron vector of one maximum-rho component.
///
/// x is unit-norm over all of V(G), nonnegative, zero outside
/// dominant_component. For disconnected graphs the component achieving the
/// maximum rho wins, ties broken by lowest minimum vertex index.
struct SpectralResult {
    double rho = 0;
    std::vector<double> x;
    double residual = 0;
    long iterations = 0;
    std::vector<int> dominant_component;
};

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});

/// Phi(G) = rho(G)/sqrt(e(G)).
double phi(const Graph& g, const SpectralOptions& opts = {});

/// Edges with Perron-entry product x_u x_v <= 1/(8 sqrt(m)), lexicographic.
std::vector<Edge> light_edges(const Graph& g, const SpectralResult& spectral);

enum class TerminalReason { no_light_edges, step_cap };

struct PeelStep {
    int edge_count = 0;   // e(G_i)
    double rho = 0;       // rho(G_i)
    double phi = 0;       // Phi(G_i)
    std::optional<Edge> removed;  // light edge removed from G_i (absent at the end)
    double product = 0;           // x_u * x_v for the removed edge
};

/// Trace of the light-edge peeling G_1 > G_2 > ... > G_l; steps[i] records
/// G_{i+1}. Every removal drops exactly one edge; removals <= floor(eps*m) - 1.
struct PeelTrace {
    std::vector<PeelStep> steps;
    double epsilon = 0;
    TerminalReason terminal_reason = TerminalReason::no_light_edges;
    Graph terminal;

    int length() const { return static_cast<int>(steps.size()); }
};

/// Runs the peeling loop: recompute the Perron vector each round, remove one
/// light edge (minimal product, ties lexicographic), stop at the step cap
/// floor(eps*m) or when no light edge remains. The cap is checked first.
PeelTrace peel(const Graph& g, double epsilon, const SpectralOptions& opts = {});

struct Lemma28Violation {
    int step = 0;          // 1-based trace index
    std::string which;     // "i" or "ii"
    double lhs = 0, rhs = 0;
};

/// Stepwise check of the two peeling invariants
///   (i)  rho(G_i) >= sqrt(a e(G_i)) + (i-1)/(5 sqrt(m))
///   (ii) Phi(G_i) - Phi(G_1) >= (i-1)/(5m)
/// under the hypothesis rho(G_1) >= sqrt(a m), with additive slack 1e-9.
struct Lemma28Report {
    bool hypothesis_met = false;
    bool pass = false;
    std::optional<Lemma28Violation> violation;
    double min_margin_i = 0;
    double min_margin_ii = 0;
    double slack = 1e-9;
};

Lemma28Report check_lemma28(const PeelTrace& trace, double a);

struct BoundCheck {
    std::string name;
    double value = 0, bound = 0, margin = 0;
    bool pass = false;
};

/// Entry bounds, order bound and min-degree bound for a light-edge-free
/// graph with rho >= sqrt(a m), a in (1,2].
struct Lemma28iiiReport {
    bool hypothesis_met = false;
    std::string hypothesis_note;
    bool pass = false;
    std::vector<BoundCheck> checks;
    double slack = 1e-9;
};

Lemma28iiiReport check_lemma28_iii(const Graph& g, const SpectralResult& spectral,
                                   double a);

/// Dense-subgraph test: gprime must be edge-subset-induced from g; true iff
///   1 <= e(G)-e(G') <= sqrt(2 e(G)/(1-1/r))  and
///   Phi(G') - Phi(G) >= eps (e(G)-e(G'))/e(G).
bool check_eps_dense(const Graph& g, const Graph& gprime, double epsilon, int r,
                     const SpectralOptions& opts = {});

struct PerturbationSpec {
    std::vector<int> sizes;   // class sizes, any order
    int class_edges = 0;      // additions inside classes
    int cross_deletions = 0;  // deletions between classes
    std::optional<int> k;     // present -> check mode (ii) against T_{n,r}
    uint64_t seed = 0;
};

/// Seeded numeric check of the two-sided perturbation estimate for
/// rho(K + additions - deletions). The paper-scale hypotheses
/// (max{a1,a2} <= n/(20r)^3 etc.) are reported but the bound is always
/// evaluated.
struct PerturbationReport {
    bool hypothesis_met = false;
    std::string hypothesis_note;
    int mode = 1;  // 1 or 2
    double rho_g = 0, rho_k = 0;
    double lhs = 0, rhs = 0;
    double margin = 0;  // rhs - lhs
    bool holds = false;
    std::vector<Edge> added, deleted;
};

PerturbationReport check_perturbation_bound(const PerturbationSpec& spec,
                                            const SpectralOptions& opts = {});

}  // namespace supersat

#endif
