#ifndef SUPERSAT_COUNTING_HPP
#define SUPERSAT_COUNTING_HPP

#include <string>
#include <vector>

#include "supersat/bigint.hpp"
#include "supersat/graph.hpp"
#include "supersat/pattern.hpp"
#include "supersat/rational.hpp"

namespace supersat {

struct CountOptions {
    long long budget = 1000000000;  // partial-map extension budget
    bool override_guardrails = false;
};

enum class CountMethod { formula, brute_force };

/// Exact copy-count result. Counting is integer/rational throughout; no
/// floating point enters this module.
struct CountReport {
    BigInt value;
    CountMethod method = CountMethod::brute_force;
    std::string pattern;
    std::string host;
    double elapsed_seconds = 0;
};

/// Number of subgraphs of g isomorphic to the pattern:
/// edge-preserving injections divided exactly by Aut(F).
long long count_copies(const Graph& g, const PatternProfile& pattern,
                       const CountOptions& opts = {});

/// Timed count_copies wrapped in a CountReport.
CountReport copy_count_report(const Graph& g, const PatternProfile& pattern,
                              const std::string& host_desc,
                              const CountOptions& opts = {});

/// Edge-preserving injections V(F) -> V(G), counted independently of the
/// copies path (no automorphism division).
long long count_injections(const Graph& g, const PatternProfile& pattern,
                           const CountOptions& opts = {});

/// Copies of F whose edge set contains e. With `exclusive_within`, copies
/// containing e and no other edge inside a partition class.
long long count_copies_through_edge(const Graph& g, const PatternProfile& pattern,
                                    Edge e,
                                    const VertexPartition* exclusive_within = nullptr,
                                    const CountOptions& opts = {});

/// Contribution of one pinned coloring to the injection count into T*_{n,r}:
///   2 (n/r - 2)_{tau_1} prod_{i>=2} (n/r)_{tau_i}.
/// Requires r | n (the formula's equal-parts regime).
Rational coloring_contribution(const ColoringProfile& profile, long n, int r);

/// Exact c(n,F) via the closed formula; requires a color-critical pattern
/// with chi >= 3, r | n, and n/r >= f.
BigInt c_exact(long n, const PatternProfile& pattern);

/// c(n,F) by definition: minimum over single intra-class edge additions to
/// T_{n,r} of the exact copy count (one representative pair per part).
BigInt c_bruteforce(long n, const PatternProfile& pattern,
                    const CountOptions& opts = {});

/// Leading coefficient of c(n,F):
///   alpha_F = 2 (sum over good edges of #colorings) r^{-(f-2)} / Aut(F).
Rational alpha_exact(const PatternProfile& pattern);

struct AlphaScanRow {
    long n = 0;
    BigInt c;                 // c(n,F)
    Rational alpha_term;      // alpha_F n^{f-2}
    Rational residual_ratio;  // |c - alpha_F n^{f-2}| / n^{f-3}
    bool sandwich_holds = false;
};

/// Tabulates the empirical residual and checks the half/double sandwich
///   alpha_F n^{f-2}/2 < c(n,F) < 2 alpha_F n^{f-2}
/// at each n. Failures are findings, not errors.
struct AlphaScanReport {
    std::vector<AlphaScanRow> rows;
    std::vector<long> sandwich_failures;
};

AlphaScanReport alpha_residual_scan(const PatternProfile& pattern,
                                    const std::vector<long>& n_values);

}  // namespace supersat

#endif
