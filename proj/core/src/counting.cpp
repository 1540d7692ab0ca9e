#include "supersat/counting.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "supersat/construct.hpp"
#include "supersat/error.hpp"

namespace supersat {

namespace {

constexpr int kPatternGuardrail = 8;

// Backtracking over partial injective maps, pattern vertices in a
// connectivity-friendly order (components one after another, BFS inside,
// highest degree first). Each accepted extension ticks the budget.
class InjectionCounter {
public:
    InjectionCounter(const Graph& g, const Graph& f, const CountOptions& opts)
        : g_(g), f_(f), budget_(opts.budget) {
        order_ = search_order(f);
        image_.assign(f_.n(), -1);
        used_.assign(g_.n(), 0);
    }

    // Calls leaf() for every edge-preserving injection.
    void run(const std::function<void()>& leaf) {
        leaf_ = &leaf;
        extend(0);
    }

    long long extensions() const { return extensions_; }

    const std::vector<int>& image() const { return image_; }

private:
    static std::vector<int> search_order(const Graph& f) {
        std::vector<int> order;
        std::vector<char> seen(f.n(), 0);
        while (static_cast<int>(order.size()) < f.n()) {
            int start = -1;
            for (int v = 0; v < f.n(); ++v)
                if (!seen[v] && (start == -1 || f.degree(v) > f.degree(start)))
                    start = v;
            seen[start] = 1;
            order.push_back(start);
            for (size_t head = order.size() - 1; head < order.size(); ++head) {
                std::vector<int> nbrs;
                for (int w : f.neighbors(order[head]))
                    if (!seen[w]) nbrs.push_back(w);
                std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
                    return f.degree(a) > f.degree(b);
                });
                for (int w : nbrs) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
        return order;
    }

    void extend(size_t idx) {
        if (idx == order_.size()) {
            (*leaf_)();
            return;
        }
        int u = order_[idx];
        for (int v = 0; v < g_.n(); ++v) {
            if (used_[v] || g_.degree(v) < f_.degree(u)) continue;
            bool ok = true;
            for (int w : f_.neighbors(u)) {
                int iw = image_[w];
                if (iw != -1 && !g_.has_edge(v, iw)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (++extensions_ > budget_)
                throw BudgetError("counting budget exceeded", found_);
            image_[u] = v;
            used_[v] = 1;
            if (idx + 1 == order_.size()) ++found_;
            extend(idx + 1);
            image_[u] = -1;
            used_[v] = 0;
        }
    }

    const Graph& g_;
    const Graph& f_;
    long long budget_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<char> used_;
    const std::function<void()>* leaf_ = nullptr;
    long long extensions_ = 0;
    long long found_ = 0;
};

void check_pattern_guardrail(const PatternProfile& pattern, const CountOptions& opts) {
    if (pattern.f > kPatternGuardrail && !opts.override_guardrails)
        throw GuardrailError("counting: pattern larger than 8 vertices");
}

}  // namespace

long long count_injections(const Graph& g, const PatternProfile& pattern,
                           const CountOptions& opts) {
    check_pattern_guardrail(pattern, opts);
    InjectionCounter counter(g, pattern.F, opts);
    long long injections = 0;
    counter.run([&] { ++injections; });
    return injections;
}

long long count_copies(const Graph& g, const PatternProfile& pattern,
                       const CountOptions& opts) {
    long long injections = count_injections(g, pattern, opts);
    if (injections % pattern.aut != 0)
        throw Error("count_copies: injections not divisible by Aut(F)");
    return injections / pattern.aut;
}

CountReport copy_count_report(const Graph& g, const PatternProfile& pattern,
                              const std::string& host_desc,
                              const CountOptions& opts) {
    CountReport rep;
    rep.method = CountMethod::brute_force;
    rep.pattern = pattern.name;
    rep.host = host_desc;
    auto t0 = std::chrono::steady_clock::now();
    rep.value = BigInt(count_copies(g, pattern, opts));
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

long long count_copies_through_edge(const Graph& g, const PatternProfile& pattern,
                                    Edge e, const VertexPartition* exclusive_within,
                                    const CountOptions& opts) {
    check_pattern_guardrail(pattern, opts);
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw Error("count_copies_through_edge: e is not an edge of G");
    std::vector<int> part;
    if (exclusive_within) {
        part = exclusive_within->part_of();
        if (part[e.first] == -1 || part[e.first] != part[e.second])
            throw Error("count_copies_through_edge: e is not an intra-part edge");
    }
    InjectionCounter counter(g, pattern.F, opts);
    long long hits = 0;
    const auto& fedges = pattern.F.edges();
    counter.run([&] {
        const auto& img = counter.image();
        bool contains_e = false, extra_intra = false;
        for (const auto& [a, b] : fedges) {
            Edge m = make_edge(img[a], img[b]);
            if (m == e) {
                contains_e = true;
            } else if (exclusive_within && part[m.first] != -1 &&
                       part[m.first] == part[m.second]) {
                extra_intra = true;
            }
        }
        if (contains_e && !extra_intra) ++hits;
    });
    if (hits % pattern.aut != 0)
        throw Error("count_copies_through_edge: not divisible by Aut(F)");
    return hits / pattern.aut;
}

Rational coloring_contribution(const ColoringProfile& profile, long n, int r) {
    if (r < 1) throw Error("coloring contribution: r must be positive");
    if (n % r != 0)
        throw Error("coloring contribution: exact formula needs r | n; "
                    "use the brute-force path");
    Rational part(n / r);
    Rational out = Rational(2) * falling_factorial(part - Rational(2), profile.tau[0]);
    for (int i = 1; i < r; ++i) out = out * falling_factorial(part, profile.tau[i]);
    return out;
}

BigInt c_exact(long n, const PatternProfile& pattern) {
    if (!pattern.color_critical) throw Error("c_exact: pattern is not color-critical");
    if (pattern.chi < 3) throw Error("c_exact: requires chi(F) >= 3");
    if (n % pattern.r != 0) throw Error("c_exact: requires r | n (use c_bruteforce)");
    // n/r >= 2 keeps every falling-factorial factor nonnegative; classes too
    // small for their tau simply contribute a zero factor, which is the
    // correct embedding count.
    if (n / pattern.r < 2)
        throw Error("c_exact: requires n/r >= 2");
    Rational total(0);
    for (const auto& [edge, profiles] : pattern.colorings)
        for (const auto& p : profiles)
            total = total + coloring_contribution(p, n, pattern.r);
    Rational c = total / Rational(pattern.aut);
    if (!c.is_integer() || c.sign() < 0)
        throw Error("c_exact: formula did not produce a nonnegative integer");
    return c.num();
}

BigInt c_bruteforce(long n, const PatternProfile& pattern, const CountOptions& opts) {
    int r = pattern.r;
    if (r < 2) throw Error("c_bruteforce: requires chi(F) >= 3");
    if (n < r + 1) throw Error("c_bruteforce: need n > r");
    bool have = false;
    long long best = 0;
    for (int part = 0; part < r; ++part) {
        TuranGraph t = build_turan(static_cast<int>(n), r);
        if (t.partition.parts[part].size() < 2) continue;  // no internal pair
        TuranPlusEdge tp = build_turan_plus_edge_in_part(static_cast<int>(n), r, part);
        long long c = count_copies(tp.graph, pattern, opts);
        if (!have || c < best) {
            best = c;
            have = true;
        }
    }
    if (!have) throw Error("c_bruteforce: every part is a singleton");
    return BigInt(best);
}

Rational alpha_exact(const PatternProfile& pattern) {
    if (!pattern.color_critical)
        throw Error("alpha_exact: pattern is not color-critical");
    if (pattern.chi < 3) throw Error("alpha_exact: requires chi(F) >= 3");
    long long total_colorings = 0;
    for (const auto& [edge, profiles] : pattern.colorings)
        total_colorings += static_cast<long long>(profiles.size());
    Rational r_power = Rational(pattern.r).pow(pattern.f - 2);
    return Rational(2 * total_colorings) / (r_power * Rational(pattern.aut));
}

AlphaScanReport alpha_residual_scan(const PatternProfile& pattern,
                                    const std::vector<long>& n_values) {
    AlphaScanReport report;
    Rational alpha = alpha_exact(pattern);
    for (long n : n_values) {
        AlphaScanRow row;
        row.n = n;
        row.c = c_exact(n, pattern);
        Rational n_rat(n);
        row.alpha_term = alpha * n_rat.pow(pattern.f - 2);
        Rational c_rat(row.c);
        row.residual_ratio =
            (c_rat - row.alpha_term).abs() / n_rat.pow(pattern.f - 3);
        row.sandwich_holds = row.alpha_term / Rational(2) < c_rat &&
                             c_rat < Rational(2) * row.alpha_term;
        if (!row.sandwich_holds) report.sandwich_failures.push_back(n);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace supersat
