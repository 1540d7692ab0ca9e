#include "supersat/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "supersat/error.hpp"
#include "supersat/graph_io.hpp"

namespace supersat {

std::vector<int> stable_coloring(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    // Initial colors are degrees (invariant values); afterwards colors are
    // ranks of sorted signatures, which stay invariant.
    int rounds = 0;
    while (rounds++ <= n) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(color[v]);
            for (int w : g.neighbors(v)) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sorted)
            rank.emplace(s, static_cast<int>(rank.size()));
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) next[v] = rank[sig[v].first];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

namespace {

// Canonical labelling of one connected graph by DFS over placements.
// Positions are filled class-by-class (classes in ascending stable color);
// at each position only candidates with the lexicographically maximal
// adjacency row against the placed prefix are kept, with structural twins
// collapsed to one representative.
class ComponentCanonicalizer {
public:
    explicit ComponentCanonicalizer(const Graph& g) : g_(g), n_(g.n()) {
        if (n_ > 62) throw Error("canonical form: component larger than 62 vertices");
        color_ = stable_coloring(g);
        // Position i must take a vertex of class class_seq_[i].
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return color_[a] < color_[b]; });
        class_seq_.resize(n_);
        for (int i = 0; i < n_; ++i) class_seq_[i] = color_[order[i]];
        nbr_bits_.assign(n_, 0);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) nbr_bits_[v] |= uint64_t{1} << w;
        placed_.reserve(n_);
        best_rows_.clear();
    }

    std::vector<int> run() {
        used_ = 0;
        rows_.assign(n_, 0);
        best_rows_.clear();
        dfs(0);
        return best_perm_;
    }

private:
    void dfs(int pos) {
        // Fresh comparison against the incumbent: the incumbent can change
        // mid-search, so the prefix state is recomputed rather than threaded.
        bool equal_prefix = !best_rows_.empty();
        if (!best_rows_.empty()) {
            for (int j = 0; j < pos; ++j) {
                if (rows_[j] > best_rows_[j]) {
                    equal_prefix = false;
                    break;
                }
                if (rows_[j] < best_rows_[j]) return;  // dominated branch
            }
        }
        if (pos == n_) {
            if (best_rows_.empty() || rows_ > best_rows_) {
                best_rows_ = rows_;
                best_perm_ = placed_;
            }
            return;
        }
        // Row value: adjacency to placed[j] weighted with j=0 most significant.
        uint64_t best_row = 0;
        std::vector<int> cands;
        for (int v = 0; v < n_; ++v) {
            if ((used_ >> v) & 1) continue;
            if (color_[v] != class_seq_[pos]) continue;
            uint64_t row = 0;
            for (int j = 0; j < pos; ++j)
                if ((nbr_bits_[v] >> placed_[j]) & 1) row |= uint64_t{1} << (62 - j);
            if (cands.empty() || row > best_row) {
                best_row = row;
                cands.assign(1, v);
            } else if (row == best_row) {
                cands.push_back(v);
            }
        }
        if (equal_prefix && best_row < best_rows_[pos]) return;
        // Twin pruning: u, v interchangeable when N(u)\{v} == N(v)\{u}.
        std::vector<int> reps;
        for (int v : cands) {
            bool twin = false;
            for (int u : reps) {
                uint64_t diff = nbr_bits_[u] ^ nbr_bits_[v];
                diff &= ~((uint64_t{1} << u) | (uint64_t{1} << v));
                if (diff == 0) {
                    twin = true;
                    break;
                }
            }
            if (!twin) reps.push_back(v);
        }
        for (int v : reps) {
            placed_.push_back(v);
            used_ |= uint64_t{1} << v;
            rows_[pos] = best_row;
            dfs(pos + 1);
            used_ &= ~(uint64_t{1} << v);
            placed_.pop_back();
        }
        rows_[pos] = 0;
    }

    const Graph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<int> class_seq_;
    std::vector<uint64_t> nbr_bits_;
    std::vector<int> placed_;
    uint64_t used_ = 0;
    std::vector<uint64_t> rows_;
    std::vector<uint64_t> best_rows_;
    std::vector<int> best_perm_;
};

std::string component_form(const Graph& comp) {
    ComponentCanonicalizer canon(comp);
    std::vector<int> perm = canon.run();  // perm[position] = vertex
    std::vector<int> newid(comp.n());
    for (int i = 0; i < comp.n(); ++i) newid[perm[i]] = i;
    std::vector<Edge> es;
    es.reserve(comp.edges().size());
    for (const auto& [u, v] : comp.edges()) es.push_back(make_edge(newid[u], newid[v]));
    return write_graph6(Graph(comp.n(), std::move(es)));
}

}  // namespace

std::string canonical_form(const Graph& g) {
    std::vector<std::string> forms;
    for (const auto& comp : g.components()) forms.push_back(component_form(g.induced(comp)));
    std::sort(forms.begin(), forms.end());
    std::string out = "i" + std::to_string(g.n() - g.support_size());
    for (const auto& f : forms) out += "|" + f;
    return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

long long factorial_ll(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Automorphism count of a connected graph via twin factoring plus
// backtracking on the twin-quotient.
long long connected_aut(const Graph& g) {
    int n = g.n();
    if (n > 62) throw Error("automorphism count: component larger than 62 vertices");
    std::vector<uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr[v] |= uint64_t{1} << w;
    auto twins = [&](int u, int v) {
        uint64_t diff = nbr[u] ^ nbr[v];
        diff &= ~((uint64_t{1} << u) | (uint64_t{1} << v));
        return diff == 0;
    };
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        if (cls[v] != -1) continue;
        cls[v] = static_cast<int>(classes.size());
        classes.push_back({v});
        for (int w = v + 1; w < n; ++w)
            if (cls[w] == -1 && twins(v, w)) {
                cls[w] = cls[v];
                classes.back().push_back(w);
            }
    }
    long long factor = 1;
    for (const auto& c : classes) factor *= factorial_ll(static_cast<int>(c.size()));

    // Quotient: adjacency between twin classes is all-or-nothing.
    int q = static_cast<int>(classes.size());
    std::vector<uint64_t> qadj(q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (g.has_edge(classes[a][0], classes[b][0])) {
                qadj[a] |= uint64_t{1} << b;
                qadj[b] |= uint64_t{1} << a;
            }
    // Class labels that any automorphism must preserve.
    std::vector<int> size_label(q), color_label(q);
    std::vector<int> color = stable_coloring(g);
    bool self_edge;
    std::vector<int> self_label(q);
    for (int a = 0; a < q; ++a) {
        size_label[a] = static_cast<int>(classes[a].size());
        color_label[a] = color[classes[a][0]];
        self_edge = classes[a].size() > 1 && g.has_edge(classes[a][0], classes[a][1]);
        self_label[a] = self_edge ? 1 : 0;
    }
    auto compatible = [&](int a, int b) {
        return size_label[a] == size_label[b] && color_label[a] == color_label[b] &&
               self_label[a] == self_label[b];
    };

    // Map quotient vertices in BFS order for early adjacency pruning.
    std::vector<int> order;
    std::vector<char> seen(q, 0);
    for (int s = 0; s < q; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (size_t head = order.size() - 1; head < order.size(); ++head) {
            int v = order[head];
            for (int w = 0; w < q; ++w)
                if (((qadj[v] >> w) & 1) && !seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        }
    }

    std::vector<int> image(q, -1);
    uint64_t used = 0;
    long long count = 0;
    auto dfs = [&](auto&& self, int idx) -> void {
        if (idx == q) {
            ++count;
            return;
        }
        int v = order[idx];
        for (int w = 0; w < q; ++w) {
            if ((used >> w) & 1) continue;
            if (!compatible(v, w)) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int a = order[j];
                bool e1 = (qadj[v] >> a) & 1;
                bool e2 = (qadj[w] >> image[a]) & 1;
                if (e1 != e2) ok = false;
            }
            if (!ok) continue;
            image[v] = w;
            used |= uint64_t{1} << w;
            self(self, idx + 1);
            used &= ~(uint64_t{1} << w);
            image[v] = -1;
        }
    };
    dfs(dfs, 0);
    return factor * count;
}

}  // namespace

long long automorphism_count_exact(const Graph& g) {
    // Components: automorphisms permute isomorphic components freely.
    std::map<std::string, std::pair<long long, int>> by_form;  // form -> (aut, count)
    for (const auto& comp : g.components()) {
        Graph h = g.induced(comp);
        std::string form = component_form(h);
        auto it = by_form.find(form);
        if (it == by_form.end())
            by_form.emplace(form, std::make_pair(connected_aut(h), 1));
        else
            it->second.second += 1;
    }
    long long total = factorial_ll(g.n() - g.support_size());  // isolated vertices
    for (const auto& [form, ac] : by_form) {
        for (int i = 0; i < ac.second; ++i) total *= ac.first;
        total *= factorial_ll(ac.second);
    }
    return total;
}

}  // namespace supersat
