#include "supersat/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "supersat/error.hpp"

namespace supersat {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool parse_two_ints(const std::string& s, long& a, long& b) {
    std::istringstream in(s);
    std::string extra;
    if (!(in >> a >> b)) return false;
    if (in >> extra) return false;
    return true;
}

}  // namespace

Graph read_edge_list(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty input", 1);
    long n = 0, m = 0;
    if (!parse_two_ints(lines[0], n, m))
        throw ParseError("expected header \"n m\"", 1);
    if (n < 0 || m < 0) throw ParseError("negative header values", 1);
    std::vector<Edge> edges;
    size_t li = 1;
    for (long i = 0; i < m; ++i, ++li) {
        if (li >= lines.size())
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(i),
                             static_cast<int>(li + 1));
        long u, v;
        if (!parse_two_ints(lines[li], u, v))
            throw ParseError("expected edge \"u v\"", static_cast<int>(li + 1));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex index out of range [0, " +
                                 std::to_string(n) + ")",
                             static_cast<int>(li + 1));
        if (u == v) throw ParseError("self-loop", static_cast<int>(li + 1));
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    for (; li < lines.size(); ++li)
        if (!lines[li].empty())
            throw ParseError("trailing content", static_cast<int>(li + 1));
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(e.what(), 2);
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_graph6(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) throw ParseError("empty graph6 payload", 1);
    int n = line[0] - 63;
    if (n < 0 || n > 62)
        throw ParseError("graph6: only orders 0..62 supported", 1);
    size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() != 1 + need)
        throw ParseError("graph6: payload length mismatch", 1);
    std::vector<Edge> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int c = line[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw ParseError("graph6: bad character", 1);
            if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    if (g.n() > 62) throw Error("graph6: only orders 0..62 supported");
    std::string out(1, static_cast<char>(g.n() + 63));
    size_t nbits = static_cast<size_t>(g.n()) * (g.n() - 1) / 2;
    std::string bits((nbits + 5) / 6, char(63));
    size_t bit = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) bits[bit / 6] += 1 << (5 - bit % 6);
    return out + bits;
}

Graph read_graph(const std::string& text) {
    // The edge-list header always contains a space; graph6 never does.
    size_t eol = text.find('\n');
    std::string first = eol == std::string::npos ? text : text.substr(0, eol);
    if (first.find(' ') != std::string::npos) return read_edge_list(text);
    return read_graph6(text);
}

}  // namespace supersat
