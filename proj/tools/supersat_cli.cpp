// supersat: spectral extremal graph toolkit command line.
//
// Subcommands: construct, spectral, count, cnf, pattern, peel, distance,
// enumerate, campaign. Exit status: 0 success, 1 usage or runtime error,
// 2 a verification check found a counterexample.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "supersat/canonical.hpp"
#include "supersat/construct.hpp"
#include "supersat/counting.hpp"
#include "supersat/enumerate.hpp"
#include "supersat/error.hpp"
#include "supersat/graph_io.hpp"
#include "supersat/harness.hpp"
#include "supersat/pattern.hpp"
#include "supersat/spectral.hpp"
#include "supersat/stability.hpp"

namespace {

using supersat::Edge;
using supersat::Graph;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw supersat::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw supersat::Error("cannot open " + path + " for writing");
    out << text;
}

Graph load_graph(const std::string& path) { return supersat::read_graph(read_file(path)); }

// Registry names win over same-named files, with a warning.
Graph load_pattern_graph(const std::string& name_or_path) {
    auto named = supersat::pattern_registry_lookup(name_or_path);
    if (named) {
        if (std::filesystem::exists(name_or_path))
            std::cerr << "warning: \"" << name_or_path
                      << "\" is both a registry pattern and a file; using the "
                         "registry pattern\n";
        return *named;
    }
    return load_graph(name_or_path);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

json spectral_json(const Graph& g, const supersat::SpectralResult& res) {
    json j;
    j["n"] = g.n();
    j["m"] = g.m();
    j["rho"] = res.rho;
    j["phi"] = res.rho / std::sqrt(static_cast<double>(g.m()));
    j["residual"] = res.residual;
    j["iterations"] = res.iterations;
    j["dominant_component"] = res.dominant_component;
    j["x"] = res.x;
    return j;
}

int cmd_construct(const std::string& family, int n, int r, int a, int b, int k,
                  const std::string& sizes, const std::string& output, bool g6) {
    supersat::GraphFamilySpec spec;
    spec.kind = supersat::parse_family_kind(family);
    using supersat::FamilyKind;
    switch (spec.kind) {
        case FamilyKind::turan:
        case FamilyKind::turan_plus_edge:
            spec.params = {n, r};
            break;
        case FamilyKind::complete_multipartite: {
            for (int s : parse_int_list(sizes)) spec.params.push_back(s);
            break;
        }
        case FamilyKind::complete_bipartite_plus_edge:
            spec.params = {a, b};
            break;
        case FamilyKind::star:
        case FamilyKind::cycle:
        case FamilyKind::clique:
            spec.params = {k};
            break;
        case FamilyKind::kite:
            break;
    }
    Graph g = supersat::build_family(spec);
    write_output(output,
                 g6 ? supersat::write_graph6(g) + "\n" : supersat::write_edge_list(g));
    return 0;
}

int cmd_spectral(const std::string& input, double tol, const std::string& format,
                 const std::string& output) {
    Graph g = load_graph(input);
    supersat::SpectralOptions opts;
    opts.tol = tol;
    auto res = supersat::spectral_radius(g, opts);
    if (format == "json") {
        write_output(output, spectral_json(g, res).dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out.precision(12);
    out << "rho = " << res.rho << "\n";
    out << "phi = " << res.rho / std::sqrt(static_cast<double>(g.m())) << "\n";
    out << "residual = " << res.residual << "\n";
    out << "iterations = " << res.iterations << "\n";
    out << "dominant component =";
    for (int v : res.dominant_component) out << " " << v;
    out << "\n";
    write_output(output, out.str());
    return 0;
}

int cmd_count(const std::string& host, const std::string& pattern,
              const std::string& through_edge, bool exclusive,
              const std::string& partition, long long budget,
              const std::string& format, const std::string& output) {
    Graph g = load_graph(host);
    auto profile = supersat::build_pattern_profile(load_pattern_graph(pattern), pattern);
    supersat::CountOptions opts;
    opts.budget = budget;
    json j;
    j["host"] = host;
    j["pattern"] = pattern;
    auto t0 = std::chrono::steady_clock::now();
    long long value = 0;
    if (through_edge.empty()) {
        supersat::CountReport rep = supersat::copy_count_report(g, profile, host, opts);
        value = rep.value.to_int64();
        j["quantity"] = "N_F";
        j["value"] = rep.value.to_string();
        j["method"] = "brute-force";
        j["elapsed_seconds"] = rep.elapsed_seconds;
        if (format == "json")
            write_output(output, j.dump(2) + "\n");
        else
            write_output(output, "N_F = " + rep.value.to_string() + "\n");
        return 0;
    }
    {
        auto uv = parse_int_list(through_edge);
        if (uv.size() != 2) throw supersat::Error("--through-edge wants \"u,v\"");
        std::optional<supersat::VertexPartition> vp;
        if (exclusive) {
            if (partition.empty())
                throw supersat::Error("--exclusive needs --partition");
            auto part_of = parse_int_list(partition);
            if (static_cast<int>(part_of.size()) != g.n())
                throw supersat::Error("--partition must list a part for every vertex");
            supersat::VertexPartition p;
            p.universe = g.n();
            int parts = *std::max_element(part_of.begin(), part_of.end()) + 1;
            p.parts.assign(parts, {});
            for (int v = 0; v < g.n(); ++v)
                if (part_of[v] >= 0) p.parts[part_of[v]].push_back(v);
            vp = std::move(p);
        }
        value = supersat::count_copies_through_edge(
            g, profile, supersat::make_edge(uv[0], uv[1]),
            vp ? &*vp : nullptr, opts);
        j["quantity"] = exclusive ? "N_F(H,e) exclusive" : "N_F through e";
        j["edge"] = uv;
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count();
    j["value"] = value;
    j["method"] = "brute-force";
    j["elapsed_seconds"] = elapsed;
    if (format == "json")
        write_output(output, j.dump(2) + "\n");
    else
        write_output(output, j["quantity"].get<std::string>() + " = " +
                                 std::to_string(value) + "\n");
    return 0;
}

int cmd_cnf(const std::string& pattern, long n, const std::string& method, bool alpha,
            const std::string& scan, const std::string& format,
            const std::string& output) {
    auto profile = supersat::build_pattern_profile(load_pattern_graph(pattern), pattern);
    json j;
    j["pattern"] = pattern;
    bool disagree = false;
    if (n > 0) {
        j["n"] = n;
        std::optional<supersat::BigInt> formula, brute;
        if (method == "formula" || method == "both")
            formula = supersat::c_exact(n, profile);
        if (method == "bruteforce" || method == "both")
            brute = supersat::c_bruteforce(n, profile);
        if (formula) j["c_formula"] = formula->to_string();
        if (brute) j["c_bruteforce"] = brute->to_string();
        if (formula && brute) {
            j["agree"] = *formula == *brute;
            disagree = !(*formula == *brute);
        }
    }
    if (alpha) j["alpha"] = supersat::alpha_exact(profile).to_string();
    if (!scan.empty()) {
        std::vector<long> ns;
        for (int v : parse_int_list(scan)) ns.push_back(v);
        auto rep = supersat::alpha_residual_scan(profile, ns);
        json rows = json::array();
        for (const auto& row : rep.rows) {
            rows.push_back(json{{"n", row.n},
                                {"c", row.c.to_string()},
                                {"alpha_term", row.alpha_term.to_string()},
                                {"residual_ratio", row.residual_ratio.to_string()},
                                {"sandwich_holds", row.sandwich_holds}});
        }
        j["residual_scan"] = rows;
        j["sandwich_failures"] = rep.sandwich_failures;
    }
    if (format == "json") {
        write_output(output, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (auto& [k, v] : j.items())
            out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
                << "\n";
        write_output(output, out.str());
    }
    return disagree ? 2 : 0;
}

int cmd_pattern(const std::string& name, const std::string& file,
                const std::string& format, const std::string& output) {
    std::string label = !name.empty() ? name : file;
    Graph g = !name.empty() ? load_pattern_graph(name) : load_graph(file);
    auto p = supersat::build_pattern_profile(g, label);
    json j;
    j["pattern"] = label;
    j["f"] = p.f;
    j["chi"] = p.chi;
    j["r"] = p.r;
    j["color_critical"] = p.color_critical;
    json ge = json::array();
    for (const auto& [u, v] : p.good_edges) {
        json colorings = json::array();
        for (const auto& c : p.colorings.at({u, v})) colorings.push_back(c.tau);
        ge.push_back(json{{"edge", {u, v}}, {"colorings", colorings}});
    }
    j["good_edges"] = ge;
    j["aut"] = p.aut;
    if (p.beta_prime) j["beta_prime"] = *p.beta_prime;
    if (format == "json") {
        write_output(output, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "pattern " << label << ": f = " << p.f << ", chi = " << p.chi
        << ", r = " << p.r << ", aut = " << p.aut
        << (p.color_critical ? ", color-critical" : ", not color-critical") << "\n";
    out << "good edges (" << p.good_edges.size() << "):";
    for (const auto& [u, v] : p.good_edges)
        out << " (" << u << "," << v << ")x" << p.colorings.at({u, v}).size();
    out << "\n";
    if (p.beta_prime) out << "beta' = " << *p.beta_prime << "\n";
    write_output(output, out.str());
    return 0;
}

int cmd_peel(const std::string& input, double epsilon, double a, double tol,
             const std::string& format, const std::string& output) {
    Graph g = load_graph(input);
    supersat::SpectralOptions opts;
    opts.tol = tol;
    auto trace = supersat::peel(g, epsilon, opts);
    json j;
    j["epsilon"] = epsilon;
    j["terminal_reason"] =
        trace.terminal_reason == supersat::TerminalReason::step_cap ? "step-cap"
                                                                    : "no-light-edges";
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step{{"e", s.edge_count}, {"rho", s.rho}, {"phi", s.phi}};
        if (s.removed) {
            step["removed"] = {s.removed->first, s.removed->second};
            step["product"] = s.product;
        }
        steps.push_back(step);
    }
    j["steps"] = steps;
    bool fail = false;
    if (a > 0) {
        auto rep = supersat::check_lemma28(trace, a);
        j["lemma28"] = json{{"a", a},
                            {"hypothesis_met", rep.hypothesis_met},
                            {"pass", rep.pass},
                            {"min_margin_i", rep.min_margin_i},
                            {"min_margin_ii", rep.min_margin_ii}};
        if (rep.violation)
            j["lemma28"]["violation"] = json{{"step", rep.violation->step},
                                             {"which", rep.violation->which},
                                             {"lhs", rep.violation->lhs},
                                             {"rhs", rep.violation->rhs}};
        fail = rep.hypothesis_met && !rep.pass;
    }
    if (format == "json") {
        write_output(output, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out.precision(10);
        out << "peel trace, epsilon = " << epsilon << ", length = " << trace.length()
            << ", terminal = " << j["terminal_reason"].get<std::string>() << "\n";
        for (const auto& s : trace.steps) {
            out << "  e = " << s.edge_count << "  rho = " << s.rho
                << "  phi = " << s.phi;
            if (s.removed)
                out << "  removed (" << s.removed->first << "," << s.removed->second
                    << ") product " << s.product;
            out << "\n";
        }
        if (j.contains("lemma28"))
            out << "lemma 2.8 check: "
                << (j["lemma28"]["hypothesis_met"].get<bool>()
                        ? (j["lemma28"]["pass"].get<bool>() ? "pass" : "FAIL")
                        : "hypothesis not met")
                << "\n";
        write_output(output, out.str());
    }
    return fail ? 2 : 0;
}

int cmd_distance(const std::string& input, const std::string& target, int r,
                 const std::string& mode, int starts, uint64_t seed,
                 const std::string& format, const std::string& output) {
    Graph g = load_graph(input);
    supersat::DistanceMethod m = mode == "exact"
                                     ? supersat::DistanceMethod::exact
                                     : supersat::DistanceMethod::local_search_upper_bound;
    supersat::LocalSearchOptions opts;
    opts.starts = starts;
    opts.seed = seed;
    supersat::DistanceResult res =
        target == "turan" ? supersat::distance_to_turan(g, r, m, opts)
                          : supersat::distance_to_bipartite(g, m, opts);
    json j;
    j["target"] = res.target;
    j["method"] = res.method == supersat::DistanceMethod::exact
                      ? "exact"
                      : "local-search-upper-bound";
    j["distance"] = res.distance;
    json parts = json::array();
    for (const auto& part : res.witness.parts) parts.push_back(part);
    j["witness_parts"] = parts;
    if (format == "json")
        write_output(output, j.dump(2) + "\n");
    else
        write_output(output, "distance to " + res.target + " = " +
                                 std::to_string(res.distance) + " (" +
                                 j["method"].get<std::string>() + ")\n");
    return 0;
}

int cmd_enumerate(int max_n, int m, bool dedupe, bool override_guardrails,
                  const std::string& output) {
    supersat::EnumerateOptions opts;
    opts.max_n = max_n;
    opts.m = m;
    opts.dedupe = dedupe;
    opts.override_guardrails = override_guardrails;
    std::ostringstream out;
    supersat::enumerate_graphs(
        opts, [&](const Graph& g) { out << supersat::write_graph6(g) << "\n"; });
    write_output(output, out.str());
    return 0;
}

int cmd_campaign(const std::string& config, const std::string& name,
                 const std::vector<std::string>& sets, int workers,
                 const std::string& output, const std::string& csv) {
    supersat::CampaignSpec spec;
    if (!config.empty()) {
        spec = supersat::parse_campaign_config(read_file(config));
    } else if (!name.empty()) {
        spec.campaign = name;
    } else {
        throw supersat::Error("campaign: need --config or --name");
    }
    for (const auto& kv : sets) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw supersat::Error("--set wants key=value, got " + kv);
        spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    auto report = supersat::run_campaign(spec, workers);
    write_output(output, report.to_json().dump(2) + "\n");
    if (!csv.empty()) write_output(csv, report.to_csv());
    std::cerr << "campaign " << report.campaign << ": " << report.summary.passes
              << " pass, " << report.summary.failures << " fail, "
              << report.summary.skipped << " skipped\n";
    return report.summary.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersat: spectral extremal graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands use the global --format / -o

    std::string format = "text", output;
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", output, "Output path (default stdout)");

    // construct
    auto* c_construct = app.add_subcommand("construct", "Build a named graph family");
    std::string family, sizes;
    int nn = 0, rr = 0, aa = 0, bb = 0, kk = 0;
    bool g6 = false;
    c_construct->add_option("--family", family, "Family name")->required();
    c_construct->add_option("--n", nn, "Order n");
    c_construct->add_option("--r", rr, "Number of parts r");
    c_construct->add_option("--a", aa, "Class size a");
    c_construct->add_option("--b", bb, "Class size b");
    c_construct->add_option("--k", kk, "Size parameter k");
    c_construct->add_option("--sizes", sizes, "Comma-separated part sizes");
    c_construct->add_flag("--g6", g6, "Write graph6 instead of edge list");

    // spectral
    auto* c_spectral = app.add_subcommand("spectral", "Spectral radius and Perron vector");
    std::string sp_input;
    double sp_tol = 1e-10;
    c_spectral->add_option("input", sp_input, "Graph file (edge list or graph6)")
        ->required();
    c_spectral->add_option("--tol", sp_tol, "Residual tolerance");

    // count
    auto* c_count = app.add_subcommand("count", "Exact copy counting");
    std::string host, cpattern, through_edge, partition;
    bool exclusive = false;
    long long budget = 1000000000;
    c_count->add_option("--host", host, "Host graph file")->required();
    c_count->add_option("--pattern", cpattern, "Pattern name or file")->required();
    c_count->add_option("--through-edge", through_edge, "Count copies through edge u,v");
    c_count->add_flag("--exclusive", exclusive,
                      "Exclude copies with another intra-part edge");
    c_count->add_option("--partition", partition,
                        "Part index per vertex (comma separated)");
    c_count->add_option("--budget", budget, "Extension budget");

    // cnf
    auto* c_cnf = app.add_subcommand("cnf", "c(n,F), alpha_F and residual scan");
    std::string cnf_pattern, cnf_method = "both", cnf_scan;
    long cnf_n = 0;
    bool cnf_alpha = false;
    c_cnf->add_option("--pattern", cnf_pattern, "Pattern name or file")->required();
    c_cnf->add_option("--n", cnf_n, "Order n");
    c_cnf->add_option("--method", cnf_method, "formula | bruteforce | both")
        ->check(CLI::IsMember({"formula", "bruteforce", "both"}));
    c_cnf->add_flag("--alpha", cnf_alpha, "Print alpha_F as an exact fraction");
    c_cnf->add_option("--scan", cnf_scan, "Residual scan over n values (comma list)");

    // pattern
    auto* c_pattern = app.add_subcommand("pattern", "Pattern profile");
    std::string p_name, p_file;
    c_pattern->add_option("--name", p_name, "Registry pattern name");
    c_pattern->add_option("--file", p_file, "Pattern graph file");

    // peel
    auto* c_peel = app.add_subcommand("peel", "Light-edge peeling trace");
    std::string peel_input;
    double peel_eps = 0.5, peel_a = 0, peel_tol = 1e-10;
    c_peel->add_option("input", peel_input, "Graph file")->required();
    c_peel->add_option("--epsilon", peel_eps, "Peeling epsilon in (0,1)")->required();
    c_peel->add_option("--a", peel_a, "Also check the peeling invariants for this a");
    c_peel->add_option("--tol", peel_tol, "Eigensolver tolerance");

    // distance
    auto* c_distance = app.add_subcommand("distance", "Edit distance to a family");
    std::string d_input, d_target, d_mode = "exact";
    int d_r = 2, d_starts = 32;
    uint64_t d_seed = 1;
    c_distance->add_option("input", d_input, "Graph file")->required();
    c_distance->add_option("--target", d_target, "turan | bipartite")
        ->required()
        ->check(CLI::IsMember({"turan", "bipartite"}));
    c_distance->add_option("--r", d_r, "Parts for the turan target");
    c_distance->add_option("--mode", d_mode, "exact | heuristic")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    c_distance->add_option("--starts", d_starts, "Heuristic restarts");
    c_distance->add_option("--seed", d_seed, "Heuristic seed");

    // enumerate
    auto* c_enumerate = app.add_subcommand("enumerate", "Stream graphs with m edges");
    int e_max_n = 0, e_m = 0;
    bool e_dedupe = false, e_override = false;
    c_enumerate->add_option("--max-n", e_max_n, "Cap on non-isolated vertices")
        ->required();
    c_enumerate->add_option("--m", e_m, "Exact edge count")->required();
    c_enumerate->add_flag("--dedupe", e_dedupe, "One representative per iso class");
    c_enumerate->add_flag("--override-guardrails", e_override, "Lift desk guardrails");

    // campaign
    auto* c_campaign = app.add_subcommand("campaign", "Run a verification campaign");
    std::string camp_config, camp_name, camp_csv;
    std::vector<std::string> camp_sets;
    int camp_workers = 0;
    c_campaign->add_option("--config", camp_config, "Flat key=value config file");
    c_campaign->add_option("--name", camp_name, "Campaign name (when no config)");
    c_campaign->add_option("--set", camp_sets, "Override key=value (repeatable)");
    c_campaign->add_option("--workers", camp_workers,
                           "Parallel workers (default: cores, or SUPERSAT_WORKERS)");
    c_campaign->add_option("--csv", camp_csv, "Also write a CSV projection here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_construct)
            return cmd_construct(family, nn, rr, aa, bb, kk, sizes, output, g6);
        if (*c_spectral) return cmd_spectral(sp_input, sp_tol, format, output);
        if (*c_count)
            return cmd_count(host, cpattern, through_edge, exclusive, partition, budget,
                             format, output);
        if (*c_cnf)
            return cmd_cnf(cnf_pattern, cnf_n, cnf_method, cnf_alpha, cnf_scan, format,
                           output);
        if (*c_pattern) return cmd_pattern(p_name, p_file, format, output);
        if (*c_peel) return cmd_peel(peel_input, peel_eps, peel_a, peel_tol, format, output);
        if (*c_distance)
            return cmd_distance(d_input, d_target, d_r, d_mode, d_starts, d_seed, format,
                                output);
        if (*c_enumerate) return cmd_enumerate(e_max_n, e_m, e_dedupe, e_override, output);
        if (*c_campaign)
            return cmd_campaign(camp_config, camp_name, camp_sets, camp_workers, output,
                                camp_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
