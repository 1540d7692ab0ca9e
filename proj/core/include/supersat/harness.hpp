#ifndef SUPERSAT_HARNESS_HPP
#define SUPERSAT_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "supersat/graph.hpp"
#include "supersat/pattern.hpp"

namespace supersat {

using json = nlohmann::ordered_json;

/// Campaign run description, reproducible from (name, params, seeds).
struct CampaignSpec {
    std::string campaign;
    std::map<std::string, std::string> params;

    std::string get(const std::string& key, const std::string& fallback = "") const;
    long get_long(const std::string& key, long fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::vector<long> get_longs(const std::string& key,
                                const std::vector<long>& fallback) const;
};

/// Flat key-value text: one "key = value" per line, '#' comments.
CampaignSpec parse_campaign_config(const std::string& text);

struct CampaignSummary {
    int instances = 0;
    int passes = 0;
    int failures = 0;
    int skipped = 0;
    double min_margin = 0;
    bool has_margin = false;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    bool pass = true;
};

struct CampaignReport {
    std::string campaign;
    json grid;
    std::vector<json> records;
    CampaignSummary summary;
    std::string generated_at;  // the one field allowed to differ between runs

    json to_json() const;
    /// CSV projection, fixed column order:
    /// campaign,index,instance,n,m,quantity,value,bound,margin,pass,note
    std::string to_csv() const;
};

/// Theorem 1.7 at desk scale: every K_{r+1}-free graph with up to max_m
/// edges satisfies rho <= sqrt((1-1/r) 2m) with slack 1e-8, and equality
/// holds exactly on the stated family (complete bipartite for r=2, regular
/// complete r-partite for r>=3).
CampaignReport campaign_nikiforov(int max_m, int r, int workers = 0);

/// Ning-Zhai at desk scale: graphs with rho >= sqrt(m) - 1e-8 that are not
/// complete bipartite have at least floor((sqrt(m)-1)/2) triangles.
CampaignReport campaign_ning_zhai(int max_m, int workers = 0);

/// Tightness of the supersaturation constant: for each n (divisible by r),
/// T*_{n,r} beats the spectral threshold strictly and realizes exactly
/// c(n,F) copies; the normalized count is tabulated against
/// (2r/(r-1))^{(f-2)/2} alpha_F.
CampaignReport campaign_tightness(int r, const PatternProfile& pattern,
                                  const std::vector<long>& n_values);

struct PeelCampaignSpec {
    int instances = 1000;   // hypothesis-satisfying instances to check
    uint64_t base_seed = 1;
    std::vector<int> sizes = {20, 30, 40, 60};
    double a = 1.2;
    double epsilon = 0.5;
};

/// Random-model peeling suite: G(n,p) for p in {0.3,0.5,0.8} alternating
/// with planted multipartite-plus-noise; instances with rho >= sqrt(a m)
/// are peeled and the stepwise invariants plus the terminal entry/order/
/// degree bounds are asserted.
CampaignReport campaign_peel_properties(const PeelCampaignSpec& spec, int workers = 0);

/// Exploratory sweep of the counting supersaturation at exhaustive scale:
/// tabulates min N_F over all n-vertex graphs with e(T_{n,r}) + q edges
/// against q*c(n,F). Failures are findings, never errors.
CampaignReport campaign_mubayi_sweep(int r, const PatternProfile& pattern,
                                     const std::vector<long>& n_values,
                                     const std::vector<long>& q_values,
                                     int workers = 0);

/// Dispatches on spec.campaign; throws Error for unknown names.
CampaignReport run_campaign(const CampaignSpec& spec, int workers = 0);

/// Worker count: explicit > 0 wins, then SUPERSAT_WORKERS, then cores.
int resolve_workers(int requested);

}  // namespace supersat

#endif
