#ifndef ELLU2_CAMPAIGN_HPP
#define ELLU2_CAMPAIGN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ellu2/modulus.hpp"

namespace ellu2 {

/// Knobs of a verification campaign. Per-check sample counts and tolerances
/// default to the pinned values in the check registry; entries in the maps
/// override them by check id.
struct CampaignConfig {
    double p = 0.2;
    double q = 0.5;
    std::uint64_t seed = 1;
    int max_mn = 3;
    std::map<std::string, int> samples;
    std::map<std::string, double> tolerances;
};

struct CheckResult {
    std::string id;
    std::string anchor; // the identity the check exercises
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
    int draws = 0;
    int resamples = 0;
    std::string note;
};

struct Report {
    CampaignConfig config;
    std::vector<CheckResult> checks;
    bool status = true;
};

/// Thrown when more than half the draws of a check had to be redrawn,
/// signalling a pathological (p,q) choice.
struct CampaignAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Check groups selectable from the command line: theta, qdybe, gen-pairing,
/// det-pairing, matrix-pairing, action, antipode, star, singular, all.
std::vector<std::string> check_groups();

/// Ids of the individual checks in a group ("all" for every check).
std::vector<std::string> checks_in_group(const std::string& group);

/// Run every check of the listed groups. Deterministic for a fixed config:
/// each check draws from its own (seed, id)-derived stream.
Report run_campaign(const CampaignConfig& cfg, const std::vector<std::string>& groups);

/// Stable JSON rendering of a report: {config, checks[], status}.
std::string report_to_json(const Report& rep);

} // namespace ellu2

#endif
