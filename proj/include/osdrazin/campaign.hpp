#pragma once

// Seeded verification campaigns. A campaign runs one registered check many
// times on generated instances; each trial draws from its own seed stream,
// so results do not depend on how trials are spread over worker threads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "osdrazin/errors.hpp"
#include "osdrazin/matrix_io.hpp"
#include "osdrazin/report.hpp"

namespace osdrazin {

/// Bad configuration: unknown id or family, unsupported scalar, zero trials.
class UsageError : public Error {
public:
    using Error::Error;
};

enum ExitStatus : int { exit_pass = 0, exit_failures = 1, exit_usage = 2, exit_budget = 3 };

struct CampaignConfig {
    std::string theorem;
    std::size_t trials = 100;
    std::size_t dim = 3;
    /// When larger than dim, each trial draws its dimension from [dim, dim_max].
    std::size_t dim_max = 0;
    std::string scalar = "rational";
    std::uint64_t seed = 0;
    /// Empty selects the default family of the theorem.
    std::string family;
    std::uint64_t budget_seconds = 600;
    /// 0 means worker_count().
    unsigned workers = 0;
};

struct CampaignResult {
    /// One per trial that ran, in trial order.
    std::vector<VerificationReport> reports;
    nlohmann::json aggregate;
    bool budget_exceeded = false;
    double seconds = 0;

    int exit_status() const;
};

struct TheoremInfo {
    std::string id;
    std::string summary;
    std::vector<std::string> families; ///< first entry is the default
};

const std::vector<TheoremInfo>& registered_theorems();

/// Throws UsageError for an invalid configuration; everything that goes
/// wrong inside a trial is recorded in that trial's report instead.
CampaignResult run_campaign(const CampaignConfig& cfg);

/// Pass/fail counts, observed index histograms and every failed report
/// verbatim. Contains no timings, so equal inputs give equal bytes.
nlohmann::json aggregate_reports(const std::vector<VerificationReport>& reports, const nlohmann::json& header);

std::string aggregate_text(const nlohmann::json& aggregate);

} // namespace osdrazin
