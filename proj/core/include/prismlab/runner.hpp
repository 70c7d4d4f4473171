#pragma once

#include <json.hpp>

#include "prismlab/session.hpp"

namespace prismlab {

struct RunOptions {
    std::optional<int> trunc_override;
    std::optional<int> weight_override;
    bool verify = false;
    long long seed = 0;
    unsigned threads = 1;
    std::size_t pair_budget = 200000;
};

struct RunOutcome {
    nlohmann::ordered_json report;  // { "stable": ..., "timing": ... }
    int exit_code = 0;              // 0 ok, 3 on any check failure
};

extern const char* const kToolVersion;

RunOutcome run_session(const SessionSpec& spec, const RunOptions& opt);

nlohmann::ordered_json report_to_json(const CohomologyReport& rep);

}  // namespace prismlab
