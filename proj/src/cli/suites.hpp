#pragma once

#include "cli/spec_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string_view>

namespace blaschke::cli {

enum class Suite { Hull, Converge, Counterexample, Valence, Separation, Fatou };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
const char* to_string(Suite suite) noexcept;
/// Trial count used when --trials is not given.
int default_trials(Suite suite) noexcept;

struct SuiteOutcome {
    nlohmann::json summary;
    int violations = 0;  // assertion failures
    int errors = 0;      // trials aborted by a numerical error
};

/// Runs one verification suite. The summary lists the check count, the
/// suite's headline statistics and, on failure, the first failing instance
/// in a replayable form (the product as a spec file plus the parameters).
SuiteOutcome run_suite(Suite suite, int trials, std::uint64_t seed, const Tolerances& tol);

} // namespace blaschke::cli
