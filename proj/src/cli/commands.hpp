#pragma once

#include "blaschke/blaschke.hpp"
#include "blaschke/lab.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blaschke::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitIo = 4,
};

struct CriticalRow {
    Complex location;
    int multiplicity;
    bool interior;
    std::optional<bool> in_hull;  // only for interior points, and only with --hull
};

/// Interior points first, then exterior ones, each in root-finder order.
std::vector<CriticalRow> critical_rows(const FiniteBlaschkeProduct& b, bool check_hull, double klein_tol);

std::string critical_rows_csv(std::span<const CriticalRow> rows);
nlohmann::json critical_rows_json(std::span<const CriticalRow> rows);
std::string convergence_csv(std::span<const lab::ConvergenceRecord> records);

/// Entry point behind the blaschke-lab executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace blaschke::cli
