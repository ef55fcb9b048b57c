#pragma once

#include "blaschke/blaschke.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>

namespace blaschke::cli {

/// Parses {"gamma": [re, im], "zeros": [[re, im], ...]}. gamma is optional
/// (default 1) but must be unimodular when given. Diagnostics name the
/// source, and the line for syntax errors or the field path otherwise.
/// Throws Error(Parse).
FiniteBlaschkeProduct parse_product_spec(std::string_view text, std::string_view source);

/// Reads and parses a spec file; Error(Io) when it cannot be read.
FiniteBlaschkeProduct load_product_spec(const std::string& path);

nlohmann::json product_to_json(const FiniteBlaschkeProduct& b);
nlohmann::json complex_to_json(Complex z);

/// "re,im" as used by --gamma0. Throws Error(Parse).
Complex parse_complex_pair(std::string_view text);

/// %.17g, with negative zero printed as 0.
std::string format_double(double x);

/// Named tolerances used by the commands and verification suites.
class Tolerances {
public:
    Tolerances();

    double operator[](std::string_view name) const;
    void set(std::string_view name, double value);

    /// Applies "name=value,name=value"; unknown names, malformed entries and
    /// non-positive values throw Error(Parse).
    void apply_overrides(std::string_view spec);

    /// Defaults overridden from BLASCHKE_LAB_TOL_OVERRIDES, if set.
    static Tolerances from_environment();

    const std::map<std::string, double, std::less<>>& values() const noexcept { return values_; }

private:
    std::map<std::string, double, std::less<>> values_;
};

} // namespace blaschke::cli
