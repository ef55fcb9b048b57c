#include "cli/spec_io.hpp"

#include "blaschke/error.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace blaschke::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::string_view source, const std::string& where, const std::string& what) {
    std::ostringstream msg;
    msg << source << ": " << where << ": " << what;
    fail(ErrorKind::Parse, msg.str());
}

int line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

Complex read_pair(const json& v, std::string_view source, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        parse_fail(source, where, "expected [re, im]");
    const Complex z{v[0].get<double>(), v[1].get<double>()};
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        parse_fail(source, where, "non-finite value");
    return z;
}

} // namespace

FiniteBlaschkeProduct parse_product_spec(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        parse_fail(source, "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)), "malformed JSON");
    }
    if (!doc.is_object())
        parse_fail(source, "top level", "expected an object with \"zeros\"");
    for (const auto& item : doc.items())
        if (item.key() != "gamma" && item.key() != "zeros")
            parse_fail(source, item.key(), "unknown field");

    Complex gamma{1.0, 0.0};
    if (doc.contains("gamma")) {
        gamma = read_pair(doc["gamma"], source, "gamma");
        if (std::abs(std::abs(gamma) - 1.0) > 1e-9) {
            std::ostringstream what;
            what << "modulus " << std::abs(gamma) << " is not 1";
            parse_fail(source, "gamma", what.str());
        }
    }

    if (!doc.contains("zeros"))
        parse_fail(source, "zeros", "missing");
    const json& zs = doc["zeros"];
    if (!zs.is_array() || zs.empty())
        parse_fail(source, "zeros", "expected a nonempty array");
    std::vector<Complex> zeros;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const std::string where = "zeros[" + std::to_string(i) + "]";
        const Complex z = read_pair(zs[i], source, where);
        if (!(std::abs(z) < 1.0 - 1e-12)) {
            std::ostringstream what;
            what << "modulus " << std::abs(z) << " must be < 1";
            parse_fail(source, where, what.str());
        }
        zeros.push_back(z);
    }
    return {gamma, std::move(zeros)};
}

FiniteBlaschkeProduct load_product_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_product_spec(buf.str(), path);
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json product_to_json(const FiniteBlaschkeProduct& b) {
    json zeros = json::array();
    for (Complex z : b.zeros())
        zeros.push_back(complex_to_json(z));
    return {{"gamma", complex_to_json(b.gamma())}, {"zeros", std::move(zeros)}};
}

Complex parse_complex_pair(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        fail(ErrorKind::Parse, "expected re,im but got '" + std::string(text) + "'");
    double parts[2];
    const std::string_view pieces[2] = {text.substr(0, comma), text.substr(comma + 1)};
    for (int i = 0; i < 2; ++i) {
        const std::string piece(pieces[i]);
        char* end = nullptr;
        errno = 0;
        parts[i] = std::strtod(piece.c_str(), &end);
        if (piece.empty() || end != piece.c_str() + piece.size() || errno != 0 || !std::isfinite(parts[i]))
            fail(ErrorKind::Parse, "expected re,im but got '" + std::string(text) + "'");
    }
    return {parts[0], parts[1]};
}

std::string format_double(double x) {
    if (x == 0.0)
        x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Tolerances::Tolerances()
    : values_{
          {"hull_klein_tol", 1e-8},
          {"reflection_tol", 1e-8},
          {"converge_sup_tol", 1e-6},
          {"rotation_tol", 1e-12},
          {"counterexample_tol", 1e-6},
          {"valence_residual_tol", 0.05},
          {"schwarz_pick_slack", 1e-12},
          {"fatou_limit_tol", 1e-3},
          {"separation_value_tol", 1e-8},
      } {}

double Tolerances::operator[](std::string_view name) const {
    const auto it = values_.find(name);
    if (it == values_.end())
        fail(ErrorKind::Parse, "unknown tolerance '" + std::string(name) + "'");
    return it->second;
}

void Tolerances::set(std::string_view name, double value) {
    const auto it = values_.find(name);
    if (it == values_.end())
        fail(ErrorKind::Parse, "unknown tolerance '" + std::string(name) + "'");
    if (!(value > 0.0) || !std::isfinite(value))
        fail(ErrorKind::Parse, "tolerance '" + std::string(name) + "' must be a positive number");
    it->second = value;
}

void Tolerances::apply_overrides(std::string_view spec) {
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const std::string_view entry = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (entry.empty())
            continue;
        const auto eq = entry.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorKind::Parse, "tolerance override '" + std::string(entry) + "' is not name=value");
        const std::string_view name = entry.substr(0, eq);
        const std::string_view value = entry.substr(eq + 1);
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            fail(ErrorKind::Parse, "tolerance override '" + std::string(entry) + "' has a bad value");
        set(name, x);
    }
}

Tolerances Tolerances::from_environment() {
    Tolerances t;
    if (const char* env = std::getenv("BLASCHKE_LAB_TOL_OVERRIDES"))
        t.apply_overrides(env);
    return t;
}

} // namespace blaschke::cli
