#include "cli/svg.hpp"

#include "blaschke/hyperbolic.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace blaschke::cli {

namespace {

constexpr int kEdgeSamples = 64;
constexpr double kMarker = 0.022;

struct Marker {
    Complex at;
    int multiplicity;
};

std::string num(double x) {
    if (std::abs(x) < 5e-7)
        x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

// SVG y grows downwards.
std::string xy(Complex z) { return num(z.real()) + "," + num(-z.imag()); }

std::vector<Marker> group(const std::vector<Complex>& pts) {
    std::vector<Marker> out;
    for (Complex z : pts) {
        bool merged = false;
        for (auto& m : out)
            if (std::abs(m.at - z) <= 1e-9) {
                ++m.multiplicity;
                merged = true;
                break;
            }
        if (!merged)
            out.push_back({z, 1});
    }
    return out;
}

// Zero labels sit above right of the marker, critical-point labels below
// right, so the two stay readable when a zero is also a critical point.
void label(std::ostringstream& svg, Complex at, int multiplicity, bool below) {
    if (multiplicity < 2)
        return;
    svg << "  <text x=\"" << num(at.real() + 0.03) << "\" y=\"" << num(-at.imag() + (below ? 0.08 : -0.03))
        << "\" font-size=\"0.07\" font-family=\"sans-serif\">&#215;" << multiplicity << "</text>\n";
}

} // namespace

std::string render_svg(const FiniteBlaschkeProduct& b) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
    svg << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.006\"/>\n";

    const auto hull = hyperbolic::hyperbolic_convex_hull(b.zeros());
    const auto& v = hull.poincare_vertices;
    if (hull.kind == hyperbolic::HullKind::Point) {
        svg << "  <circle class=\"hull\" cx=\"" << num(v[0].real()) << "\" cy=\"" << num(-v[0].imag())
            << "\" r=\"0.045\" fill=\"none\" stroke=\"#2a7f62\" stroke-width=\"0.005\"/>\n";
    } else {
        const std::size_t edges = hull.kind == hyperbolic::HullKind::Segment ? 1 : v.size();
        svg << "  <polyline class=\"hull\" fill=\"" << (edges > 1 ? "#2a7f6222" : "none")
            << "\" stroke=\"#2a7f62\" stroke-width=\"0.006\" points=\"";
        for (std::size_t i = 0; i < edges; ++i) {
            const Complex p = v[i];
            const Complex q = v[(i + 1) % v.size()];
            // consecutive edges share their end points
            for (int j = i == 0 ? 0 : 1; j < kEdgeSamples; ++j) {
                svg << (i == 0 && j == 0 ? "" : " ")
                    << xy(hyperbolic::geodesic_point(p, q, static_cast<double>(j) / (kEdgeSamples - 1)));
            }
        }
        svg << "\"/>\n";
    }

    for (const auto& m : group(b.zeros())) {
        svg << "  <circle class=\"zero\" cx=\"" << num(m.at.real()) << "\" cy=\"" << num(-m.at.imag())
            << "\" r=\"" << num(kMarker) << "\" fill=\"#1f4e9c\"/>\n";
        label(svg, m.at, m.multiplicity, false);
    }

    for (const auto& c : critical_points(b).interior) {
        const Complex z = c.location;
        const double x = z.real();
        const double y = -z.imag();
        svg << "  <path class=\"critical\" d=\"M" << num(x - kMarker) << "," << num(y - kMarker) << " L"
            << num(x + kMarker) << "," << num(y + kMarker) << " M" << num(x - kMarker) << ","
            << num(y + kMarker) << " L" << num(x + kMarker) << "," << num(y - kMarker)
            << "\" stroke=\"#c0392b\" stroke-width=\"0.008\"/>\n";
        label(svg, z, c.multiplicity, true);
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace blaschke::cli
