#pragma once

// Independent checks for hyperbolic hulls: boundary sampling along the
// geodesic edges and a plain Euclidean hull for comparison.

#include "blaschke/hyperbolic.hpp"

#include <algorithm>
#include <vector>

namespace testing {

using blaschke::Complex;
using blaschke::hyperbolic::HyperbolicHull;

inline double cross(Complex o, Complex p, Complex q) {
    return (p.real() - o.real()) * (q.imag() - o.imag()) - (p.imag() - o.imag()) * (q.real() - o.real());
}

// Points on the boundary geodesics plus a few interior geodesic samples.
inline std::vector<Complex> sample_hull(const HyperbolicHull& hull, int per_edge) {
    std::vector<Complex> out;
    const auto& v = hull.poincare_vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex p = v[i];
        const Complex q = v[(i + 1) % v.size()];
        for (int j = 0; j <= per_edge; ++j) {
            const Complex edge = blaschke::hyperbolic::geodesic_point(p, q, static_cast<double>(j) / per_edge);
            out.push_back(edge);
            if (v.size() > 2)
                out.push_back(blaschke::hyperbolic::geodesic_point(v[(i + 2) % v.size()], edge, 0.5));
        }
    }
    return out;
}

// Point-in-convex-polygon for a Euclidean hull of (S union {0}).
inline bool in_euclidean_hull(std::vector<Complex> pts, Complex z, double tol) {
    pts.emplace_back();
    std::sort(pts.begin(), pts.end(), [](Complex l, Complex r) {
        return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    });
    std::vector<Complex> h;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t start = h.size();
        for (Complex p : pts) {
            while (h.size() >= start + 2 && cross(h[h.size() - 2], h.back(), p) <= 0.0)
                h.pop_back();
            h.push_back(p);
        }
        h.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    if (h.size() < 3) {
        // segment or point: distance to the segment
        const Complex a = h.front();
        const Complex b = h.size() > 1 ? h[1] : a;
        const Complex d = b - a;
        const double t = std::norm(d) > 0 ? std::clamp(std::real((z - a) * std::conj(d)) / std::norm(d), 0.0, 1.0) : 0.0;
        return std::abs(z - (a + t * d)) <= tol;
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Complex a = h[i];
        const Complex b = h[(i + 1) % h.size()];
        if (cross(a, b, z) / std::abs(b - a) < -tol)
            return false;
    }
    return true;
}

} // namespace testing
