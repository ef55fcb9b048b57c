#include "blaschke/hyperbolic.hpp"
#include "blaschke/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blaschke::hyperbolic {

namespace {

constexpr double kCanonicalTol = 1e-12;
constexpr double kCoincidence = 1e-10;
constexpr double kDedup = 1e-12;
constexpr double kCollinearCutoff = 1e-12;

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double distance_to_segment(Complex p, Complex u, Complex v) {
    const Complex d = v - u;
    const double len2 = std::norm(d);
    if (len2 == 0.0)
        return std::abs(p - u);
    const double t = std::clamp(((p - u) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (u + t * d));
}

Complex moebius_shift(Complex z1, Complex z2) { return (z1 - z2) / (1.0 - std::conj(z1) * z2); }

} // namespace

const char* to_string(HullKind kind) noexcept {
    switch (kind) {
    case HullKind::Point: return "point";
    case HullKind::Segment: return "segment";
    case HullKind::Polygon: return "polygon";
    }
    return "unknown";
}

Geodesic::Geodesic(Complex a, Complex gamma) : a_(a), gamma_(gamma) {
    if (!(std::abs(a) < 1.0))
        fail(ErrorKind::Domain, "geodesic base point must lie in the open disc");
    const double m = std::abs(gamma);
    if (!std::isfinite(m) || m == 0.0)
        fail(ErrorKind::Domain, "geodesic direction must be a nonzero finite number");
    gamma_ /= m;
    if (std::abs(gamma_.imag()) <= kCanonicalTol)
        gamma_ = Complex{1.0, 0.0};
    else if (gamma_.imag() < 0.0)
        gamma_ = -gamma_;
}

Geodesic Geodesic::through(Complex z1, Complex z2) {
    const Complex d = moebius_shift(z1, z2);
    if (std::abs(d) <= kCoincidence)
        fail(ErrorKind::Degenerate, "geodesic through coincident points");
    return {z1, std::conj(d)};
}

Complex Geodesic::chart(Complex z) const { return gamma_ * (a_ - z) / (1.0 - std::conj(a_) * z); }

Complex Geodesic::at(double t) const {
    const Complex ga = gamma_ * a_;
    return std::conj(gamma_) * (ga - t) / (1.0 - std::conj(ga) * t);
}

bool Geodesic::contains(Complex z, double tol) const {
    const Complex t = chart(z);
    return std::abs(t.imag()) <= tol && std::abs(t.real()) <= 1.0 + tol;
}

Complex geodesic_point(Complex z1, Complex z2, double t) {
    const Complex d = moebius_shift(z1, z2) * t;
    return (z1 - d) / (1.0 - std::conj(z1) * d);
}

double collinearity_residual(Complex z1, Complex z2, Complex z3) {
    const Complex d2 = moebius_shift(z1, z2);
    const Complex d3 = moebius_shift(z1, z3);
    if (std::abs(d2) <= kCoincidence || std::abs(d3) <= kCoincidence ||
        pseudo_hyperbolic_distance(z2, z3) <= kCoincidence)
        fail(ErrorKind::Degenerate, "collinearity test needs three distinct points");
    const Complex q = d2 / d3;
    return std::abs(q.imag()) / (std::abs(q) + 1e-300);
}

double pseudo_hyperbolic_distance(Complex z1, Complex z2) { return std::abs(moebius_shift(z1, z2)); }

Complex poincare_to_klein(Complex p) {
    if (!(std::abs(p) < 1.0))
        fail(ErrorKind::Domain, "Poincare point outside the open disc");
    return 2.0 * p / (1.0 + std::norm(p));
}

Complex klein_to_poincare(Complex k) {
    if (!(std::abs(k) < 1.0))
        fail(ErrorKind::Domain, "Klein point outside the open disc");
    return k / (1.0 + std::sqrt(one_minus_abs2(k)));
}

HyperbolicHull hyperbolic_convex_hull(std::span<const Complex> points) {
    if (points.empty())
        fail(ErrorKind::Domain, "hull of an empty point set");

    std::vector<Complex> unique;
    for (Complex p : points) {
        if (!(std::abs(p) < 1.0))
            fail(ErrorKind::Domain, "hull input outside the open disc");
        const bool dup = std::any_of(unique.begin(), unique.end(), [&](Complex q) {
            return pseudo_hyperbolic_distance(p, q) <= kDedup;
        });
        if (!dup)
            unique.push_back(p);
    }

    // Monotone chain on Klein images, carrying the Poincare originals along.
    struct Vertex { Complex klein; Complex poincare; };
    std::vector<Vertex> pts;
    for (Complex p : unique)
        pts.push_back({poincare_to_klein(p), p});
    std::sort(pts.begin(), pts.end(), [](const Vertex& l, const Vertex& r) {
        if (l.klein.real() != r.klein.real())
            return l.klein.real() < r.klein.real();
        return l.klein.imag() < r.klein.imag();
    });

    HyperbolicHull hull{};
    if (pts.size() == 1) {
        hull.klein_vertices = {pts[0].klein};
        hull.poincare_vertices = {pts[0].poincare};
        hull.kind = HullKind::Point;
        return hull;
    }

    std::vector<Vertex> chain;
    chain.reserve(2 * pts.size());
    for (const Vertex& v : pts) {
        while (chain.size() >= 2 &&
               cross(chain[chain.size() - 2].klein, chain.back().klein, v.klein) <= kCollinearCutoff)
            chain.pop_back();
        chain.push_back(v);
    }
    const std::size_t lower = chain.size() + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        const Vertex& v = pts[i];
        while (chain.size() >= lower &&
               cross(chain[chain.size() - 2].klein, chain.back().klein, v.klein) <= kCollinearCutoff)
            chain.pop_back();
        chain.push_back(v);
    }
    chain.pop_back();

    for (const Vertex& v : chain) {
        hull.klein_vertices.push_back(v.klein);
        hull.poincare_vertices.push_back(v.poincare);
    }
    hull.kind = chain.size() <= 2 ? HullKind::Segment : HullKind::Polygon;
    return hull;
}

double hull_signed_distance(const HyperbolicHull& hull, Complex z) {
    const Complex k = poincare_to_klein(z);
    const auto& v = hull.klein_vertices;
    switch (hull.kind) {
    case HullKind::Point:
        return std::abs(k - v[0]);
    case HullKind::Segment:
        return distance_to_segment(k, v[0], v[1]);
    case HullKind::Polygon:
        break;
    }
    double inner = std::numeric_limits<double>::infinity();
    bool inside = true;
    double outer = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex u = v[i];
        const Complex w = v[(i + 1) % v.size()];
        const double edge = cross(u, w, k) / std::abs(w - u);
        if (edge < 0.0)
            inside = false;
        inner = std::min(inner, edge);
        outer = std::min(outer, distance_to_segment(k, u, w));
    }
    return inside ? -inner : outer;
}

bool hull_contains(const HyperbolicHull& hull, Complex z, double tol) {
    return hull_signed_distance(hull, z) <= tol;
}

} // namespace blaschke::hyperbolic
