#pragma once

#include "blaschke/numeric.hpp"

#include <span>
#include <vector>

namespace blaschke::hyperbolic {

/// The geodesic {z : gamma (a - z) / (1 - conj(a) z) in [-1, 1]}.
///
/// Canonical form: Im gamma >= 0, and gamma = +1 when it is real (the set is
/// unchanged by gamma -> -gamma).
class Geodesic {
public:
    Geodesic(Complex a, Complex gamma);

    /// The geodesic through two distinct disc points.
    static Geodesic through(Complex z1, Complex z2);

    Complex a() const noexcept { return a_; }
    Complex gamma() const noexcept { return gamma_; }

    /// Parameter t with gamma (a - z) / (1 - conj(a) z) = t (complex in general).
    Complex chart(Complex z) const;
    /// Point of the geodesic with parameter t in (-1, 1).
    Complex at(double t) const;
    bool contains(Complex z, double tol) const;

private:
    Complex a_;
    Complex gamma_;
};

/// (z1 - (z1 - z2)/(1 - conj(z1) z2) t) / (1 - conj(z1) (z1 - z2)/(1 - conj(z1) z2) t);
/// runs from z1 (t = 0) to z2 (t = 1) along the geodesic.
Complex geodesic_point(Complex z1, Complex z2, double t);

/// |Im q| / (|q| + 1e-300) with q the ratio of the pseudo-hyperbolic
/// displacements of z2 and z3 seen from z1; zero exactly when the three
/// points share a geodesic. Throws Error(Degenerate) when two of the points
/// are within pseudo-hyperbolic distance 1e-10.
double collinearity_residual(Complex z1, Complex z2, Complex z3);

/// |z1 - z2| / |1 - conj(z1) z2|.
double pseudo_hyperbolic_distance(Complex z1, Complex z2);

/// k = 2p / (1 + |p|^2); throws Error(Domain) unless |p| < 1.
Complex poincare_to_klein(Complex p);
/// p = k / (1 + sqrt(1 - |k|^2)); throws Error(Domain) unless |k| < 1.
Complex klein_to_poincare(Complex k);

enum class HullKind { Point, Segment, Polygon };

const char* to_string(HullKind kind) noexcept;

/// Hyperbolic convex hull of finitely many disc points.
///
/// Geodesics are straight chords in the Klein model, so the hull is the
/// Euclidean hull of the Klein images. Vertices are counterclockwise; a
/// segment stores its two endpoints and a point its single vertex.
struct HyperbolicHull {
    std::vector<Complex> poincare_vertices;
    std::vector<Complex> klein_vertices;
    HullKind kind;
};

/// Throws Error(Domain) on empty input or points outside the open disc.
/// Inputs within pseudo-hyperbolic distance 1e-12 are merged first.
HyperbolicHull hyperbolic_convex_hull(std::span<const Complex> points);

/// Whether the Klein image of z is inside the hull polygon or within the
/// Euclidean distance tol of it (measured in the Klein model).
///
/// Near a point p the Klein map stretches lengths by at least
/// 2(1 - |p|^2)/(1 + |p|^2)^2 and at most 2/(1 + |p|^2), so a Poincare
/// tolerance converts with those factors.
bool hull_contains(const HyperbolicHull& hull, Complex z, double tol);

/// Signed Klein-model distance from z to the hull: negative inside a
/// polygon, zero on its boundary, positive outside.
double hull_signed_distance(const HyperbolicHull& hull, Complex z);

} // namespace blaschke::hyperbolic
