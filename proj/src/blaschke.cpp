#include "blaschke/blaschke.hpp"
#include "blaschke/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace blaschke {

namespace {

constexpr double kZeroMargin = 1e-12;
constexpr double kPoleTolerance = 1e-14;
constexpr double kCircleBand = 1e-9;
constexpr double kFiberTolerance = 1e-8;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex checked_denominator(Complex zk, Complex z) {
    const Complex den = 1.0 - std::conj(zk) * z;
    if (std::abs(den) < kPoleTolerance) {
        std::ostringstream msg;
        msg << "Blaschke product evaluated at the pole 1/conj(" << zk << ")";
        fail(ErrorKind::PoleProximity, msg.str());
    }
    return den;
}


struct RepeatedZero {
    Complex at;
    int multiplicity;
};

// Zeros are grouped only when bitwise equal: a repeated factor is exact input,
// whereas nearly equal zeros are left for the root finder to sort out.
std::vector<RepeatedZero> group_zeros(const std::vector<Complex>& zeros) {
    std::vector<RepeatedZero> out;
    for (Complex z : zeros) {
        auto it = std::find_if(out.begin(), out.end(), [&](const RepeatedZero& g) { return g.at == z; });
        if (it == out.end())
            out.push_back({z, 1});
        else
            ++it->multiplicity;
    }
    return out;
}

std::vector<Complex> add(std::vector<Complex> lhs, const std::vector<Complex>& rhs) {
    if (lhs.size() < rhs.size())
        lhs.resize(rhs.size());
    for (std::size_t k = 0; k < rhs.size(); ++k)
        lhs[k] += rhs[k];
    return lhs;
}

// With w_j the distinct zeros (multiplicity m_j), P'Q - PQ' equals
// prod (w_j - z)^(m_j-1) (1 - conj(w_j) z)^(m_j-1) times
//   R = S Qr - Pr T,   Pr = prod (w_j - z),   Qr = prod (1 - conj(w_j) z),
//   S = -sum m_j prod_{i!=j} (w_i - z),   T = -sum m_j conj(w_j) prod_{i!=j} (1 - conj(w_i) z).
// Root finding on R keeps the known multiple critical points exact.
poly::Polynomial deflated_critical_numerator(const std::vector<RepeatedZero>& groups) {
    const std::size_t d = groups.size();
    auto inner = [&](std::size_t j) { return poly::Polynomial({groups[j].at, Complex{-1.0, 0.0}}); };
    auto outer = [&](std::size_t j) { return poly::Polynomial({Complex{1.0, 0.0}, -std::conj(groups[j].at)}); };
    poly::Polynomial pr({Complex{1.0, 0.0}});
    poly::Polynomial qr({Complex{1.0, 0.0}});
    std::vector<Complex> s{Complex{}};
    std::vector<Complex> t{Complex{}};
    for (std::size_t j = 0; j < d; ++j) {
        pr = pr * inner(j);
        qr = qr * outer(j);
        poly::Polynomial ps({Complex{1.0, 0.0}});
        poly::Polynomial qs({Complex{1.0, 0.0}});
        for (std::size_t i = 0; i < d; ++i)
            if (i != j) {
                ps = ps * inner(i);
                qs = qs * outer(i);
            }
        const double m = groups[j].multiplicity;
        s = add(std::move(s), (Complex{-m, 0.0} * ps).coeffs());
        t = add(std::move(t), (-m * std::conj(groups[j].at) * qs).coeffs());
    }
    std::vector<Complex> c = (poly::Polynomial(std::move(s)) * qr - pr * poly::Polynomial(std::move(t))).coeffs();
    if (c.size() > 2 * d - 1)
        c.resize(2 * d - 1);
    return poly::Polynomial(std::move(c));
}

} // namespace

FiniteBlaschkeProduct::FiniteBlaschkeProduct(Complex gamma, std::vector<Complex> zeros)
    : gamma_(gamma), zeros_(std::move(zeros)) {
    if (zeros_.empty())
        fail(ErrorKind::Domain, "a finite Blaschke product needs at least one zero");
    for (Complex zk : zeros_)
        if (!finite(zk) || std::abs(zk) >= 1.0 - kZeroMargin) {
            std::ostringstream msg;
            msg << "zero " << zk << " is not strictly inside the unit disc";
            fail(ErrorKind::Domain, msg.str());
        }
    const double m = std::abs(gamma_);
    if (!std::isfinite(m) || m == 0.0)
        fail(ErrorKind::Domain, "unimodular constant must be nonzero and finite");
    gamma_ /= m;
}

FiniteBlaschkeProduct FiniteBlaschkeProduct::monomial(int n) {
    if (n < 1)
        fail(ErrorKind::Domain, "monomial order must be >= 1");
    return {Complex{n % 2 == 0 ? 1.0 : -1.0, 0.0}, std::vector<Complex>(n, Complex{})};
}

double FiniteBlaschkeProduct::max_zero_modulus() const noexcept {
    double m = 0.0;
    for (Complex zk : zeros_)
        m = std::max(m, std::abs(zk));
    return m;
}

Complex FiniteBlaschkeProduct::operator()(Complex z) const {
    Complex acc = gamma_;
    for (Complex zk : zeros_)
        acc *= (zk - z) / checked_denominator(zk, z);
    return acc;
}

poly::Polynomial FiniteBlaschkeProduct::numerator() const {
    std::vector<Complex> c{gamma_};
    for (Complex zk : zeros_) {
        c.push_back(Complex{});
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = zk * c[k] - c[k - 1];
        c[0] = zk * c[0];
    }
    return poly::Polynomial(std::move(c));
}

poly::Polynomial FiniteBlaschkeProduct::denominator() const {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (Complex zk : zeros_) {
        const Complex w = std::conj(zk);
        c.push_back(Complex{});
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = c[k] - w * c[k - 1];
    }
    return poly::Polynomial(std::move(c));
}

Complex derivative(const FiniteBlaschkeProduct& b, Complex z) {
    Complex value = b.gamma();
    Complex slope{};
    for (Complex zk : b.zeros()) {
        const Complex den = checked_denominator(zk, z);
        const Complex f = (zk - z) / den;
        const Complex df = -one_minus_abs2(zk) / (den * den);
        slope = slope * f + value * df;
        value *= f;
    }
    return slope;
}

Complex log_derivative(const FiniteBlaschkeProduct& b, Complex z) {
    Complex acc{};
    for (Complex zk : b.zeros()) {
        if (std::abs(z - zk) <= kZeroMargin)
            fail(ErrorKind::ZeroProximity, "logarithmic derivative evaluated at a zero");
        acc += one_minus_abs2(zk) / (checked_denominator(zk, z) * (z - zk));
    }
    return acc;
}

double boundary_derivative_modulus(const FiniteBlaschkeProduct& b, double theta) {
    const Complex e = polar_unit(theta);
    double acc = 0.0;
    for (Complex zk : b.zeros())
        acc += one_minus_abs2(zk) / std::norm(e - zk);
    return acc;
}

double one_minus_abs2(const FiniteBlaschkeProduct& b, Complex z) {
    // 1 - X x = (1 - X) + X (1 - x) keeps every term nonnegative inside the disc.
    const double s = one_minus_abs2(z);
    double rest = 0.0;
    double prod = 1.0;
    for (Complex zk : b.zeros()) {
        const Complex den = checked_denominator(zk, z);
        const double factor_abs2 = std::norm((zk - z) / den);
        const double factor_gap = s * one_minus_abs2(zk) / std::norm(den);
        rest += prod * factor_gap;
        prod *= factor_abs2;
    }
    return rest;
}

Complex difference(const FiniteBlaschkeProduct& b, Complex p, Complex q, Complex q_minus_p) {
    // prod f_k(p) - prod f_k(q) = sum_k [prod_{j<k} f_j(q)] (f_k(p) - f_k(q)) [prod_{j>k} f_j(p)]
    // with f_k(p) - f_k(q) = (q - p)(1 - |z_k|^2) / ((1 - conj(z_k) p)(1 - conj(z_k) q)).
    const auto& zs = b.zeros();
    const std::size_t n = zs.size();
    std::vector<Complex> suffix(n + 1, Complex{1.0, 0.0});
    for (std::size_t k = n; k-- > 0;)
        suffix[k] = suffix[k + 1] * (zs[k] - p) / checked_denominator(zs[k], p);
    Complex prefix{1.0, 0.0};
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) {
        const Complex dp = checked_denominator(zs[k], p);
        const Complex dq = checked_denominator(zs[k], q);
        const Complex gap = q_minus_p * one_minus_abs2(zs[k]) / (dp * dq);
        acc += prefix * gap * suffix[k + 1];
        prefix *= (zs[k] - q) / dq;
    }
    return b.gamma() * acc;
}

poly::Polynomial critical_numerator(const FiniteBlaschkeProduct& b) {
    const poly::Polynomial p = b.numerator();
    const poly::Polynomial q = b.denominator();
    std::vector<Complex> c = (p.derivative() * q - p * q.derivative()).coeffs();
    const std::size_t cancelled = 2 * static_cast<std::size_t>(b.order()) - 1;
    if (c.size() > cancelled)
        c.resize(cancelled);
    return poly::Polynomial(std::move(c));
}

int CriticalSet::interior_count() const noexcept {
    int n = 0;
    for (const auto& c : interior)
        n += c.multiplicity;
    return n;
}

int CriticalSet::exterior_count() const noexcept {
    int n = 0;
    for (const auto& c : exterior)
        n += c.multiplicity;
    return n;
}

CriticalSet critical_points(const FiniteBlaschkeProduct& b) {
    CriticalSet out;
    const auto groups = group_zeros(b.zeros());
    for (const auto& g : groups)
        if (g.multiplicity > 1) {
            out.interior.push_back({g.at, g.multiplicity - 1});
            if (g.at != Complex{})
                out.exterior.push_back({1.0 / std::conj(g.at), g.multiplicity - 1});
        }
    const poly::Polynomial numer = deflated_critical_numerator(groups);
    const std::vector<poly::Root> roots =
        numer.degree() < 1 ? std::vector<poly::Root>{} : poly::find_roots(numer).roots;
    for (const poly::Root& r : roots) {
        const double m = std::abs(r.location);
        if (std::abs(m - 1.0) < kCircleBand) {
            std::ostringstream msg;
            msg << "critical point " << r.location << " lies on the unit circle";
            fail(ErrorKind::NumericalBreakdown, msg.str());
        }
        (m < 1.0 ? out.interior : out.exterior).push_back({r.location, r.multiplicity});
    }
    if (out.interior_count() != b.order() - 1) {
        std::ostringstream msg;
        msg << "found " << out.interior_count() << " interior critical points, expected "
            << b.order() - 1;
        fail(ErrorKind::NumericalBreakdown, msg.str());
    }
    return out;
}

std::vector<Complex> fiber_solve(const FiniteBlaschkeProduct& b, Complex c) {
    if (!(std::abs(c) < 1.0))
        fail(ErrorKind::Domain, "fiber value must lie in the open unit disc");
    const poly::Polynomial f = b.numerator() - c * b.denominator();
    std::vector<Complex> sols = poly::find_roots(f).expanded();
    for (Complex w : sols) {
        if (!(std::abs(w) < 1.0) || !(std::abs(b(w) - c) <= kFiberTolerance)) {
            std::ostringstream msg;
            msg << "fiber point " << w << " does not solve B(w) = " << c;
            fail(ErrorKind::NonConvergence, msg.str());
        }
    }
    return sols;
}

FiniteBlaschkeProduct conjugate_by(const FiniteBlaschkeProduct& b, const DiscAutomorphism& inner,
                                   const DiscAutomorphism& outer) {
    const DiscAutomorphism back = inverse(inner);
    std::vector<Complex> zeros;
    for (Complex w : fiber_solve(b, outer.a()))
        zeros.push_back(back(w));
    for (Complex z : zeros)
        if (std::abs(z) >= 1.0 - kZeroMargin)
            fail(ErrorKind::NumericalBreakdown,
                 "conjugated product has a zero numerically on the unit circle");

    const FiniteBlaschkeProduct shape(Complex{1.0, 0.0}, zeros);
    static constexpr std::array<Complex, 3> probes{Complex{0.0, 0.0}, Complex{0.37, 0.11},
                                                   Complex{-0.29, 0.23}};
    for (Complex probe : probes) {
        const bool clear = std::all_of(zeros.begin(), zeros.end(),
                                       [&](Complex z) { return std::abs(z - probe) > 1e-6; });
        if (!clear)
            continue;
        const Complex target = outer(b(inner(probe)));
        return {target / shape(probe), std::move(zeros)};
    }
    fail(ErrorKind::NumericalBreakdown, "no probe point clear of the conjugate's zeros");
}

} // namespace blaschke
