#include "blaschke/polyroots.hpp"
#include "blaschke/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace blaschke::poly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTrimRelative = 1e-14;
constexpr int kSweepBudget = 200;
constexpr double kAngleOffset = 0.4;
constexpr double kClusterRelative = 1e-7;
constexpr double kResidualTolerance = 1e-8;
constexpr double kPolishTarget = 1e-12;
constexpr double kMultipleRootTest = 1e-12;
constexpr double kClusterReach = 0.1;
constexpr int kNewtonBudget = 100;

// |p(z)| relative to sum |a_k| max(1, |z|)^k: the coefficient scale inside
// the unit disc, the usual backward error outside it.
double backward_error(const Polynomial& p, Complex z) {
    const double scale = p.magnitude_at(std::max(1.0, std::abs(z)));
    return scale > 0.0 ? std::abs(p(z)) / scale : 0.0;
}

// Union-find over approximation indices.
struct Clusters {
    std::vector<int> parent;
    explicit Clusters(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void join(int i, int j) { parent[find(i)] = find(j); }
};

std::vector<Complex> aberth(const Polynomial& p) {
    const int n = p.degree();
    const auto& c = p.coeffs();
    double cauchy = 0.0;
    for (int k = 0; k < n; ++k)
        cauchy = std::max(cauchy, std::abs(c[k] / c[n]));
    cauchy += 1.0;

    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::polar(cauchy, 2.0 * kPi * i / n + kAngleOffset);

    const Polynomial dp = p.derivative();
    std::vector<bool> done(n, false);
    for (int sweep = 0; sweep < kSweepBudget; ++sweep) {
        bool active = false;
        for (int i = 0; i < n; ++i) {
            if (done[i])
                continue;
            const Complex pv = p(z[i]);
            if (std::abs(pv) <= 4.0 * kEps * p.magnitude_at(std::abs(z[i]))) {
                done[i] = true;
                continue;
            }
            active = true;
            const Complex dv = dp(z[i]);
            if (dv == Complex{}) {
                z[i] += Complex{1e-8, 1e-8} * std::max(1.0, std::abs(z[i]));
                continue;
            }
            const Complex ratio = pv / dv;
            Complex repulsion{};
            for (int j = 0; j < n; ++j)
                if (j != i && z[i] != z[j])
                    repulsion += 1.0 / (z[i] - z[j]);
            const Complex step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            if (std::abs(step) <= 2.0 * kEps * std::abs(z[i]))
                done[i] = true;
        }
        if (!active)
            break;
    }
    return z;
}

// Derivatives p, p', ..., p^(k) computed once per polynomial.
class DerivativeTower {
public:
    explicit DerivativeTower(const Polynomial& p) : levels_{p} {}

    const Polynomial& at(int order) {
        while (static_cast<int>(levels_.size()) <= order)
            levels_.push_back(levels_.back().derivative());
        return levels_[order];
    }

private:
    std::vector<Polynomial> levels_;
};

// Newton on p^(m-1), which has a simple root where p has an m-fold one.
Complex refine_multiple(DerivativeTower& tower, Complex centroid, int multiplicity, double reach) {
    const Polynomial& q = tower.at(multiplicity - 1);
    const Polynomial& dq = tower.at(multiplicity);
    Complex z = centroid;
    for (int it = 0; it < kNewtonBudget; ++it) {
        const Complex d = dq(z);
        if (d == Complex{})
            break;
        const Complex step = q(z) / d;
        z -= step;
        if (std::abs(step) <= 2.0 * kEps * std::max(1.0, std::abs(z)))
            break;
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z - centroid) > reach)
        return centroid;
    return std::abs(q(z)) <= std::abs(q(centroid)) ? z : centroid;
}

struct Cluster {
    Complex location;
    bool accepted;
};

// A group of approximations is accepted as one m-fold root when, at the
// refined centre, p and its first m-1 derivatives all vanish to 1e-12
// relative backward error.
Cluster try_cluster(DerivativeTower& tower, const std::vector<Complex>& z,
                    const std::vector<int>& members) {
    const int m = static_cast<int>(members.size());
    Complex centroid{};
    for (int j : members)
        centroid += z[j];
    centroid /= static_cast<double>(m);
    double reach = 0.0;
    for (int j : members)
        reach = std::max(reach, 2.0 * std::abs(z[j] - centroid));
    reach = std::max(reach, kClusterRelative * std::max(1.0, std::abs(centroid)));
    const Complex c = refine_multiple(tower, centroid, m, reach);
    for (int order = 0; order < m; ++order) {
        const Polynomial& d = tower.at(order);
        if (std::abs(d(c)) > kMultipleRootTest * d.magnitude_at(std::abs(c)))
            return {c, false};
    }
    return {c, true};
}

} // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        coeffs_.push_back(Complex{});
    const double top = max_coeff_modulus();
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= kTrimRelative * top)
        coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (Complex r : roots) {
        c.push_back(Complex{});
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

double Polynomial::max_coeff_modulus() const noexcept {
    double m = 0.0;
    for (Complex c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

Complex Polynomial::operator()(Complex z) const noexcept {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

double Polynomial::magnitude_at(double abs_z) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * abs_z + std::abs(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1)
        return Polynomial();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    std::vector<Complex> c = coeffs_;
    const Complex lead = c.back();
    for (Complex& x : c)
        x /= lead;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    const auto& a = lhs.coeffs_;
    const auto& b = rhs.coeffs_;
    std::vector<Complex> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
    std::vector<Complex> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        c[i] += lhs.coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        c[i] -= rhs.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(Complex scale, const Polynomial& p) {
    std::vector<Complex> c = p.coeffs_;
    for (Complex& x : c)
        x *= scale;
    return Polynomial(std::move(c));
}

int RootSet::total_multiplicity() const noexcept {
    int total = 0;
    for (const Root& r : roots)
        total += r.multiplicity;
    return total;
}

std::vector<Complex> RootSet::expanded() const {
    std::vector<Complex> out;
    for (const Root& r : roots)
        out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.location);
    return out;
}

PolishResult polish_root(const Polynomial& p, Complex guess) {
    const Polynomial dp = p.derivative();
    const double target = kPolishTarget * p.max_coeff_modulus();
    auto converged = [&](Complex z) {
        const double r = std::abs(p(z));
        return r <= target || r <= 8.0 * kEps * p.magnitude_at(std::abs(z));
    };
    if (converged(guess))
        return {guess, false};

    Complex z = guess;
    double residual = std::abs(p(z));
    for (int it = 0; it < kNewtonBudget; ++it) {
        const Complex d = dp(z);
        if (d == Complex{})
            break;
        const Complex next = z - p(z) / d;
        const double next_residual = std::abs(p(next));
        if (!(next_residual < residual))
            break;
        z = next;
        residual = next_residual;
        if (converged(z))
            return {z, false};
    }
    return {guess, true};
}

RootSet find_roots(const Polynomial& p) {
    const int degree = p.degree();
    if (degree < 1)
        fail(ErrorKind::Domain, "find_roots needs a polynomial of degree >= 1");

    // Exact zero roots are split off before iterating.
    const auto& c = p.coeffs();
    int zero_mult = 0;
    while (c[zero_mult] == Complex{})
        ++zero_mult;
    const Polynomial reduced(std::vector<Complex>(c.begin() + zero_mult, c.end()));

    struct Entry { Complex location; int multiplicity; };
    std::vector<Entry> entries;
    if (zero_mult > 0)
        entries.push_back({Complex{}, zero_mult});

    const int n = reduced.degree();
    if (n == 1) {
        entries.push_back({-reduced.coeffs()[0] / reduced.coeffs()[1], 1});
    } else if (n > 1) {
        const std::vector<Complex> z = aberth(reduced);

        // Kruskal over nearby pairs: two groups merge when the union passes
        // the multiple-root test, or unconditionally within the 1e-7 floor.
        struct Edge { double length; int i; int j; };
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double scale = std::max({1.0, std::abs(z[i]), std::abs(z[j])});
                const double gap = std::abs(z[i] - z[j]);
                if (gap <= kClusterReach * scale)
                    edges.push_back({gap, i, j});
            }
        std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
            if (l.length != r.length)
                return l.length < r.length;
            return std::pair(l.i, l.j) < std::pair(r.i, r.j);
        });

        DerivativeTower tower(reduced);
        Clusters clusters(n);
        std::vector<std::vector<int>> members(n);
        std::vector<Complex> centre(z);
        for (int i = 0; i < n; ++i)
            members[i] = {i};
        for (const Edge& e : edges) {
            const int gi = clusters.find(e.i);
            const int gj = clusters.find(e.j);
            if (gi == gj)
                continue;
            std::vector<int> merged = members[gi];
            merged.insert(merged.end(), members[gj].begin(), members[gj].end());
            const double floor = kClusterRelative * std::max({1.0, std::abs(z[e.i]), std::abs(z[e.j])});
            const Cluster trial = try_cluster(tower, z, merged);
            if (!trial.accepted && e.length > floor)
                continue;
            clusters.join(gi, gj);
            const int root = clusters.find(gi);
            members[root] = std::move(merged);
            centre[root] = trial.location;
        }

        for (int i = 0; i < n; ++i) {
            if (clusters.find(i) != i)
                continue;
            const int mult = static_cast<int>(members[i].size());
            if (mult == 1)
                entries.push_back({polish_root(reduced, z[i]).root, 1});
            else
                entries.push_back({centre[i], mult});
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        if (l.location.real() != r.location.real())
            return l.location.real() < r.location.real();
        return l.location.imag() < r.location.imag();
    });

    RootSet out;
    for (const Entry& e : entries) {
        const double residual = backward_error(p, e.location);
        if (!(residual <= kResidualTolerance)) {
            std::ostringstream msg;
            msg << "root finder did not converge: backward error " << residual << " at "
                << e.location << " (degree " << degree << ")";
            fail(ErrorKind::NonConvergence, msg.str());
        }
        out.roots.push_back({e.location, e.multiplicity});
        out.residuals.push_back(residual);
    }
    return out;
}

} // namespace blaschke::poly
