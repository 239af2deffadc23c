#include "dfinv/quadrature.hpp"

#include "dfinv/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dfinv {

namespace {

class Factorials {
public:
    const Integer& operator()(int k) {
        while (static_cast<int>(table_.size()) <= k) table_.push_back(table_.back() * static_cast<long>(table_.size()));
        return table_[static_cast<std::size_t>(k)];
    }

private:
    std::vector<Integer> table_{Integer(1)};
};

Rational integrate_standard_simplex(const PolynomialQ& q, int dim) {
    Factorials fact;
    Rational total = 0;
    for (const auto& [e, c] : q.terms()) {
        Integer num = 1;
        int deg = 0;
        for (int g : e) {
            num *= fact(g);
            deg += g;
        }
        total += c * Rational(num, fact(deg + dim));
    }
    return total;
}

std::size_t projection_axis(const VectorQ& a) {
    if (a.isZero()) throw Error(ErrorCode::ZeroNormal, "facet normal is zero");
    std::size_t best = 0;
    for (Eigen::Index j = 1; j < a.size(); ++j)
        if (abs(a(j)) > abs(a(static_cast<Eigen::Index>(best)))) best = static_cast<std::size_t>(j);
    return best;
}

VectorQ drop(const VectorQ& x, std::size_t j) {
    VectorQ out(x.size() - 1);
    for (Eigen::Index i = 0, k = 0; i < x.size(); ++i)
        if (static_cast<std::size_t>(i) != j) out(k++) = x(i);
    return out;
}

/// x as a polynomial in the n-1 coordinates left after dropping x_j, on the hyperplane a.x = offset.
std::vector<PolynomialQ> lift(const VectorQ& a, const Rational& offset, std::size_t j) {
    const int n = static_cast<int>(a.size());
    const int m = n - 1;
    std::vector<PolynomialQ> images;
    VectorQ solved = VectorQ::Zero(m);
    for (int i = 0, k = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) == j) continue;
        solved(k) = -a(i) / a(static_cast<Eigen::Index>(j));
        ++k;
    }
    for (int i = 0, k = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) == j) {
            images.push_back(PolynomialQ::linear(solved, offset / a(static_cast<Eigen::Index>(j))));
        } else {
            images.push_back(PolynomialQ::variable(m, k++));
        }
    }
    return images;
}

struct DoubleTerm {
    std::vector<int> exponent;
    double coefficient;
};

std::vector<DoubleTerm> to_double_terms(const PolynomialQ& p) {
    std::vector<DoubleTerm> out;
    for (const auto& [e, c] : p.terms()) out.push_back({e, c.convert_to<double>()});
    return out;
}

double evaluate(const std::vector<DoubleTerm>& terms, const std::vector<double>& x) {
    double sum = 0;
    for (const auto& t : terms) {
        double v = t.coefficient;
        for (std::size_t j = 0; j < x.size(); ++j)
            for (int k = 0; k < t.exponent[j]; ++k) v *= x[j];
        sum += v;
    }
    return sum;
}

struct DoubleConstraint {
    std::vector<double> normal;
    double offset;
};

std::vector<DoubleConstraint> to_double(const HPolytope& p) {
    std::vector<DoubleConstraint> out;
    for (const auto& c : p.constraints()) out.push_back({to_doubles(c.normal), c.offset.convert_to<double>()});
    return out;
}

bool inside(const std::vector<DoubleConstraint>& cs, const std::vector<double>& x) {
    for (const auto& c : cs) {
        double s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += c.normal[j] * x[j];
        if (s < c.offset) return false;
    }
    return true;
}

McEstimate sample_box(const std::vector<DoubleTerm>& terms, const std::vector<DoubleConstraint>& cs,
                      const std::vector<VectorQ>& points, std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw Error(ErrorCode::ValidationError, "Monte-Carlo estimate needs at least one sample");
    const std::size_t n = static_cast<std::size_t>(points.front().size());
    std::vector<double> lo(n, std::numeric_limits<double>::max()), hi(n, std::numeric_limits<double>::lowest());
    for (const auto& v : points)
        for (std::size_t j = 0; j < n; ++j) {
            const double x = v(static_cast<Eigen::Index>(j)).convert_to<double>();
            lo[j] = std::min(lo[j], x);
            hi[j] = std::max(hi[j], x);
        }
    double box = 1;
    for (std::size_t j = 0; j < n; ++j) box *= hi[j] - lo[j];

    McEstimate est;
    est.samples = samples;
    double sum = 0, sum_sq = 0;
    std::vector<double> x(n);
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t j = 0; j < n; ++j) x[j] = lo[j] + (hi[j] - lo[j]) * counter_uniform(seed, i, j);
        if (!inside(cs, x)) continue;
        ++est.accepted;
        const double v = evaluate(terms, x);
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / static_cast<double>(samples);
    const double var = std::max(0.0, sum_sq / static_cast<double>(samples) - mean * mean);
    est.value = box * mean;
    est.std_error = box * std::sqrt(var / static_cast<double>(samples));
    return est;
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t counter, std::uint64_t coordinate) {
    // splitmix64 finalizer over a unique key per draw
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + (counter * 0x100000001B3ULL) * 16 + coordinate + 1;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

Rational integrate_simplex(const PolynomialQ& p, const Simplex& s) {
    const Eigen::Index n = s.dimension();
    if (p.num_vars() != n) throw Error(ErrorCode::DimensionMismatch, "polynomial and simplex dimensions differ");
    std::vector<PolynomialQ> images;
    for (Eigen::Index i = 0; i < n; ++i) {
        VectorQ row(n);
        for (Eigen::Index j = 0; j < n; ++j) row(j) = s.vertices()(i, j + 1) - s.vertices()(i, 0);
        images.push_back(PolynomialQ::linear(row, s.vertices()(i, 0)));
    }
    const PolynomialQ pulled = n == 0 ? p : p.compose(images);
    return abs(s.signed_determinant()) * integrate_standard_simplex(pulled, static_cast<int>(n));
}

Rational integrate_polytope(const PolynomialQ& p, const HPolytope& polytope) {
    Rational total = 0;
    for (const auto& s : triangulate(polytope)) total += integrate_simplex(p, s);
    return total;
}

Rational integrate_facet_sigma(const PolynomialQ& p, const Facet& facet) {
    const VectorQ& a = facet.normal;
    if (p.num_vars() != a.size()) throw Error(ErrorCode::DimensionMismatch, "polynomial and facet dimensions differ");
    const std::size_t j = projection_axis(a);
    const Rational weight = Rational(1) / abs(a(static_cast<Eigen::Index>(j)));
    if (a.size() == 1) return p.evaluate(facet.vertices.front()) * weight;

    VPolytope projected;
    for (const auto& v : facet.vertices) projected.vertices.push_back(drop(v, j));
    const PolynomialQ q = p.compose(lift(a, facet.offset, j));
    Rational total = 0;
    for (const auto& s : triangulate(projected)) total += integrate_simplex(q, s);
    return total * weight;
}

Rational integrate_boundary(const PolynomialQ& p, const HPolytope& polytope) {
    Rational total = 0;
    for (const auto& f : facets(polytope)) total += integrate_facet_sigma(p, f);
    return total;
}

Rational integrate(const PolynomialQ& p, const HPolytope& polytope, Measure measure) {
    return measure == Measure::volume ? integrate_polytope(p, polytope) : integrate_boundary(p, polytope);
}

Rational outward_flux(const PolyVectorFieldQ& field, const Facet& facet) {
    return integrate_facet_sigma(field.contract(VectorQ(-facet.normal)), facet);
}

McEstimate mc_estimate(const PolynomialQ& p, const HPolytope& polytope, std::uint64_t samples, std::uint64_t seed) {
    if (p.num_vars() != polytope.dimension()) throw Error(ErrorCode::DimensionMismatch, "polynomial and polytope dimensions differ");
    return sample_box(to_double_terms(p), to_double(polytope), vertices(polytope).vertices, samples, seed);
}

McEstimate mc_estimate_facet(const PolynomialQ& p, const Facet& facet, std::uint64_t samples, std::uint64_t seed) {
    const VectorQ& a = facet.normal;
    const std::size_t j = projection_axis(a);
    const double weight = 1.0 / abs(a(static_cast<Eigen::Index>(j))).convert_to<double>();
    if (a.size() == 1) {
        McEstimate est;
        est.samples = est.accepted = samples;
        est.value = p.evaluate(facet.vertices.front()).convert_to<double>() * weight;
        return est;
    }
    VPolytope projected;
    for (const auto& v : facet.vertices) projected.vertices.push_back(drop(v, j));
    const PolynomialQ q = p.compose(lift(a, facet.offset, j));
    McEstimate est = sample_box(to_double_terms(q), to_double(hull(projected)), projected.vertices, samples, seed);
    est.value *= weight;
    est.std_error *= weight;
    return est;
}

}  // namespace dfinv
