#include "dfinv/root_system.hpp"

#include "dfinv/error.hpp"
#include "dfinv/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace dfinv {

namespace {

MatrixQ matrix_from(std::initializer_list<std::initializer_list<long>> rows) {
    MatrixQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long x : row) m(i, j++) = Rational(x);
        ++i;
    }
    return m;
}

std::vector<VectorQ> roots_from(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<VectorQ> out;
    for (const auto& row : rows) out.push_back(from_ints(row));
    return out;
}

bool contains(const std::vector<VectorQ>& set, const VectorQ& v) {
    return std::any_of(set.begin(), set.end(), [&](const VectorQ& u) { return exactly_equal(u, v); });
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"torus-1", "torus-2", "torus-3", "A1", "A2", "B2", "G2"};
}

RootSystem RootSystem::preset(std::string_view name) {
    if (name.starts_with("torus-")) {
        const std::string_view k = name.substr(6);
        if (k == "1" || k == "2" || k == "3") {
            const int n = k[0] - '0';
            return from_data(MatrixQ::Identity(n, n), {}, std::string(name));
        }
    }
    if (name == "A1") return from_data(matrix_from({{2}}), roots_from({{1}}), "A1");
    if (name == "A2")
        return from_data(matrix_from({{2, -1}, {-1, 2}}), roots_from({{1, 0}, {0, 1}, {1, 1}}), "A2");
    // alpha1 long, alpha2 short
    if (name == "B2")
        return from_data(matrix_from({{2, -1}, {-1, 1}}),
                         roots_from({{1, 0}, {0, 1}, {1, 1}, {1, 2}}), "B2");
    // alpha1 short, alpha2 long
    if (name == "G2")
        return from_data(matrix_from({{2, -3}, {-3, 6}}),
                         roots_from({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}), "G2");
    throw Error(ErrorCode::UnknownPreset, "no root system preset named '" + std::string(name) + "'");
}

RootSystem RootSystem::from_data(MatrixQ gram, std::vector<VectorQ> positive_roots, std::string name) {
    const Eigen::Index n = gram.rows();
    if (n == 0 || gram.cols() != n)
        throw Error(ErrorCode::DimensionMismatch, "gram must be a nonempty square matrix");
    if (!exactly_equal(gram, MatrixQ(gram.transpose())))
        throw Error(ErrorCode::GramNotPositiveDefinite, "gram is not symmetric");
    for (Eigen::Index k = 1; k <= n; ++k)
        if (linalg::determinant(gram.topLeftCorner(k, k)) <= 0)
            throw Error(ErrorCode::GramNotPositiveDefinite,
                        "leading principal minor of order " + std::to_string(k) + " is not positive");

    for (const auto& a : positive_roots) {
        if (a.size() != n) throw Error(ErrorCode::DimensionMismatch, "root " + to_string(a) + " has wrong length");
        if (a.isZero()) throw Error(ErrorCode::InvalidPositiveSystem, "zero root");
        for (const auto& x : a)
            if (!is_integer(x)) throw Error(ErrorCode::InvalidPositiveSystem, "root " + to_string(a) + " is not integral");
    }
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (exactly_equal(positive_roots[i], positive_roots[j]) ||
                exactly_equal(positive_roots[i], VectorQ(-positive_roots[j])))
                throw Error(ErrorCode::InvalidPositiveSystem,
                            "root " + to_string(positive_roots[i]) + " repeated up to sign");

    RootSystem rs;
    rs.name_ = std::move(name);
    rs.gram_ = std::move(gram);
    rs.positive_ = std::move(positive_roots);

    std::vector<VectorQ> all = rs.positive_;
    for (const auto& a : rs.positive_) all.push_back(-a);
    for (const auto& a : all)
        for (const auto& b : all) {
            const VectorQ image = b - (2 * rs.pairing(a, b) / rs.pairing(a, a)) * a;
            if (!contains(all, image))
                throw Error(ErrorCode::NotClosedUnderReflection,
                            "s_" + to_string(a) + " maps " + to_string(b) + " outside the root set");
        }

    rs.two_rho_ = VectorQ::Zero(n);
    for (const auto& a : rs.positive_) rs.two_rho_ += a;
    rs.rho_ = rs.two_rho_ / Rational(2);

    rs.c_ = 1;
    for (const auto& a : rs.positive_) {
        const Rational p = rs.pairing(a, rs.rho_);
        if (p <= 0) throw Error(ErrorCode::RootOnWall, "<" + to_string(a) + ", rho> <= 0");
        rs.c_ *= p * p;
    }

    // Simple roots: positive roots that are not a sum of two positive roots.
    for (const auto& a : rs.positive_) {
        bool decomposable = false;
        for (std::size_t i = 0; i < rs.positive_.size() && !decomposable; ++i)
            for (std::size_t j = i; j < rs.positive_.size() && !decomposable; ++j)
                decomposable = exactly_equal(VectorQ(rs.positive_[i] + rs.positive_[j]), a);
        if (!decomposable) rs.simple_.push_back(a);
    }
    if (!rs.simple_.empty()) {
        MatrixQ s(n, static_cast<Eigen::Index>(rs.simple_.size()));
        for (std::size_t i = 0; i < rs.simple_.size(); ++i) s.col(static_cast<Eigen::Index>(i)) = rs.simple_[i];
        if (linalg::rank(s) != s.cols())
            throw Error(ErrorCode::InvalidPositiveSystem, "simple roots are linearly dependent");
        const MatrixQ normal = s.transpose() * s;
        for (const auto& a : rs.positive_) {
            const auto coeffs = linalg::solve(normal, VectorQ(s.transpose() * a));
            bool ok = coeffs && exactly_equal(VectorQ(s * *coeffs), a);
            if (ok)
                for (const auto& x : *coeffs) ok = ok && x >= 0 && is_integer(x);
            if (!ok)
                throw Error(ErrorCode::InvalidPositiveSystem,
                            "root " + to_string(a) + " is not a nonnegative integer combination of simple roots");
        }
    }
    return rs;
}

Rational RootSystem::pairing(const VectorQ& u, const VectorQ& v) const {
    if (u.size() != dimension() || v.size() != dimension())
        throw Error(ErrorCode::DimensionMismatch,
                    "pairing expects vectors of length " + std::to_string(dimension()));
    return u.dot(gram_ * v);
}

bool RootSystem::is_root(const VectorQ& v) const {
    return contains(positive_, v) || contains(positive_, VectorQ(-v));
}

MatrixQ RootSystem::reflection_matrix(const VectorQ& alpha) const {
    if (alpha.size() != dimension()) throw Error(ErrorCode::DimensionMismatch, "root has wrong length");
    if (!is_root(alpha)) throw Error(ErrorCode::NotARoot, to_string(alpha) + " is not a root");
    const Rational scale = Rational(2) / pairing(alpha, alpha);
    return MatrixQ::Identity(dimension(), dimension()) - scale * alpha * (gram_ * alpha).transpose();
}

VectorQ RootSystem::reflect(const VectorQ& alpha, const VectorQ& x) const {
    if (x.size() != dimension()) throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
    return reflection_matrix(alpha) * x;
}

VectorQ RootSystem::wall_covector(std::size_t simple_index) const {
    return primitive(VectorQ(gram_ * simple_.at(simple_index)));
}

WeylGroup weyl_group(const RootSystem& rs, std::size_t cap) {
    const Eigen::Index n = rs.dimension();
    std::vector<MatrixQ> generators;
    for (const auto& s : rs.simple_roots()) generators.push_back(rs.reflection_matrix(s));

    std::set<MatrixQ, LexLess> seen;
    std::deque<MatrixQ> frontier;
    const MatrixQ identity = MatrixQ::Identity(n, n);
    seen.insert(identity);
    frontier.push_back(identity);
    while (!frontier.empty()) {
        const MatrixQ w = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            MatrixQ next = g * w;
            if (seen.contains(next)) continue;
            if (seen.size() >= cap)
                throw Error(ErrorCode::GroupCapExceeded,
                            "Weyl group closure exceeded " + std::to_string(cap) + " elements");
            seen.insert(next);
            frontier.push_back(std::move(next));
        }
    }
    return WeylGroup(std::vector<MatrixQ>(seen.begin(), seen.end()));
}

}  // namespace dfinv
