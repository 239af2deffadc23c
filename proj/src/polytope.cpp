#include "dfinv/polytope.hpp"

#include "dfinv/error.hpp"
#include "dfinv/linalg.hpp"

#include <algorithm>
#include <boost/math/special_functions/binomial.hpp>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dfinv {

namespace {

// Subset enumeration is exhaustive; past this many subsets the instance is
// outside the desk-scale regime these algorithms are meant for.
constexpr double kMaxSubsets = 5.0e6;

void check_subset_budget(std::size_t m, Eigen::Index k) {
    if (k < 0 || static_cast<std::size_t>(k) > m) return;
    const double count = boost::math::binomial_coefficient<double>(static_cast<unsigned>(m), static_cast<unsigned>(k));
    if (count > kMaxSubsets)
        throw Error(ErrorCode::SizeLimitExceeded,
                    std::to_string(m) + " choose " + std::to_string(k) + " subsets exceeds the enumeration limit");
}

/// Calls visit(indices) for every k-subset of {0..m-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t m, std::size_t k, Visit&& visit) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

MatrixQ columns(const std::vector<VectorQ>& points, Eigen::Index n) {
    MatrixQ m(n, static_cast<Eigen::Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = points[j];
    return m;
}

Eigen::Index affine_dim(const std::vector<VectorQ>& pts, Eigen::Index n) {
    return linalg::affine_dimension(columns(pts, n));
}

struct Incidence {
    std::vector<VectorQ> vertices;                // lexicographic order
    std::vector<std::vector<std::size_t>> tight;  // per constraint: vertex ids on its hyperplane
};

Incidence incidence(const HPolytope& p) {
    Incidence inc;
    inc.vertices = vertices(p).vertices;
    inc.tight.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t v = 0; v < inc.vertices.size(); ++v)
            if (p.constraints()[i].tight_at(inc.vertices[v])) inc.tight[i].push_back(v);
    return inc;
}

std::vector<VectorQ> pick(const std::vector<VectorQ>& all, const std::vector<std::size_t>& ids) {
    std::vector<VectorQ> out;
    for (auto i : ids) out.push_back(all[i]);
    return out;
}

/// Simplices (as vertex-id lists) of a pulling triangulation of the face
/// spanned by `face` (a sorted vertex-id list of affine dimension `dim`).
std::vector<std::vector<std::size_t>> triangulate_face(const Incidence& inc, Eigen::Index n,
                                                       const std::vector<std::size_t>& face, Eigen::Index dim) {
    if (dim == 0) return {{face.front()}};
    if (static_cast<Eigen::Index>(face.size()) == dim + 1) return {face};

    // Vertex ids are already in lexicographic order of coordinates.
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> facets;
    for (const auto& tight : inc.tight) {
        std::vector<std::size_t> sub;
        std::set_intersection(face.begin(), face.end(), tight.begin(), tight.end(), std::back_inserter(sub));
        if (sub.size() == face.size() || sub.empty()) continue;
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        if (affine_dim(pick(inc.vertices, sub), n) != dim - 1) continue;
        facets.insert(std::move(sub));
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& facet : facets)
        for (auto simplex : triangulate_face(inc, n, facet, dim - 1)) {
            simplex.insert(simplex.begin(), apex);
            out.push_back(std::move(simplex));
        }
    return out;
}

std::vector<std::size_t> all_ids(std::size_t count) {
    std::vector<std::size_t> ids(count);
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

bool is_wall_covector(const RootSystem& rs, const Constraint& c) {
    if (c.offset != 0) return false;
    for (std::size_t s = 0; s < rs.simple_roots().size(); ++s)
        if (exactly_equal(rs.wall_covector(s), c.normal)) return true;
    return false;
}

}  // namespace

Constraint Constraint::normalized(const VectorQ& normal, const Rational& offset) {
    if (normal.size() == 0 || normal.isZero()) throw Error(ErrorCode::ZeroNormal, "constraint normal is zero");
    const Rational s = primitive_scale(normal);
    return Constraint{VectorQ(normal * s), offset * s};
}

HPolytope::HPolytope(Eigen::Index dimension, std::vector<Constraint> constraints) : dimension_(dimension) {
    for (auto& c : constraints) {
        if (c.normal.size() != dimension)
            throw Error(ErrorCode::DimensionMismatch,
                        "constraint normal " + to_string(c.normal) + " has length != " + std::to_string(dimension));
        Constraint n = Constraint::normalized(c.normal, c.offset);
        if (std::find(constraints_.begin(), constraints_.end(), n) == constraints_.end())
            constraints_.push_back(std::move(n));
    }
}

bool HPolytope::contains(const VectorQ& x) const {
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const Constraint& c) { return c.satisfied_by(x); });
}

Simplex::Simplex(MatrixQ vertices) : vertices_(std::move(vertices)) {
    const Eigen::Index n = vertices_.rows();
    if (vertices_.cols() != n + 1)
        throw Error(ErrorCode::DimensionMismatch, "a simplex in R^n needs n+1 vertices");
    MatrixQ edges(n, n);
    for (Eigen::Index j = 0; j < n; ++j) edges.col(j) = vertices_.col(j + 1) - vertices_.col(0);
    det_ = n == 0 ? Rational(1) : linalg::determinant(edges);
    if (det_ == 0) throw Error(ErrorCode::DegenerateSimplex, "simplex vertices are affinely dependent");
}

Rational Simplex::volume() const {
    Rational factorial = 1;
    for (Eigen::Index k = 2; k <= dimension(); ++k) factorial *= k;
    return abs(det_) / factorial;
}

VPolytope vertices(const HPolytope& p) {
    const Eigen::Index n = p.dimension();
    const auto& cs = p.constraints();
    MatrixQ normals(static_cast<Eigen::Index>(cs.size()), n);
    for (std::size_t i = 0; i < cs.size(); ++i) normals.row(static_cast<Eigen::Index>(i)) = cs[i].normal.transpose();
    if (cs.empty() || linalg::rank(normals) < n)
        throw Error(ErrorCode::Unbounded, "constraint normals do not span; the recession cone contains a line");
    check_subset_budget(cs.size(), n);

    std::set<VectorQ, LexLess> found;
    for_each_subset(cs.size(), static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& idx) {
        MatrixQ a(n, n);
        VectorQ b(n);
        for (Eigen::Index r = 0; r < n; ++r) {
            a.row(r) = cs[idx[static_cast<std::size_t>(r)]].normal.transpose();
            b(r) = cs[idx[static_cast<std::size_t>(r)]].offset;
        }
        if (auto x = linalg::solve(a, b); x && p.contains(*x)) found.insert(*x);
    });
    if (found.empty()) throw Error(ErrorCode::Infeasible, "the constraints have no common solution");

    // Extreme rays of the pointed recession cone {d : A d >= 0}.
    for_each_subset(cs.size(), static_cast<std::size_t>(n - 1), [&](const std::vector<std::size_t>& idx) {
        MatrixQ a(static_cast<Eigen::Index>(idx.size()), n);
        for (std::size_t r = 0; r < idx.size(); ++r) a.row(static_cast<Eigen::Index>(r)) = cs[idx[r]].normal.transpose();
        const MatrixQ k = linalg::kernel(a);
        if (k.cols() != 1) return;
        const VectorQ d = k.col(0);
        for (const VectorQ& dir : {d, VectorQ(-d)}) {
            const VectorQ image = normals * dir;
            if ((image.array() >= Rational(0)).all())
                throw Error(ErrorCode::Unbounded, "recession direction " + to_string(dir));
        }
    });

    VPolytope out{std::vector<VectorQ>(found.begin(), found.end())};
    if (affine_dim(out.vertices, n) != n)
        throw Error(ErrorCode::NotFullDimensional, "polytope has empty interior");
    return out;
}

HPolytope hull(const VPolytope& v) {
    if (v.vertices.empty()) throw Error(ErrorCode::Infeasible, "no points");
    const Eigen::Index n = v.vertices.front().size();
    for (const auto& x : v.vertices)
        if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "points of different lengths");
    if (affine_dim(v.vertices, n) != n) throw Error(ErrorCode::NotFullDimensional, "points span a lower-dimensional set");
    check_subset_budget(v.vertices.size(), n);

    std::vector<Constraint> facets;
    for_each_subset(v.vertices.size(), static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& idx) {
        MatrixQ diffs(n - 1, n);
        for (Eigen::Index r = 1; r < n; ++r)
            diffs.row(r - 1) = (v.vertices[idx[static_cast<std::size_t>(r)]] - v.vertices[idx[0]]).transpose();
        const MatrixQ k = n == 1 ? MatrixQ::Identity(1, 1) : linalg::kernel(diffs);
        if (k.cols() != 1) return;
        VectorQ a = k.col(0);
        Rational o = a.dot(v.vertices[idx[0]]);
        bool above = false, below = false;
        for (const auto& x : v.vertices) {
            const Rational s = a.dot(x) - o;
            above = above || s > 0;
            below = below || s < 0;
        }
        if (above && below) return;
        if (below) {
            a = -a;
            o = -o;
        }
        Constraint c = Constraint::normalized(a, o);
        if (std::find(facets.begin(), facets.end(), c) == facets.end()) facets.push_back(std::move(c));
    });
    std::sort(facets.begin(), facets.end(), [](const Constraint& a, const Constraint& b) {
        const auto cmp = lex_compare(a.normal, b.normal);
        return cmp != 0 ? cmp < 0 : a.offset < b.offset;
    });
    return HPolytope(n, std::move(facets));
}

std::vector<std::size_t> irredundant_indices(const HPolytope& p) {
    const Incidence inc = incidence(p);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!inc.tight[i].empty() && affine_dim(pick(inc.vertices, inc.tight[i]), p.dimension()) == p.dimension() - 1)
            kept.push_back(i);
    return kept;
}

HPolytope irredundant(const HPolytope& p) {
    std::vector<Constraint> kept;
    for (auto i : irredundant_indices(p)) kept.push_back(p.constraints()[i]);
    return HPolytope(p.dimension(), std::move(kept));
}

Constraint act(const MatrixQ& w, const Constraint& c) {
    return Constraint::normalized(VectorQ(w.transpose() * c.normal), c.offset);
}

bool is_weyl_invariant(const HPolytope& p, const WeylGroup& w) {
    const HPolytope q = irredundant(p);
    const auto& cs = q.constraints();
    bool by_constraints = true;
    for (const auto& g : w.elements()) {
        if (g.rows() != p.dimension()) throw Error(ErrorCode::DimensionMismatch, "Weyl group acts on another dimension");
        for (const auto& c : cs)
            if (std::find(cs.begin(), cs.end(), act(g, c)) == cs.end()) by_constraints = false;
    }

    const auto verts = vertices(q).vertices;
    const std::set<VectorQ, LexLess> vertex_set(verts.begin(), verts.end());
    bool by_vertices = true;
    for (const auto& g : w.elements())
        for (const auto& v : verts)
            if (!vertex_set.contains(VectorQ(g * v))) by_vertices = false;

    if (by_constraints != by_vertices)
        throw std::logic_error("constraint-orbit and vertex-orbit invariance checks disagree");
    return by_constraints;
}

HPolytope positive_part(const HPolytope& p, const RootSystem& rs) {
    if (p.dimension() != rs.dimension())
        throw Error(ErrorCode::DimensionMismatch, "polytope and root system dimensions differ");
    std::vector<Constraint> cs = p.constraints();
    for (std::size_t s = 0; s < rs.simple_roots().size(); ++s) cs.push_back({rs.wall_covector(s), Rational(0)});
    const HPolytope raw(p.dimension(), std::move(cs));
    try {
        return irredundant(raw);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Infeasible) throw Error(ErrorCode::EmptyPositivePart, "P does not meet the chamber");
        if (e.code() == ErrorCode::NotFullDimensional)
            throw Error(ErrorCode::LowerDimensionalPositivePart, "P meets the chamber in a lower-dimensional set");
        throw;
    }
}

std::vector<Facet> facets(const HPolytope& p) {
    const Incidence inc = incidence(p);
    const Eigen::Index n = p.dimension();
    std::vector<Facet> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto verts = pick(inc.vertices, inc.tight[i]);
        if (verts.empty() || affine_dim(verts, n) != n - 1) continue;
        const auto& c = p.constraints()[i];
        out.push_back(Facet{c.normal, c.offset, std::move(verts), FacetKind::outer, i});
    }
    return out;
}

std::vector<Facet> classify_facets(const HPolytope& pplus, const RootSystem& rs) {
    auto out = facets(pplus);
    for (auto& f : out) {
        bool in_wall = false;
        for (std::size_t s = 0; s < rs.simple_roots().size() && !in_wall; ++s) {
            const VectorQ wall = rs.wall_covector(s);
            in_wall = std::all_of(f.vertices.begin(), f.vertices.end(), [&](const VectorQ& v) { return wall.dot(v) == 0; });
        }
        if (in_wall && !is_wall_covector(rs, Constraint{f.normal, f.offset}))
            throw Error(ErrorCode::DegenerateFacet, "facet of " + to_string(f.normal) + " lies inside a wall hyperplane");
        f.kind = in_wall ? FacetKind::wall : FacetKind::outer;
    }
    return out;
}

std::vector<const FanoFacetEntry*> FanoReport::offending() const {
    std::vector<const FanoFacetEntry*> out;
    for (const auto& e : outer_facets)
        if (!e.ok) out.push_back(&e);
    return out;
}

FanoReport check_fano(const HPolytope& p, const RootSystem& rs) {
    FanoReport report;
    const HPolytope pplus = positive_part(p, rs);
    for (auto& facet : classify_facets(pplus, rs)) {
        if (facet.kind == FacetKind::wall) {
            ++report.wall_facets;
            continue;
        }
        FanoFacetEntry entry;
        entry.expected_offset = facet.normal.dot(rs.two_rho()) - 1;
        entry.primitive = std::all_of(facet.normal.begin(), facet.normal.end(), [](const Rational& x) { return is_integer(x); }) &&
                          primitive_scale(facet.normal) == 1;
        entry.ok = entry.primitive && facet.offset == entry.expected_offset;
        entry.facet = std::move(facet);
        report.outer_facets.push_back(std::move(entry));
    }
    report.fano = report.offending().empty();
    return report;
}

std::vector<Simplex> triangulate(const HPolytope& p) {
    const Incidence inc = incidence(p);
    const Eigen::Index n = p.dimension();
    std::vector<Simplex> out;
    for (const auto& ids : triangulate_face(inc, n, all_ids(inc.vertices.size()), n))
        out.emplace_back(columns(pick(inc.vertices, ids), n));
    return out;
}

std::vector<Simplex> triangulate(const VPolytope& v) { return triangulate(hull(v)); }

Rational volume(const HPolytope& p) {
    Rational total = 0;
    for (const auto& s : triangulate(p)) total += s.volume();
    return total;
}

}  // namespace dfinv
