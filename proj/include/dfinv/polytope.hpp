#pragma once

#include "dfinv/root_system.hpp"
#include "dfinv/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dfinv {

/// normal . x >= offset, with `normal` a primitive integer vector of the dual lattice.
struct Constraint {
    VectorQ normal;
    Rational offset;

    /// Rescales an arbitrary nonzero rational covector to primitive integer form.
    static Constraint normalized(const VectorQ& normal, const Rational& offset);

    bool satisfied_by(const VectorQ& x) const { return normal.dot(x) >= offset; }
    bool tight_at(const VectorQ& x) const { return normal.dot(x) == offset; }

    friend bool operator==(const Constraint& a, const Constraint& b) {
        return a.offset == b.offset && exactly_equal(a.normal, b.normal);
    }
};

/**
 * Polytope as an intersection of half-spaces in R^n.
 *
 * Construction only normalizes (primitive normals, exact duplicates removed,
 * order otherwise preserved); boundedness and full-dimensionality are checked
 * lazily by the operations that need them.
 */
class HPolytope {
public:
    HPolytope(Eigen::Index dimension, std::vector<Constraint> constraints);

    Eigen::Index dimension() const { return dimension_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    std::size_t size() const { return constraints_.size(); }

    bool contains(const VectorQ& x) const;

private:
    Eigen::Index dimension_;
    std::vector<Constraint> constraints_;
};

struct VPolytope {
    std::vector<VectorQ> vertices;
};

/// n+1 affinely independent points of R^n, stored as the columns of an n x (n+1) matrix.
class Simplex {
public:
    explicit Simplex(MatrixQ vertices);

    Eigen::Index dimension() const { return vertices_.rows(); }
    const MatrixQ& vertices() const { return vertices_; }
    VectorQ vertex(Eigen::Index i) const { return vertices_.col(i); }

    /// det[v1 - v0, ..., vn - v0]
    const Rational& signed_determinant() const { return det_; }
    Rational volume() const;

private:
    MatrixQ vertices_;
    Rational det_;
};

/// Exact vertex set, lexicographically sorted.
/// Throws Infeasible, Unbounded, NotFullDimensional or SizeLimitExceeded.
VPolytope vertices(const HPolytope& p);

/// Facet description of the convex hull of a full-dimensional point set.
HPolytope hull(const VPolytope& v);

/// Drops constraints that do not define a facet; the kept order is the input order.
HPolytope irredundant(const HPolytope& p);
std::vector<std::size_t> irredundant_indices(const HPolytope& p);

/// Dual W-action on one constraint: x in P <=> w x in P turns (a, o) into (w^T a, o).
Constraint act(const MatrixQ& w, const Constraint& c);

/// Both the constraint-orbit and the vertex-orbit criteria are evaluated; they must agree.
bool is_weyl_invariant(const HPolytope& p, const WeylGroup& w);

/// P intersected with the closed positive chamber, redundant constraints removed.
HPolytope positive_part(const HPolytope& p, const RootSystem& rs);

enum class FacetKind { outer, wall };

struct Facet {
    VectorQ normal;
    Rational offset;
    std::vector<VectorQ> vertices;
    FacetKind kind = FacetKind::outer;
    std::size_t constraint_index = 0;
};

/// All facets of a full-dimensional polytope, tagged outer.
std::vector<Facet> facets(const HPolytope& p);

/// Facets of P+ with their vertices. Wall facets lie in a hyperplane <alpha_s, x> = 0.
std::vector<Facet> classify_facets(const HPolytope& pplus, const RootSystem& rs);

struct FanoFacetEntry {
    Facet facet;
    Rational expected_offset;  // normal . 2rho - 1
    bool primitive = true;
    bool ok = false;
};

struct FanoReport {
    bool fano = false;
    std::vector<FanoFacetEntry> outer_facets;
    std::size_t wall_facets = 0;

    std::vector<const FanoFacetEntry*> offending() const;
};

FanoReport check_fano(const HPolytope& p, const RootSystem& rs);

/// Pulling triangulation from the lexicographically least vertex.
std::vector<Simplex> triangulate(const HPolytope& p);
std::vector<Simplex> triangulate(const VPolytope& v);

Rational volume(const HPolytope& p);

}  // namespace dfinv
