#pragma once

#include "dfinv/pl_function.hpp"
#include "dfinv/polytope.hpp"

namespace dfinv {

/**
 * Change from ambient coordinates, in which the character lattice M is spanned
 * by the columns of `basis`, to lattice coordinates (M = Z^n). All library
 * operations assume lattice coordinates, because the primitive-normal
 * convention and the boundary measure are lattice notions.
 *
 * Points map by basis^{-1}, covectors by basis^T, the gram matrix by
 * basis^T * gram * basis.
 */
class LatticeBasis {
public:
    explicit LatticeBasis(MatrixQ basis);

    static LatticeBasis standard(Eigen::Index n) { return LatticeBasis(MatrixQ::Identity(n, n)); }

    const MatrixQ& basis() const { return basis_; }
    bool is_standard() const;

    VectorQ point(const VectorQ& x) const;
    VectorQ covector(const VectorQ& a) const;
    MatrixQ gram(const MatrixQ& g) const;
    Constraint constraint(const Constraint& c) const;
    HPolytope polytope(const HPolytope& p) const;
    PLFunction function(const PLFunction& f) const;

private:
    MatrixQ basis_;
    MatrixQ inverse_;
};

}  // namespace dfinv
