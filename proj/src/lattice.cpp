#include "dfinv/lattice.hpp"

#include "dfinv/error.hpp"
#include "dfinv/linalg.hpp"

namespace dfinv {

LatticeBasis::LatticeBasis(MatrixQ basis) : basis_(std::move(basis)) {
    const Eigen::Index n = basis_.rows();
    if (basis_.cols() != n) throw Error(ErrorCode::DimensionMismatch, "lattice basis must be square");
    inverse_ = MatrixQ(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto col = linalg::solve(basis_, VectorQ(VectorQ::Unit(n, j)));
        if (!col) throw Error(ErrorCode::ValidationError, "lattice basis is singular");
        inverse_.col(j) = *col;
    }
}

bool LatticeBasis::is_standard() const {
    return exactly_equal(basis_, MatrixQ(MatrixQ::Identity(basis_.rows(), basis_.cols())));
}

VectorQ LatticeBasis::point(const VectorQ& x) const {
    if (x.size() != basis_.rows()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
    return inverse_ * x;
}

VectorQ LatticeBasis::covector(const VectorQ& a) const {
    if (a.size() != basis_.rows()) throw Error(ErrorCode::DimensionMismatch, "covector has wrong length");
    return basis_.transpose() * a;
}

MatrixQ LatticeBasis::gram(const MatrixQ& g) const { return basis_.transpose() * g * basis_; }

Constraint LatticeBasis::constraint(const Constraint& c) const {
    return Constraint::normalized(covector(c.normal), c.offset);
}

HPolytope LatticeBasis::polytope(const HPolytope& p) const {
    std::vector<Constraint> cs;
    for (const auto& c : p.constraints()) cs.push_back(constraint(c));
    return HPolytope(p.dimension(), std::move(cs));
}

PLFunction LatticeBasis::function(const PLFunction& f) const {
    std::vector<AffinePiece> pieces;
    for (const auto& p : f.pieces()) pieces.push_back({covector(p.slope), p.constant});
    return PLFunction(std::move(pieces));
}

}  // namespace dfinv
