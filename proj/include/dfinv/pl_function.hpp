#pragma once

#include "dfinv/polytope.hpp"

#include <optional>
#include <vector>

namespace dfinv {

struct AffinePiece {
    VectorQ slope;
    Rational constant;

    Rational operator()(const VectorQ& x) const { return slope.dot(x) + constant; }

    friend bool operator==(const AffinePiece& a, const AffinePiece& b) {
        return a.constant == b.constant && exactly_equal(a.slope, b.slope);
    }
};

/// Convex piecewise-linear function x -> max_k (b_k . x + k_k).
class PLFunction {
public:
    explicit PLFunction(std::vector<AffinePiece> pieces);

    static PLFunction affine(VectorQ slope, Rational constant) {
        return PLFunction({AffinePiece{std::move(slope), std::move(constant)}});
    }
    static PLFunction constant(Eigen::Index n, Rational value) {
        return affine(VectorQ::Zero(n), std::move(value));
    }

    Eigen::Index dimension() const { return pieces_.front().slope.size(); }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }

    Rational operator()(const VectorQ& x) const;

    /// x -> f(w x), i.e. pieces (w^T b, k).
    PLFunction compose(const MatrixQ& w) const;

    /// Distinct pieces in first-occurrence order.
    PLFunction deduplicated() const;

    /// max_{k,l} (f_k + g_l) equals f + g.
    friend PLFunction operator+(const PLFunction& f, const PLFunction& g);

    /// kappa * f; kappa must be nonnegative to stay convex.
    PLFunction scaled(const Rational& kappa) const;

private:
    std::vector<AffinePiece> pieces_;
};

/// max over the W-orbit of one affine piece; W-invariant by construction.
PLFunction orbit_maximum(const WeylGroup& w, const AffinePiece& piece);

struct Cell {
    HPolytope region;
    AffinePiece piece;
    std::size_t piece_index = 0;  // index into f.pieces()
    /// For each region constraint, the index of the identical constraint of the
    /// refined polytope, or nullopt for an internal (piece-comparison) constraint.
    std::vector<std::optional<std::size_t>> origin;
};

/// Full-dimensional cells { x in P : piece k is maximal }; empty and lower-dimensional cells are dropped.
std::vector<Cell> refine_by_pl(const HPolytope& p, const PLFunction& f);

/// Pieces of f that are not maximal on any full-dimensional part of P.
std::vector<std::size_t> redundant_pieces(const HPolytope& p, const PLFunction& f);

/// f(wx) = f(x) on P for all w, decided on the common refinement of f and f o w.
bool pl_is_weyl_invariant(const PLFunction& f, const HPolytope& p, const WeylGroup& w);

/// The single active piece if f is affine on P+, nullopt otherwise.
std::optional<AffinePiece> pl_restrict_affine(const PLFunction& f, const HPolytope& pplus);

}  // namespace dfinv
