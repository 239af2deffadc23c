#include "dfinv/pl_function.hpp"

#include "dfinv/error.hpp"

#include <algorithm>
#include <set>

namespace dfinv {

PLFunction::PLFunction(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw Error(ErrorCode::EmptyFunction, "a PL function needs at least one piece");
    const Eigen::Index n = pieces_.front().slope.size();
    for (const auto& p : pieces_)
        if (p.slope.size() != n) throw Error(ErrorCode::DimensionMismatch, "pieces have slopes of different lengths");
}

Rational PLFunction::operator()(const VectorQ& x) const {
    if (x.size() != dimension()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
    Rational best = pieces_.front()(x);
    for (const auto& p : pieces_) best = std::max(best, p(x));
    return best;
}

PLFunction PLFunction::compose(const MatrixQ& w) const {
    std::vector<AffinePiece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back({VectorQ(w.transpose() * p.slope), p.constant});
    return PLFunction(std::move(out));
}

PLFunction PLFunction::deduplicated() const {
    std::vector<AffinePiece> out;
    for (const auto& p : pieces_)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return PLFunction(std::move(out));
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
    if (f.dimension() != g.dimension()) throw Error(ErrorCode::DimensionMismatch, "adding PL functions of different dimension");
    std::vector<AffinePiece> out;
    for (const auto& a : f.pieces())
        for (const auto& b : g.pieces()) out.push_back({VectorQ(a.slope + b.slope), a.constant + b.constant});
    return PLFunction(std::move(out)).deduplicated();
}

PLFunction PLFunction::scaled(const Rational& kappa) const {
    if (kappa < 0) throw Error(ErrorCode::NegativeScale, "negative multiples of a convex function are not convex");
    std::vector<AffinePiece> out;
    for (const auto& p : pieces_) out.push_back({VectorQ(p.slope * kappa), p.constant * kappa});
    return PLFunction(std::move(out)).deduplicated();
}

PLFunction orbit_maximum(const WeylGroup& w, const AffinePiece& piece) {
    std::vector<AffinePiece> out;
    for (std::size_t i = 0; i < w.order(); ++i) out.push_back({VectorQ(w.dual(i) * piece.slope), piece.constant});
    return PLFunction(std::move(out)).deduplicated();
}

std::vector<Cell> refine_by_pl(const HPolytope& p, const PLFunction& f) {
    if (f.dimension() != p.dimension()) throw Error(ErrorCode::DimensionMismatch, "function and polytope dimensions differ");
    const auto& pieces = f.pieces();
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        // Identical earlier pieces own the cell.
        if (std::find(pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(k), pieces[k]) !=
            pieces.begin() + static_cast<std::ptrdiff_t>(k))
            continue;
        std::vector<Constraint> cs = p.constraints();
        bool empty = false;
        for (std::size_t j = 0; j < pieces.size() && !empty; ++j) {
            if (j == k || pieces[j] == pieces[k]) continue;
            const VectorQ diff = pieces[k].slope - pieces[j].slope;
            const Rational gap = pieces[j].constant - pieces[k].constant;
            if (diff.isZero()) {
                empty = gap > 0;
                continue;
            }
            cs.push_back(Constraint::normalized(diff, gap));
        }
        if (empty) continue;
        HPolytope raw(p.dimension(), std::move(cs));
        std::vector<std::size_t> kept;
        try {
            kept = irredundant_indices(raw);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Infeasible || e.code() == ErrorCode::NotFullDimensional) continue;
            throw;
        }
        std::vector<Constraint> region;
        std::vector<std::optional<std::size_t>> origin;
        for (auto i : kept) {
            const auto& c = raw.constraints()[i];
            region.push_back(c);
            const auto it = std::find(p.constraints().begin(), p.constraints().end(), c);
            origin.push_back(it == p.constraints().end()
                                 ? std::nullopt
                                 : std::optional<std::size_t>(static_cast<std::size_t>(it - p.constraints().begin())));
        }
        cells.push_back(Cell{HPolytope(p.dimension(), std::move(region)), pieces[k], k, std::move(origin)});
    }
    return cells;
}

std::vector<std::size_t> redundant_pieces(const HPolytope& p, const PLFunction& f) {
    const auto cells = refine_by_pl(p, f);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < f.pieces().size(); ++k)
        if (std::none_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.piece == f.pieces()[k]; }))
            out.push_back(k);
    return out;
}

namespace {

struct PieceLess {
    bool operator()(const std::pair<VectorQ, Rational>& a, const std::pair<VectorQ, Rational>& b) const {
        if (LexLess{}(a.first, b.first)) return true;
        if (LexLess{}(b.first, a.first)) return false;
        return a.second < b.second;
    }
};

std::set<std::pair<VectorQ, Rational>, PieceLess> piece_set(const PLFunction& f) {
    std::set<std::pair<VectorQ, Rational>, PieceLess> out;
    for (const auto& piece : f.pieces()) out.emplace(piece.slope, piece.constant);
    return out;
}

}  // namespace

bool pl_is_weyl_invariant(const PLFunction& f, const HPolytope& p, const WeylGroup& w) {
    const auto cells = refine_by_pl(p, f);
    const auto own = piece_set(f);
    for (std::size_t i = 0; i < w.order(); ++i) {
        const PLFunction g = f.compose(w[i]);
        // Same pieces means the same maximum everywhere, not just on P.
        if (piece_set(g) == own) continue;
        for (const auto& cell : cells)
            for (const auto& common : refine_by_pl(cell.region, g))
                for (const auto& v : vertices(common.region).vertices)
                    if (cell.piece(v) != common.piece(v)) return false;
    }
    return true;
}

std::optional<AffinePiece> pl_restrict_affine(const PLFunction& f, const HPolytope& pplus) {
    const auto cells = refine_by_pl(pplus, f);
    if (cells.size() != 1) return std::nullopt;
    const AffinePiece& piece = cells.front().piece;
    for (const auto& v : vertices(pplus).vertices)
        if (piece(v) != f(v)) return std::nullopt;
    return piece;
}

}  // namespace dfinv
