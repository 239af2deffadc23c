#include "support.hpp"

#include "dfinv/error.hpp"
#include "dfinv/quadrature.hpp"

#include <algorithm>
#include <map>

#include <doctest.h>

using namespace dfinv;
using namespace dfinv::test;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

// Shoelace area of a convex polygon given by its vertices in any order.
Rational shoelace(std::vector<VectorQ> pts) {
    VectorQ c = VectorQ::Zero(2);
    for (const auto& p : pts) c += p;
    c /= Rational(static_cast<long>(pts.size()));
    const auto quadrant = [&](const VectorQ& p) {
        const Rational dx = p(0) - c(0), dy = p(1) - c(1);
        if (dy > 0 || (dy == 0 && dx > 0)) return 0;
        return 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const VectorQ& a, const VectorQ& b) {
        if (quadrant(a) != quadrant(b)) return quadrant(a) < quadrant(b);
        const Rational cross = (a(0) - c(0)) * (b(1) - c(1)) - (a(1) - c(1)) * (b(0) - c(0));
        return cross > 0;
    });
    Rational twice = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& r = pts[(i + 1) % pts.size()];
        twice += p(0) * r(1) - p(1) * r(0);
    }
    return abs(twice) / 2;
}

Rational simplex_sum(const std::vector<Simplex>& ss) {
    Rational s = 0;
    for (const auto& t : ss) s += t.volume();
    return s;
}

}  // namespace

TEST_CASE("vertex enumeration examples") {
    const auto sq = vertices(box(2, -1, 1));
    CHECK(sq.vertices.size() == 4);
    CHECK(sq.vertices.front() == vec({-1, -1}));
    CHECK(sq.vertices.back() == vec({1, 1}));

    const auto iv = vertices(interval(-2, 2));
    REQUIRE(iv.vertices.size() == 2);
    CHECK(iv.vertices[0] == vec({-2}));
    CHECK(iv.vertices[1] == vec({2}));

    CHECK(code_of([] { vertices(HPolytope(1, {{vec({1}), 1}, {vec({-1}), 0}})); }) == ErrorCode::Infeasible);
    CHECK(code_of([] { vertices(HPolytope(2, {{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, 0}), -1}})); }) ==
          ErrorCode::Unbounded);
    CHECK(code_of([] { vertices(HPolytope(1, {{vec({1}), 0}, {vec({-1}), 0}})); }) == ErrorCode::NotFullDimensional);
}

TEST_CASE("constraints are normalized to primitive integer normals") {
    const HPolytope p(2, {{vec({2, 2}), 4}, {vec({q("1/2"), 0}), q("-1/2")}, {vec({0, -3}), -3}, {vec({-1, -1}), -10}});
    CHECK(p.constraints()[0].normal == vec({1, 1}));
    CHECK(p.constraints()[0].offset == 2);
    CHECK(p.constraints()[1].normal == vec({1, 0}));
    CHECK(p.constraints()[1].offset == -1);
    CHECK(code_of([] { HPolytope(2, {{vec({0, 0}), 1}}); }) == ErrorCode::ZeroNormal);
    // duplicates collapse
    const HPolytope d(1, {{vec({1}), 0}, {vec({2}), 0}, {vec({-1}), -1}});
    CHECK(d.size() == 2);
}

TEST_CASE("Weyl invariance of polytopes") {
    const auto a1 = RootSystem::preset("A1");
    CHECK(is_weyl_invariant(interval(-2, 2), weyl_group(a1)));
    CHECK_FALSE(is_weyl_invariant(interval(-1, 2), weyl_group(a1)));
    const auto t2 = RootSystem::preset("torus-2");
    CHECK(is_weyl_invariant(HPolytope(2, {{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, -1}), -1}}), weyl_group(t2)));
    const auto hex = a2_hexagon_case();
    CHECK(is_weyl_invariant(hex.p, weyl_group(hex.rs)));
}

TEST_CASE("property: facet multiset is stable under the dual action") {
    for (const auto& c : fano_cases()) {
        const WeylGroup w = weyl_group(c.rs);
        std::multiset<std::pair<VectorQ, Rational>, std::function<bool(const std::pair<VectorQ, Rational>&,
                                                                      const std::pair<VectorQ, Rational>&)>>
            base([](const auto& a, const auto& b) {
                if (LexLess{}(a.first, b.first)) return true;
                if (LexLess{}(b.first, a.first)) return false;
                return a.second < b.second;
            });
        for (const auto& f : facets(c.p)) base.insert({f.normal, f.offset});
        for (std::size_t i = 0; i < w.order(); ++i) {
            auto image = base;
            image.clear();
            for (const auto& f : facets(c.p)) {
                const Constraint moved = act(w[i], {f.normal, f.offset});
                image.insert({moved.normal, moved.offset});
            }
            CHECK(std::equal(base.begin(), base.end(), image.begin(), image.end()));
        }
    }
}

TEST_CASE("positive parts") {
    const auto a1 = RootSystem::preset("A1");
    const auto pp = positive_part(interval(-2, 2), a1);
    const auto v = vertices(pp);
    REQUIRE(v.vertices.size() == 2);
    CHECK(v.vertices[0] == vec({0}));
    CHECK(v.vertices[1] == vec({2}));

    const auto t2 = RootSystem::preset("torus-2");
    const auto sq = box(2, -1, 1);
    CHECK(vertices(positive_part(sq, t2)).vertices == vertices(sq).vertices);

    const auto hex = a2_hexagon_case();
    const auto quad = vertices(positive_part(hex.p, hex.rs)).vertices;
    const std::vector<VectorQ> expected = {vec({0, 0}), vec({q("3/2"), 3}), vec({3, q("3/2")}), vec({3, 3})};
    CHECK(quad == expected);
}

TEST_CASE("A2 hexagon has the expected vertices") {
    const auto hex = a2_hexagon_case();
    CHECK(hex.p.size() == 6);
    for (const auto& c : hex.p.constraints()) CHECK(c.offset == -3);
    const auto v = vertices(hex.p).vertices;
    const std::vector<VectorQ> expected = {vec({-3, -3}), vec({-3, 0}), vec({0, -3}),
                                           vec({0, 3}),   vec({3, 0}),  vec({3, 3})};
    CHECK(v == expected);
}

TEST_CASE("facet classification") {
    const auto a1 = RootSystem::preset("A1");
    const auto f1 = classify_facets(positive_part(interval(-2, 2), a1), a1);
    REQUIRE(f1.size() == 2);
    std::map<Rational, FacetKind> kind;
    for (const auto& f : f1) kind[f.vertices.front()(0)] = f.kind;
    CHECK(kind[Rational(0)] == FacetKind::wall);
    CHECK(kind[Rational(2)] == FacetKind::outer);

    const auto t2 = RootSystem::preset("torus-2");
    const auto f2 = classify_facets(box(2, -1, 1), t2);
    CHECK(f2.size() == 4);
    CHECK(std::all_of(f2.begin(), f2.end(), [](const Facet& f) { return f.kind == FacetKind::outer; }));

    const auto hex = a2_hexagon_case();
    const auto f3 = classify_facets(positive_part(hex.p, hex.rs), hex.rs);
    CHECK(std::count_if(f3.begin(), f3.end(), [](const Facet& f) { return f.kind == FacetKind::wall; }) == 2);
    CHECK(std::count_if(f3.begin(), f3.end(), [](const Facet& f) { return f.kind == FacetKind::outer; }) == 2);
}

TEST_CASE("Fano check") {
    const auto a1 = RootSystem::preset("A1");
    CHECK(check_fano(interval(-2, 2), a1).fano);
    const auto bad = check_fano(interval(-3, 3), a1);
    CHECK_FALSE(bad.fano);
    REQUIRE(bad.offending().size() == 1);
    CHECK(bad.offending().front()->facet.offset == -3);
    CHECK(bad.offending().front()->expected_offset == -2);

    CHECK(check_fano(box(2, -1, 1), RootSystem::preset("torus-2")).fano);
    CHECK_FALSE(check_fano(box(2, -2, 2), RootSystem::preset("torus-2")).fano);
    const auto hex = a2_hexagon_case();
    const auto rep = check_fano(hex.p, hex.rs);
    CHECK(rep.fano);
    CHECK(rep.wall_facets == 2);
}

TEST_CASE("property: Fano implies f_i(2 rho) = 1 on outer facets") {
    for (const auto& c : fano_cases()) {
        const auto rep = check_fano(c.p, c.rs);
        REQUIRE(rep.fano);
        for (const auto& e : rep.outer_facets) {
            // the defining affine function normal . x - offset takes the value 1 at 2 rho
            CHECK(e.facet.normal.dot(c.rs.two_rho()) - e.facet.offset == 1);
        }
    }
}

TEST_CASE("triangulation examples") {
    const auto sq = triangulate(box(2, 0, 1));
    CHECK(sq.size() == 2);
    CHECK(simplex_sum(sq) == 1);

    MatrixQ tri(2, 3);
    tri << 0, 3, 1, 0, 1, 2;
    const VPolytope t{{tri.col(0), tri.col(1), tri.col(2)}};
    const auto ts = triangulate(t);
    REQUIRE(ts.size() == 1);
    CHECK(ts.front().volume() == Simplex(tri).volume());

    const auto hex = a2_hexagon_case();
    const auto quad = positive_part(hex.p, hex.rs);
    const auto qs = triangulate(quad);
    CHECK(qs.size() == 2);
    CHECK(simplex_sum(qs) == shoelace(vertices(quad).vertices));
    CHECK(simplex_sum(qs) == integrate_polytope(PolynomialQ::constant(2, Rational(1)), quad));
    CHECK(simplex_sum(triangulate(hex.p)) == shoelace(vertices(hex.p).vertices));
    CHECK(shoelace(vertices(hex.p).vertices) == 27);
}

TEST_CASE("property: vertices of the hull round-trip") {
    std::vector<HPolytope> ps = {box(3, -1, 1), interval(-2, 2), a2_hexagon_case().p};
    const auto b2 = RootSystem::preset("B2");
    ps.push_back(positive_part(orbit_polytope(b2, {vec({-1, 0}), vec({0, -1})}), b2));
    for (const auto& p : ps) {
        const VPolytope v = vertices(p);
        VPolytope shuffled = v;
        std::reverse(shuffled.vertices.begin(), shuffled.vertices.end());
        const HPolytope h = hull(shuffled);
        CHECK(vertices(h).vertices == v.vertices);
        CHECK(volume(h) == volume(p));
        CHECK(irredundant(h).size() == h.size());
    }
}

TEST_CASE("property: triangulation volume is independent of constraint order") {
    const auto hex = a2_hexagon_case();
    auto cs = hex.p.constraints();
    std::mt19937_64 gen(5);
    for (int t = 0; t < 5; ++t) {
        std::shuffle(cs.begin(), cs.end(), gen);
        const HPolytope p(2, cs);
        CHECK(volume(p) == 27);
        CHECK(simplex_sum(triangulate(p)) == 27);
    }
}

TEST_CASE("degenerate simplex is rejected") {
    MatrixQ flat(2, 3);
    flat << 0, 1, 2, 0, 1, 2;
    CHECK(code_of([&] { Simplex s(flat); }) == ErrorCode::DegenerateSimplex);
}

TEST_CASE("PL refinement examples") {
    const auto a1 = RootSystem::preset("A1");
    const auto pp = positive_part(interval(-2, 2), a1);
    CHECK(refine_by_pl(pp, PLFunction::affine(vec({3}), 1)).size() == 1);

    const auto cells = refine_by_pl(pp, abs_x());
    REQUIRE(cells.size() == 1);
    CHECK(cells.front().piece.slope == vec({1}));
    CHECK(vertices(cells.front().region).vertices == vertices(pp).vertices);

    const auto t1 = refine_by_pl(interval(-1, 1), abs_x());
    REQUIRE(t1.size() == 2);
    std::vector<std::vector<VectorQ>> regions;
    for (const auto& c : t1) regions.push_back(vertices(c.region).vertices);
    std::sort(regions.begin(), regions.end(), [](const auto& a, const auto& b) { return LexLess{}(a[0], b[0]); });
    CHECK(regions[0] == std::vector<VectorQ>{vec({-1}), vec({0})});
    CHECK(regions[1] == std::vector<VectorQ>{vec({0}), vec({1})});
}

TEST_CASE("property: refinement cells tile P+ and the active piece dominates") {
    std::mt19937_64 gen(3);
    const auto hex = a2_hexagon_case();
    const auto pp = positive_part(hex.p, hex.rs);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int t = 0; t < 8; ++t) {
        std::vector<AffinePiece> pieces;
        for (int k = 0; k < 3; ++k) pieces.push_back({vec({num(gen), num(gen)}), Rational(num(gen))});
        const PLFunction f(pieces);
        Rational total = 0;
        for (const auto& cell : refine_by_pl(pp, f)) {
            total += volume(cell.region);
            for (const auto& v : vertices(cell.region).vertices)
                for (const auto& p : f.pieces()) CHECK(cell.piece(v) >= p(v));
        }
        CHECK(total == volume(pp));
    }
}

TEST_CASE("PL Weyl invariance") {
    const auto a1 = RootSystem::preset("A1");
    const auto w1 = weyl_group(a1);
    CHECK(pl_is_weyl_invariant(abs_x(), interval(-2, 2), w1));
    CHECK_FALSE(pl_is_weyl_invariant(PLFunction::affine(vec({1}), 0), interval(-2, 2), w1));

    // 2x - 10 has no mirror image among the pieces but never wins on [-2, 2]
    const PLFunction padded({{vec({1}), 0}, {vec({-1}), 0}, {vec({2}), -10}});
    CHECK(pl_is_weyl_invariant(padded, interval(-2, 2), w1));
    CHECK_FALSE(pl_is_weyl_invariant(padded, interval(-20, 20), w1));

    const auto t2 = RootSystem::preset("torus-2");
    CHECK(pl_is_weyl_invariant(PLFunction::affine(vec({1, -3}), 2), box(2, -1, 1), weyl_group(t2)));

    const auto hex = a2_hexagon_case();
    const auto w = weyl_group(hex.rs);
    CHECK(pl_is_weyl_invariant(orbit_maximum(w, {vec({1, 1}), 0}), hex.p, w));
    CHECK_FALSE(pl_is_weyl_invariant(PLFunction({{vec({1, 1}), 0}, {vec({-1, -1}), 0}}), hex.p, w));
}

TEST_CASE("restriction to an affine piece") {
    const auto a1 = RootSystem::preset("A1");
    const auto pp = positive_part(interval(-2, 2), a1);
    const auto piece = pl_restrict_affine(abs_x(), pp);
    REQUIRE(piece);
    CHECK(piece->slope == vec({1}));
    CHECK(piece->constant == 0);

    CHECK_FALSE(pl_restrict_affine(abs_x(), interval(-1, 1)));

    const auto c = pl_restrict_affine(PLFunction::constant(1, Rational(3)), pp);
    REQUIRE(c);
    CHECK(c->slope == vec({0}));
    CHECK(c->constant == 3);
}

TEST_CASE("redundant pieces are detected, not rejected") {
    const PLFunction f({{vec({1}), 0}, {vec({-1}), 0}, {vec({0}), -5}});
    const auto red = redundant_pieces(interval(-2, 2), f);
    REQUIRE(red.size() == 1);
    CHECK(red.front() == 2);
}
