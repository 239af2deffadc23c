#include "support.hpp"

#include "dfinv/dh_polynomials.hpp"
#include "dfinv/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <doctest.h>

using namespace dfinv;
using namespace dfinv::test;

namespace {

PolynomialQ x(int n, int j) { return PolynomialQ::variable(n, j); }
PolynomialQ one(int n) { return PolynomialQ::constant(n, Rational(1)); }

PolynomialQ monomial(int a, int b) {
    PolynomialQ p(2);
    p.add_term({a, b}, Rational(1));
    return p;
}

Simplex standard_simplex(int n) {
    MatrixQ v = MatrixQ::Zero(n, n + 1);
    for (int j = 0; j < n; ++j) v(j, j + 1) = 1;
    return Simplex(v);
}

Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// int_0^1 int_0^{1-x} x^a y^b dy dx by expanding (1-x)^{b+1} term by term.
Rational iterated_dirichlet(int a, int b) {
    Rational total = 0;
    for (int k = 0; k <= b + 1; ++k) {
        const Rational sign = k % 2 == 0 ? 1 : -1;
        total += sign * binomial(b + 1, k) / Rational(a + k + 1);
    }
    return total / Rational(b + 1);
}

Facet facet_with(const HPolytope& p, const VectorQ& normal) {
    for (const auto& f : facets(p))
        if (f.normal == normal) return f;
    FAIL("facet not found");
    return {};
}

HPolytope dilate(const HPolytope& p, long k) {
    std::vector<Constraint> cs;
    for (const auto& c : p.constraints()) cs.push_back({c.normal, c.offset * k});
    return HPolytope(p.dimension(), cs);
}

}  // namespace

TEST_CASE("simplex integrals") {
    CHECK(integrate_simplex(one(2), standard_simplex(2)) == q("1/2"));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            const Rational dirichlet = factorial(a) * factorial(b) / factorial(a + b + 2);
            CHECK(integrate_simplex(monomial(a, b), standard_simplex(2)) == dirichlet);
            CHECK(dirichlet == iterated_dirichlet(a, b));
        }
    MatrixQ seg(1, 2);
    seg << 0, 2;
    CHECK(integrate_simplex(x(1, 0) * x(1, 0) * Rational(4), Simplex(seg)) == q("32/3"));
}

TEST_CASE("polytope integrals") {
    CHECK(integrate_polytope(one(2), box(2, 0, 1)) == 1);
    const auto a1 = RootSystem::preset("A1");
    CHECK(integrate_polytope(h_top(a1), interval(0, 2)) == q("32/3"));
    CHECK(integrate_polytope(x(2, 0), box(2, -1, 1)) == 0);
    CHECK(integrate(one(2), box(2, 0, 1), Measure::volume) == 1);
}

TEST_CASE("facet integrals with the normalized measure") {
    const auto a1 = RootSystem::preset("A1");
    CHECK(integrate_facet_sigma(h_top(a1), facet_with(interval(0, 2), vec({-1}))) == 16);
    CHECK(integrate_facet_sigma(one(2), facet_with(box(2, -1, 1), vec({-1, 0}))) == 2);

    const HPolytope tri(2, {{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, -1}), -1}});
    CHECK(integrate_facet_sigma(one(2), facet_with(tri, vec({-1, -1}))) == 1);
    CHECK(integrate_boundary(one(2), tri) == 3);
    CHECK(integrate(one(2), box(2, -1, 1), Measure::boundary) == 8);

    // a steeper facet: from (2,0) to (0,1), normal (-1,-2); lattice length 1
    const HPolytope steep(2, {{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, -2}), -2}});
    CHECK(integrate_facet_sigma(one(2), facet_with(steep, vec({-1, -2}))) == 1);
    CHECK(integrate_facet_sigma(x(2, 0), facet_with(steep, vec({-1, -2}))) == 1);
}

TEST_CASE("divergence balance on the Fano instances") {
    for (const auto& c : fano_cases()) {
        CAPTURE(c.name);
        const int n = static_cast<int>(c.rs.dimension());
        const auto pp = positive_part(c.p, c.rs);
        std::vector<PolynomialQ> fs = {one(n)};
        for (int j = 0; j < n; ++j) fs.push_back(x(n, j));
        for (const auto& f : fs) {
            const auto field = shifted_position_field(c.rs, f * h_top(c.rs));
            Rational flux = 0;
            for (const auto& facet : classify_facets(pp, c.rs)) flux += outward_flux(field, facet);
            CHECK(integrate_polytope(divergence(field), pp) == flux);
        }
    }
}

TEST_CASE("property: H_d f vanishes on wall facets") {
    std::mt19937_64 gen(17);
    std::uniform_int_distribution<int> num(-7, 7);
    std::vector<Case> cases = fano_cases();
    const auto g2 = RootSystem::preset("G2");
    cases.push_back({"G2", g2, orbit_polytope(g2, {vec({-1, 0}), vec({0, -1})})});
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const int n = static_cast<int>(c.rs.dimension());
        for (const auto& facet : classify_facets(positive_part(c.p, c.rs), c.rs)) {
            if (facet.kind != FacetKind::wall) continue;
            for (int t = 0; t < 3; ++t) {
                PolynomialQ f = PolynomialQ::constant(n, Rational(num(gen)));
                for (int j = 0; j < n; ++j) f = f + x(n, j) * x(n, j) * Rational(num(gen)) + x(n, j) * Rational(num(gen));
                CHECK(integrate_facet_sigma(f * h_top(c.rs), facet) == 0);
            }
        }
    }
}

TEST_CASE("property: dilation scales the DH integral by k^(2r+n)") {
    for (const auto& c : fano_cases()) {
        const auto pp = positive_part(c.p, c.rs);
        const Rational base = integrate_polytope(h_top(c.rs), pp);
        const int e = static_cast<int>(c.rs.degree() + c.rs.dimension());
        for (long k : {2L, 3L}) {
            Rational factor = 1;
            for (int i = 0; i < e; ++i) factor *= k;
            CHECK(integrate_polytope(h_top(c.rs), positive_part(dilate(c.p, k), c.rs)) == base * factor);
        }
    }
}

TEST_CASE("property: integrals do not depend on input order") {
    const auto hex = a2_hexagon_case();
    const auto pp = positive_part(hex.p, hex.rs);
    const auto top = h_top(hex.rs);
    const Rational ref = integrate_polytope(top * x(2, 0), pp);
    CHECK(ref * 2240 / 675783 == q("24641/9888"));
    auto verts = vertices(pp).vertices;
    std::mt19937_64 gen(2);
    for (int t = 0; t < 4; ++t) {
        std::shuffle(verts.begin(), verts.end(), gen);
        Rational s = 0;
        for (const auto& simplex : triangulate(VPolytope{verts})) s += integrate_simplex(top * x(2, 0), simplex);
        CHECK(s == ref);
        auto cs = pp.constraints();
        std::shuffle(cs.begin(), cs.end(), gen);
        CHECK(integrate_polytope(top * x(2, 0), HPolytope(2, cs)) == ref);
    }
}

TEST_CASE("Monte-Carlo estimates") {
    const auto unit = mc_estimate(one(2), box(2, 0, 1), 1000000, 1);
    CHECK(std::abs(unit.value - 1.0) <= 0.01);

    const auto a1 = RootSystem::preset("A1");
    const auto quad = mc_estimate(h_top(a1), interval(0, 2), 1000000, 2);
    CHECK(std::abs(quad.value - 32.0 / 3) <= 0.01 * 32.0 / 3);
    CHECK(std::abs(quad.value - 32.0 / 3) <= 3 * quad.std_error);

    const auto hex = a2_hexagon_case();
    const auto pp = positive_part(hex.p, hex.rs);
    const double exact = integrate_polytope(h_top(hex.rs), pp).convert_to<double>();
    const auto est = mc_estimate(h_top(hex.rs), pp, 1000000, 3);
    CHECK(std::abs(est.value - exact) <= 0.01 * exact);
    CHECK(std::abs(est.value - exact) <= 3 * est.std_error);

    const auto again = mc_estimate(h_top(hex.rs), pp, 1000000, 3);
    CHECK(again.value == est.value);
    CHECK(again.std_error == est.std_error);
}

TEST_CASE("counter-based sampler is a pure function of its key") {
    CHECK(counter_uniform(9, 100, 1) == counter_uniform(9, 100, 1));
    CHECK(counter_uniform(9, 100, 1) != counter_uniform(9, 101, 1));
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = counter_uniform(4, i, 0);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
