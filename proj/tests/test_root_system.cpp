#include "support.hpp"

#include "dfinv/error.hpp"

#include <doctest.h>

using namespace dfinv;
using namespace dfinv::test;

TEST_CASE("A1 preset data") {
    const auto rs = RootSystem::preset("A1");
    CHECK(rs.num_positive_roots() == 1);
    CHECK(rs.rho() == vec({q("1/2")}));
    CHECK(rs.pairing(rs.positive_roots()[0], rs.rho()) == 1);
    CHECK(rs.c() == 1);
    CHECK(rs.degree() == 2);
    CHECK(rs.pairing(vec({1}), vec({1})) == 2);
}

TEST_CASE("torus-2 preset is rank 2 with no roots") {
    const auto rs = RootSystem::preset("torus-2");
    CHECK(rs.num_positive_roots() == 0);
    CHECK(rs.rho() == vec({0, 0}));
    CHECK(rs.c() == 1);
    CHECK(rs.degree() == 0);
    CHECK(weyl_group(rs).order() == 1);
}

TEST_CASE("A2 preset data") {
    const auto rs = RootSystem::preset("A2");
    CHECK(rs.num_positive_roots() == 3);
    CHECK(rs.rho() == vec({1, 1}));
    CHECK(rs.c() == 4);
    CHECK(rs.degree() == 6);
    CHECK(rs.degree() + rs.dimension() == 8);
    CHECK(rs.pairing(vec({1, 1}), rs.rho()) == 2);
    CHECK(rs.simple_roots().size() == 2);
}

TEST_CASE("pairing with zero and dimension mismatch") {
    for (const auto& name : preset_names()) {
        const auto rs = RootSystem::preset(name);
        const VectorQ v = VectorQ::Constant(rs.dimension(), q("3/7"));
        CHECK(rs.pairing(v, VectorQ::Zero(rs.dimension())) == 0);
    }
    const auto a2 = RootSystem::preset("A2");
    CHECK_THROWS_AS(a2.pairing(vec({1}), vec({1, 2})), Error);
}

TEST_CASE("reflection examples") {
    const auto a1 = RootSystem::preset("A1");
    CHECK(a1.reflect(vec({1}), vec({1})) == vec({-1}));
    const auto a2 = RootSystem::preset("A2");
    CHECK(a2.reflect(vec({1, 0}), vec({0, 1})) == vec({1, 1}));
    for (const auto& name : preset_names()) {
        const auto rs = RootSystem::preset(name);
        for (const auto& a : rs.positive_roots()) CHECK(rs.reflect(a, a) == VectorQ(-a));
    }
    CHECK_THROWS_AS(a2.reflect(vec({1, -1}), vec({0, 1})), Error);
}

TEST_CASE("Weyl group orders") {
    CHECK(weyl_group(RootSystem::preset("A1")).order() == 2);
    CHECK(weyl_group(RootSystem::preset("A2")).order() == 6);
    CHECK(weyl_group(RootSystem::preset("B2")).order() == 8);
    CHECK(weyl_group(RootSystem::preset("G2")).order() == 12);
    CHECK(weyl_group(RootSystem::preset("torus-3")).order() == 1);
    CHECK_THROWS_AS(weyl_group(RootSystem::preset("G2"), 5), Error);
}

TEST_CASE("Weyl group is deterministic, closed, contains the identity") {
    for (const auto& name : preset_names()) {
        const auto rs = RootSystem::preset(name);
        const WeylGroup w = weyl_group(rs);
        const WeylGroup again = weyl_group(rs);
        REQUIRE(w.order() == again.order());
        std::set<MatrixQ, LexLess> elements(w.elements().begin(), w.elements().end());
        CHECK(elements.count(MatrixQ::Identity(rs.dimension(), rs.dimension())) == 1);
        for (std::size_t i = 0; i < w.order(); ++i) {
            CHECK(exactly_equal(w[i], again[i]));
            for (std::size_t j = 0; j < w.order(); ++j) CHECK(elements.count(MatrixQ(w[i] * w[j])) == 1);
        }
        for (std::size_t i = 1; i < w.order(); ++i) CHECK(LexLess{}(w[i - 1], w[i]));
    }
}

TEST_CASE("property: W preserves the pairing and permutes roots up to sign") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (const auto& name : preset_names()) {
        const auto rs = RootSystem::preset(name);
        const WeylGroup w = weyl_group(rs);
        const Eigen::Index n = rs.dimension();
        for (int trial = 0; trial < 5; ++trial) {
            VectorQ u(n), v(n);
            for (Eigen::Index j = 0; j < n; ++j) {
                u(j) = Rational(num(gen), den(gen));
                v(j) = Rational(num(gen), den(gen));
            }
            for (const auto& m : w.elements()) CHECK(rs.pairing(m * u, m * v) == rs.pairing(u, v));
            for (const auto& a : rs.positive_roots()) CHECK(rs.reflect(a, rs.reflect(a, u)) == u);
        }
        for (const auto& m : w.elements())
            for (const auto& a : rs.positive_roots()) {
                const VectorQ image = m * a;
                CHECK((rs.is_root(image) || rs.is_root(VectorQ(-image))));
            }
    }
}

TEST_CASE("validation errors") {
    MatrixQ gram(2, 2);
    gram << 1, 0, 0, -1;
    CHECK_THROWS_AS(RootSystem::from_data(gram, {}), Error);

    MatrixQ a2gram(2, 2);
    a2gram << 2, -1, -1, 2;
    try {
        RootSystem::from_data(a2gram, {vec({1, 0}), vec({0, 1})});
        FAIL("expected NotClosedUnderReflection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotClosedUnderReflection);
    }
    try {
        RootSystem::preset("E8");
        FAIL("expected UnknownPreset");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownPreset);
    }
    // a negative root listed among the positives sits on the wrong side of rho
    try {
        RootSystem::from_data(a2gram, {vec({1, 0}), vec({0, 1}), vec({-1, -1})});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() != ErrorCode::ParseError);
    }
}

TEST_CASE("explicit data reproduces the preset") {
    MatrixQ gram(2, 2);
    gram << 2, -1, -1, 1;
    const auto custom = RootSystem::from_data(gram, {vec({1, 2}), vec({1, 1}), vec({0, 1}), vec({1, 0})});
    const auto b2 = RootSystem::preset("B2");
    CHECK(custom.rho() == b2.rho());
    CHECK(custom.c() == b2.c());
    CHECK(custom.simple_roots().size() == 2);
}
