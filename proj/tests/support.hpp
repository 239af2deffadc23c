#pragma once

#include "dfinv/futaki.hpp"
#include "dfinv/lattice.hpp"
#include "dfinv/pl_function.hpp"
#include "dfinv/polytope.hpp"
#include "dfinv/root_system.hpp"

#include <initializer_list>
#include <random>
#include <set>
#include <string>

namespace dfinv::test {

inline Rational q(const char* s) { return parse_rational(s); }
inline Rational q(long v) { return Rational(v); }

inline VectorQ vec(std::initializer_list<Rational> xs) {
    VectorQ v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v(i++) = x;
    return v;
}

inline HPolytope box(Eigen::Index n, long lo, long hi) {
    std::vector<Constraint> cs;
    for (Eigen::Index j = 0; j < n; ++j) {
        VectorQ e = VectorQ::Zero(n);
        e(j) = 1;
        cs.push_back({e, Rational(lo)});
        cs.push_back({VectorQ(-e), Rational(-hi)});
    }
    return HPolytope(n, cs);
}

inline HPolytope interval(long lo, long hi) { return box(1, lo, hi); }

/// Dual-W orbits of the given covectors, each orbit with offset rep . 2rho - 1.
inline HPolytope orbit_polytope(const RootSystem& rs, const std::vector<VectorQ>& reps) {
    const WeylGroup w = weyl_group(rs);
    std::vector<Constraint> cs;
    std::set<VectorQ, LexLess> seen;
    for (const auto& a : reps) {
        const Rational offset = a.dot(rs.two_rho()) - 1;
        for (std::size_t i = 0; i < w.order(); ++i) {
            VectorQ image = w.dual(i) * a;
            if (seen.insert(image).second) cs.push_back({image, offset});
        }
    }
    return HPolytope(rs.dimension(), cs);
}

struct Case {
    std::string name;
    RootSystem rs;
    HPolytope p;
};

inline Case a1_case() { return {"A1", RootSystem::preset("A1"), interval(-2, 2)}; }
inline Case torus_square_case() { return {"torus-2", RootSystem::preset("torus-2"), box(2, -1, 1)}; }
inline Case a2_hexagon_case() {
    const RootSystem rs = RootSystem::preset("A2");
    return {"A2", rs, orbit_polytope(rs, {vec({-1, 0}), vec({0, -1})})};
}

inline Case orbit_case(const char* name) {
    const RootSystem rs = RootSystem::preset(name);
    return {name, rs, orbit_polytope(rs, {vec({-1, 0}), vec({0, -1})})};
}

/// The three bundled Fano instances.
inline std::vector<Case> fano_cases() { return {a1_case(), torus_square_case(), a2_hexagon_case()}; }

inline PLFunction abs_x() { return PLFunction({{vec({1}), 0}, {vec({-1}), 0}}); }

/// W-invariant PL function that is affine on P+: the orbit maximum of a
/// dominant piece (b_s >= 0 on every simple root s in simple-root coordinates).
inline PLFunction random_invariant_affine_on_chamber(const RootSystem& rs, const WeylGroup& w, std::mt19937_64& gen) {
    std::uniform_int_distribution<int> num(0, 9), den(1, 6), sgn(-9, 9);
    VectorQ b(rs.dimension());
    for (Eigen::Index j = 0; j < b.size(); ++j) {
        b(j) = Rational(num(gen), den(gen));
        if (rs.num_positive_roots() == 0 && sgn(gen) < 0) b(j) = -b(j);
    }
    return orbit_maximum(w, {b, Rational(sgn(gen), den(gen))});
}

}  // namespace dfinv::test
