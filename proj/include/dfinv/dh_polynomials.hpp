#pragma once

// Top homogeneous parts of the squared Weyl dimension polynomial, which give
// the Duistermaat-Heckman density on the positive chamber.

#include "dfinv/polynomial.hpp"
#include "dfinv/root_system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dfinv {

/// The polynomial x -> <alpha, x> (gram pairing).
PolynomialQ root_form(const RootSystem& rs, const VectorQ& alpha);

/// H_d(x) = (1/c) prod_i <alpha_i, x>^2; the constant 1 for a torus.
PolynomialQ h_top(const RootSystem& rs);

/// H_{d-1}(x) = (1/c) sum_j 2<alpha_j,x><alpha_j,rho> prod_{i != j} <alpha_i,x>^2.
PolynomialQ h_sub(const RootSystem& rs);

/// Gradient of H_d as a vector in M_R, built from the root-sum closed form
/// sum_i (2/c) <alpha_i,x> prod_{k != i} <alpha_k,x>^2 alpha_i. Pair it with
/// `gram_pairing` to get directional derivatives.
PolyVectorFieldQ grad_h_top(const RootSystem& rs);

/// <V, v> in the gram pairing for a field of M_R-vectors.
PolynomialQ gram_pairing(const RootSystem& rs, const PolyVectorFieldQ& field, const VectorQ& v);

/// <V(x), x> in the gram pairing.
PolynomialQ gram_pairing_with_position(const RootSystem& rs, const PolyVectorFieldQ& field);

/// (prod <alpha_i, x + rho> / prod <alpha_i, rho>)^2, fully expanded.
PolynomialQ weyl_dimension_squared(const RootSystem& rs);

/// The field (x - 2 rho) * g.
PolyVectorFieldQ shifted_position_field(const RootSystem& rs, const PolynomialQ& g);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ClaimReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    bool passed(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c.passed;
        return false;
    }
};

/**
 * Checks, as exact coefficient-wise identities:
 *   rho-derivative:  <grad H_d, rho> = H_{d-1}
 *   euler:           <grad H_d, x> = 2r H_d
 *   divergence:      div((x - 2rho) f H_d) = <grad f, x - 2rho> H_d + (2r+n) f H_d - 2 f H_{d-1}
 * for f in {1, x_1, ..., x_n} and a few seeded random rational affine f.
 * Also records H_d(rho) = 1, H_{d-1}(rho) = 2r and that the closed-form
 * gradient agrees with coordinate differentiation. Failures are reported, never thrown.
 */
ClaimReport verify_claim_identities(const RootSystem& rs, std::uint64_t seed = 20170501, int random_affine = 3);

}  // namespace dfinv
