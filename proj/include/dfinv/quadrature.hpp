#pragma once

// Exact integration of polynomials over polytopes (Lebesgue measure dmu) and
// over facets with the lattice-normalized boundary measure dsigma, plus a
// floating-point Monte-Carlo estimator used as an independent oracle.

#include "dfinv/polynomial.hpp"
#include "dfinv/polytope.hpp"

#include <cstdint>

namespace dfinv {

enum class Measure { volume, boundary };

/// Pull back to the standard simplex and apply
/// int_{Delta_n} prod y_i^g_i dy = prod g_i! / (sum g_i + n)!, scaled by |det|.
Rational integrate_simplex(const PolynomialQ& p, const Simplex& s);

Rational integrate_polytope(const PolynomialQ& p, const HPolytope& polytope);

/**
 * int_F p dsigma, where dsigma ^ dl = dmu for l(x) = a.x and a primitive.
 *
 * F is projected along the coordinate j with the largest |a_j| (ties go to the
 * smallest j), integrated exactly there, and divided by |a_j|. This is the
 * Euclidean surface measure divided by |a|, but stays rational.
 */
Rational integrate_facet_sigma(const PolynomialQ& p, const Facet& facet);

/// Sum of integrate_facet_sigma over every facet of the polytope.
Rational integrate_boundary(const PolynomialQ& p, const HPolytope& polytope);

Rational integrate(const PolynomialQ& p, const HPolytope& polytope, Measure measure);

/// Outward flux of V through F: int_F V . (-a) dsigma, since a points inward.
Rational outward_flux(const PolyVectorFieldQ& field, const Facet& facet);

struct McEstimate {
    double value = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t accepted = 0;
};

/// Rejection sampling in the bounding box. Sample i draws its coordinates from
/// a counter-based generator keyed by (seed, i), so results do not depend on
/// evaluation order.
McEstimate mc_estimate(const PolynomialQ& p, const HPolytope& polytope, std::uint64_t samples, std::uint64_t seed);

/// Monte-Carlo counterpart of integrate_facet_sigma (same projection and weight).
McEstimate mc_estimate_facet(const PolynomialQ& p, const Facet& facet, std::uint64_t samples, std::uint64_t seed);

/// Uniform double in [0, 1) for (seed, counter, coordinate).
double counter_uniform(std::uint64_t seed, std::uint64_t counter, std::uint64_t coordinate);

}  // namespace dfinv
