#pragma once

#include "dfinv/dh_polynomials.hpp"
#include "dfinv/pl_function.hpp"
#include "dfinv/polytope.hpp"
#include "dfinv/quadrature.hpp"

#include <optional>
#include <string>

namespace dfinv {

/// Vol_DH(P+) = int_{P+} H_d dmu.
Rational dh_volume(const HPolytope& pplus, const RootSystem& rs);

/// (1 / Vol_DH) int_{P+} x H_d dmu.
VectorQ dh_barycenter(const HPolytope& pplus, const RootSystem& rs);

/// a = (int_{dP+} H_d dsigma + 2 int_{P+} H_{d-1} dmu) / int_{P+} H_d dmu.
Rational constant_a(const HPolytope& pplus, const RootSystem& rs);

/// The three f-dependent integrals of the general formula, summed over the
/// cells on which f is affine.
struct TheoremIntegrals {
    Rational boundary_f_top;  // int_{dP+} f H_d dsigma
    Rational volume_f_sub;    // int_{P+} f H_{d-1} dmu
    Rational volume_f_top;    // int_{P+} f H_d dmu
};

TheoremIntegrals theorem_integrals(const HPolytope& pplus, const RootSystem& rs, const PLFunction& f);

/// Monte-Carlo estimates of vol_DH and the three integrals above. Each cell
/// and facet gets its own derived seed; standard errors add in quadrature.
struct McTheoremIntegrals {
    McEstimate volume;
    McEstimate boundary_f_top;
    McEstimate volume_f_sub;
    McEstimate volume_f_top;
};

McTheoremIntegrals mc_theorem_integrals(const HPolytope& pplus, const RootSystem& rs, const PLFunction& f,
                                        std::uint64_t samples, std::uint64_t seed);

struct DFOptions {
    bool allow_non_invariant_f = false;
};

/**
 * -F_1(f) = (1 / (2 Vol_DH)) (int_{dP+} f H_d dsigma + 2 int_{P+} f H_{d-1} dmu - a int_{P+} f H_d dmu).
 *
 * P must be W-invariant. f must be W-invariant unless the override is set.
 * Throws NotWeylInvariantPolytope / NotWeylInvariantFunction.
 */
Rational df_general(const HPolytope& p, const RootSystem& rs, const PLFunction& f, const DFOptions& options = {});

/// 1/2 b . (bar_DH(P+) - 2 rho) for f = b.x + k on P+. Throws NotFano or NotAffineOnPositivePart.
Rational df_fano_affine(const HPolytope& p, const RootSystem& rs, const PLFunction& f);

enum class CrossCheck { equal, not_equal, not_applicable };

std::string to_string(CrossCheck c);

struct DFReport {
    bool fano = false;
    std::size_t r = 0;
    Eigen::Index n = 0;
    std::size_t d = 0;
    std::size_t weyl_order = 1;
    Rational a;
    Rational vol_dh;
    VectorQ bar_dh;
    VectorQ two_rho;
    Rational df_general;
    std::optional<Rational> df_affine;
    std::string df_affine_note;  // reason when df_affine is absent
    CrossCheck cross_check = CrossCheck::not_applicable;
    bool identities_ok = false;
    bool f_weyl_invariant = true;
    bool invariance_overridden = false;
    FanoReport fano_report;
    ClaimReport claims;
    TheoremIntegrals integrals;
};

DFReport df_report(const HPolytope& p, const RootSystem& rs, const PLFunction& f, const DFOptions& options = {});

}  // namespace dfinv
