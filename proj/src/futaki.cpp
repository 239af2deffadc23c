#include "dfinv/futaki.hpp"

#include "dfinv/error.hpp"

#include <cmath>

namespace dfinv {

namespace {

PolynomialQ coordinate(const RootSystem& rs, Eigen::Index j) {
    return PolynomialQ::variable(static_cast<int>(rs.dimension()), static_cast<int>(j));
}

void require_invariant_polytope(const HPolytope& p, const WeylGroup& w) {
    if (!is_weyl_invariant(p, w)) throw Error(ErrorCode::NotWeylInvariantPolytope, "P is not W-invariant");
}

Rational assemble(const TheoremIntegrals& t, const Rational& a, const Rational& vol) {
    return (t.boundary_f_top + 2 * t.volume_f_sub - a * t.volume_f_top) / (2 * vol);
}

}  // namespace

Rational dh_volume(const HPolytope& pplus, const RootSystem& rs) { return integrate_polytope(h_top(rs), pplus); }

VectorQ dh_barycenter(const HPolytope& pplus, const RootSystem& rs) {
    const PolynomialQ top = h_top(rs);
    const Rational vol = integrate_polytope(top, pplus);
    VectorQ bar(rs.dimension());
    for (Eigen::Index j = 0; j < bar.size(); ++j) bar(j) = integrate_polytope(coordinate(rs, j) * top, pplus) / vol;
    return bar;
}

Rational constant_a(const HPolytope& pplus, const RootSystem& rs) {
    const PolynomialQ top = h_top(rs);
    return (integrate_boundary(top, pplus) + 2 * integrate_polytope(h_sub(rs), pplus)) / integrate_polytope(top, pplus);
}

TheoremIntegrals theorem_integrals(const HPolytope& pplus, const RootSystem& rs, const PLFunction& f) {
    const PolynomialQ top = h_top(rs);
    const PolynomialQ sub = h_sub(rs);
    TheoremIntegrals t;
    for (const auto& cell : refine_by_pl(pplus, f)) {
        const PolynomialQ g = PolynomialQ::linear(cell.piece.slope, cell.piece.constant);
        t.volume_f_top += integrate_polytope(g * top, cell.region);
        t.volume_f_sub += integrate_polytope(g * sub, cell.region);
        // Only the cell facets lying on the boundary of P+ contribute.
        for (const auto& facet : facets(cell.region))
            if (cell.origin[facet.constraint_index]) t.boundary_f_top += integrate_facet_sigma(g * top, facet);
    }
    return t;
}

namespace {

void accumulate(McEstimate& total, const McEstimate& part) {
    total.value += part.value;
    total.std_error = std::sqrt(total.std_error * total.std_error + part.std_error * part.std_error);
    total.samples += part.samples;
    total.accepted += part.accepted;
}

}  // namespace

McTheoremIntegrals mc_theorem_integrals(const HPolytope& pplus, const RootSystem& rs, const PLFunction& f,
                                        std::uint64_t samples, std::uint64_t seed) {
    const PolynomialQ top = h_top(rs);
    const PolynomialQ sub = h_sub(rs);
    std::uint64_t stream = 0;
    auto next_seed = [&] { return seed + 0x9E3779B97F4A7C15ULL * ++stream; };

    McTheoremIntegrals t;
    t.volume = mc_estimate(top, pplus, samples, next_seed());
    for (const auto& cell : refine_by_pl(pplus, f)) {
        const PolynomialQ g = PolynomialQ::linear(cell.piece.slope, cell.piece.constant);
        accumulate(t.volume_f_top, mc_estimate(g * top, cell.region, samples, next_seed()));
        accumulate(t.volume_f_sub, mc_estimate(g * sub, cell.region, samples, next_seed()));
        for (const auto& facet : facets(cell.region))
            if (cell.origin[facet.constraint_index])
                accumulate(t.boundary_f_top, mc_estimate_facet(g * top, facet, samples, next_seed()));
    }
    return t;
}

Rational df_general(const HPolytope& p, const RootSystem& rs, const PLFunction& f, const DFOptions& options) {
    const WeylGroup w = weyl_group(rs);
    require_invariant_polytope(p, w);
    if (!options.allow_non_invariant_f && !pl_is_weyl_invariant(f, p, w))
        throw Error(ErrorCode::NotWeylInvariantFunction, "f is not W-invariant on P");
    const HPolytope pplus = positive_part(p, rs);
    return assemble(theorem_integrals(pplus, rs, f), constant_a(pplus, rs), dh_volume(pplus, rs));
}

Rational df_fano_affine(const HPolytope& p, const RootSystem& rs, const PLFunction& f) {
    if (!check_fano(p, rs).fano) throw Error(ErrorCode::NotFano, "P violates the Fano offset rule");
    const HPolytope pplus = positive_part(p, rs);
    const auto piece = pl_restrict_affine(f, pplus);
    if (!piece) throw Error(ErrorCode::NotAffineOnPositivePart, "f is not affine on P+");
    const VectorQ bar = dh_barycenter(pplus, rs);
    return piece->slope.dot(bar - rs.two_rho()) / 2;
}

std::string to_string(CrossCheck c) {
    switch (c) {
        case CrossCheck::equal: return "equal";
        case CrossCheck::not_equal: return "not-equal";
        case CrossCheck::not_applicable: return "not-applicable";
    }
    return "?";
}

DFReport df_report(const HPolytope& p, const RootSystem& rs, const PLFunction& f, const DFOptions& options) {
    const WeylGroup w = weyl_group(rs);
    require_invariant_polytope(p, w);

    DFReport report;
    report.f_weyl_invariant = pl_is_weyl_invariant(f, p, w);
    if (!report.f_weyl_invariant && !options.allow_non_invariant_f)
        throw Error(ErrorCode::NotWeylInvariantFunction, "f is not W-invariant on P");
    report.invariance_overridden = !report.f_weyl_invariant;

    const HPolytope pplus = positive_part(p, rs);
    report.r = rs.num_positive_roots();
    report.n = rs.dimension();
    report.d = rs.degree();
    report.weyl_order = w.order();
    report.two_rho = rs.two_rho();
    report.fano_report = check_fano(p, rs);
    report.fano = report.fano_report.fano;
    report.claims = verify_claim_identities(rs);
    report.identities_ok = report.claims.all_passed();

    report.vol_dh = dh_volume(pplus, rs);
    report.bar_dh = dh_barycenter(pplus, rs);
    report.a = constant_a(pplus, rs);
    report.integrals = theorem_integrals(pplus, rs, f);
    report.df_general = assemble(report.integrals, report.a, report.vol_dh);

    const auto piece = pl_restrict_affine(f, pplus);
    if (!report.fano) {
        report.df_affine_note = "P is not Fano";
    } else if (!piece) {
        report.df_affine_note = "f is not affine on P+";
    } else {
        report.df_affine = piece->slope.dot(report.bar_dh - rs.two_rho()) / 2;
        report.cross_check = *report.df_affine == report.df_general ? CrossCheck::equal : CrossCheck::not_equal;
    }
    return report;
}

}  // namespace dfinv
