#include "dfinv/report.hpp"

#include "dfinv/error.hpp"
#include "dfinv/futaki.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dfinv {

namespace {

using Json = nlohmann::ordered_json;

Json exact(const Rational& q) {
    Json j;
    j["exact"] = to_string(q);
    j["decimal"] = to_decimal(q, 12);
    return j;
}

Json exact(const VectorQ& v) {
    Json e = Json::array(), d = Json::array();
    for (const auto& x : v) {
        e.push_back(to_string(x));
        d.push_back(to_decimal(x, 12));
    }
    Json j;
    j["exact"] = e;
    j["decimal"] = d;
    return j;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Agreement means within 3 standard errors, and within 1% when the exact value is not zero.
Json corroborate(const McEstimate& mc, const Rational& exact_value) {
    const double truth = exact_value.convert_to<double>();
    const double err = std::abs(mc.value - truth);
    Json j;
    j["estimate"] = format_double(mc.value);
    j["std_error"] = format_double(mc.std_error);
    j["samples"] = mc.samples;
    const bool within_sigma = err <= 3 * mc.std_error || err == 0.0;
    if (truth != 0.0) {
        j["relative_error"] = format_double(err / std::abs(truth));
        j["agrees"] = within_sigma && err / std::abs(truth) <= 0.01;
    } else {
        j["agrees"] = within_sigma;
    }
    return j;
}

std::uint64_t seed_of(const Instance& inst, const RunOptions& o) { return o.seed.value_or(inst.options.seed); }

const PLFunction& require_function(const Instance& inst) {
    if (!inst.function) throw Error(ErrorCode::ValidationError, "function: this command needs a function f");
    return *inst.function;
}

Json root_system_json(const RootSystem& rs, std::size_t weyl_order) {
    Json j;
    j["name"] = rs.name();
    j["n"] = rs.dimension();
    j["r"] = rs.num_positive_roots();
    j["d"] = rs.degree();
    j["weyl_order"] = weyl_order;
    j["c"] = exact(rs.c());
    j["rho"] = exact(rs.rho());
    j["two_rho"] = exact(rs.two_rho());
    return j;
}

Json cmd_validate(const Instance& inst) {
    const RootSystem& rs = inst.root_system;
    const WeylGroup w = weyl_group(rs);
    const VPolytope verts = vertices(inst.polytope);

    Json out;
    out["command"] = "validate";
    out["valid"] = true;
    out["root_system"] = root_system_json(rs, w.order());

    bool lattice = true;
    for (const auto& v : verts.vertices)
        for (const auto& x : v) lattice = lattice && is_integer(x);
    Json p;
    p["constraints"] = inst.polytope.size();
    p["irredundant_constraints"] = irredundant_indices(inst.polytope).size();
    p["vertices"] = verts.vertices.size();
    p["lattice_polytope"] = lattice;
    p["weyl_invariant"] = true;
    p["volume"] = exact(volume(inst.polytope));
    out["polytope"] = p;

    if (inst.function) {
        Json f;
        f["pieces"] = inst.function->pieces().size();
        f["redundant_pieces"] = redundant_pieces(inst.polytope, *inst.function).size();
        f["weyl_invariant"] = pl_is_weyl_invariant(*inst.function, inst.polytope, w);
        out["function"] = f;
    } else {
        out["function"] = "none";
    }
    out["warnings"] = inst.warnings;
    out["instance"] = to_json(inst);
    return out;
}

Json cmd_fano(const Instance& inst) {
    const FanoReport rep = check_fano(inst.polytope, inst.root_system);
    Json out;
    out["command"] = "fano";
    out["fano"] = rep.fano;
    out["wall_facets"] = rep.wall_facets;
    Json facets = Json::array();
    for (const auto& e : rep.outer_facets) {
        Json f;
        f["normal"] = exact(e.facet.normal);
        f["offset"] = exact(e.facet.offset);
        f["expected_offset"] = exact(e.expected_offset);
        f["primitive"] = e.primitive;
        f["ok"] = e.ok;
        facets.push_back(f);
    }
    out["outer_facets"] = facets;
    out["offending_facets"] = rep.offending().size();
    return out;
}

Json cmd_identities(const Instance& inst) {
    const ClaimReport rep = verify_claim_identities(inst.root_system);
    Json out;
    out["command"] = "identities";
    out["all_passed"] = rep.all_passed();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        checks.push_back(j);
    }
    out["checks"] = checks;
    return out;
}

Json cmd_volume(const Instance& inst, const RunOptions& o) {
    const HPolytope pplus = positive_part(inst.polytope, inst.root_system);
    const Rational vol = dh_volume(pplus, inst.root_system);
    Json out;
    out["command"] = "volume";
    out["vol_dh"] = exact(vol);
    out["euclidean_volume_p"] = exact(volume(inst.polytope));
    out["euclidean_volume_pplus"] = exact(volume(pplus));
    if (o.mc_check)
        out["mc"]["vol_dh"] = corroborate(
            mc_estimate(h_top(inst.root_system), pplus, inst.options.mc_samples, seed_of(inst, o)), vol);
    return out;
}

Json cmd_barycenter(const Instance& inst, const RunOptions& o) {
    const HPolytope pplus = positive_part(inst.polytope, inst.root_system);
    const Rational vol = dh_volume(pplus, inst.root_system);
    const VectorQ bar = dh_barycenter(pplus, inst.root_system);
    Json out;
    out["command"] = "barycenter";
    out["vol_dh"] = exact(vol);
    out["bar_dh"] = exact(bar);
    out["two_rho"] = exact(inst.root_system.two_rho());
    if (o.mc_check) {
        const PolynomialQ top = h_top(inst.root_system);
        const auto n = static_cast<int>(inst.root_system.dimension());
        for (int j = 0; j < n; ++j) {
            const PolynomialQ xj = PolynomialQ::variable(n, j);
            out["mc"]["first_moment"].push_back(corroborate(
                mc_estimate(xj * top, pplus, inst.options.mc_samples, seed_of(inst, o) + static_cast<std::uint64_t>(j)),
                bar(j) * vol));
        }
    }
    return out;
}

Json cmd_df(const Instance& inst, const RunOptions& o) {
    const PLFunction& f = require_function(inst);
    DFOptions opts;
    opts.allow_non_invariant_f = inst.options.allow_non_invariant_f;
    const DFReport rep = df_report(inst.polytope, inst.root_system, f, opts);

    Json out;
    out["command"] = "df";
    out["fano"] = rep.fano;
    out["r"] = rep.r;
    out["n"] = rep.n;
    out["d"] = rep.d;
    out["weyl_order"] = rep.weyl_order;
    out["a"] = exact(rep.a);
    out["vol_dh"] = exact(rep.vol_dh);
    out["bar_dh"] = exact(rep.bar_dh);
    out["two_rho"] = exact(rep.two_rho);
    out["df_general"] = exact(rep.df_general);
    if (rep.df_affine)
        out["df_affine"] = exact(*rep.df_affine);
    else
        out["df_affine"] = "n/a (" + rep.df_affine_note + ")";
    out["cross_check"] = to_string(rep.cross_check);
    out["identities_ok"] = rep.identities_ok;
    out["f_weyl_invariant"] = rep.f_weyl_invariant;
    out["invariance_overridden"] = rep.invariance_overridden;
    out["integrals"]["boundary_f_top"] = exact(rep.integrals.boundary_f_top);
    out["integrals"]["volume_f_sub"] = exact(rep.integrals.volume_f_sub);
    out["integrals"]["volume_f_top"] = exact(rep.integrals.volume_f_top);

    if (o.mc_check) {
        const HPolytope pplus = positive_part(inst.polytope, inst.root_system);
        const McTheoremIntegrals mc =
            mc_theorem_integrals(pplus, inst.root_system, f, inst.options.mc_samples, seed_of(inst, o));
        out["mc"]["vol_dh"] = corroborate(mc.volume, rep.vol_dh);
        out["mc"]["boundary_f_top"] = corroborate(mc.boundary_f_top, rep.integrals.boundary_f_top);
        out["mc"]["volume_f_sub"] = corroborate(mc.volume_f_sub, rep.integrals.volume_f_sub);
        out["mc"]["volume_f_top"] = corroborate(mc.volume_f_top, rep.integrals.volume_f_top);
        const double a = rep.a.convert_to<double>();
        const double df = (mc.boundary_f_top.value + 2 * mc.volume_f_sub.value - a * mc.volume_f_top.value) /
                          (2 * mc.volume.value);
        out["mc"]["df_general_estimate"] = format_double(df);
    }
    return out;
}

bool is_exact_leaf(const Json& j) { return j.is_object() && j.contains("exact") && j.contains("decimal"); }

std::string join(const Json& arr) {
    std::string s = "(";
    for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].get<std::string>();
    return s + ")";
}

void flatten(const Json& j, const std::string& key, std::ostringstream& out) {
    if (is_exact_leaf(j)) {
        if (j["exact"].is_array())
            out << key << " = " << join(j["exact"]) << " (~" << join(j["decimal"]) << ")\n";
        else
            out << key << " = " << j["exact"].get<std::string>() << " (~" << j["decimal"].get<std::string>() << ")\n";
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, key.empty() ? k : key + "." + k, out);
    } else if (j.is_array()) {
        if (j.empty()) out << key << " = []\n";
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out << key << " = " << j.get<std::string>() << "\n";
    } else {
        out << key << " = " << j.dump() << "\n";
    }
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"validate", "fano", "identities", "volume", "barycenter", "df"};
    return names;
}

Json run_command(const std::string& command, const Instance& instance, const RunOptions& options) {
    if (command == "validate") return cmd_validate(instance);
    if (command == "fano") return cmd_fano(instance);
    if (command == "identities") return cmd_identities(instance);
    if (command == "volume") return cmd_volume(instance, options);
    if (command == "barycenter") return cmd_barycenter(instance, options);
    if (command == "df") return cmd_df(instance, options);
    throw Error(ErrorCode::ParseError, "command: unknown subcommand '" + command + "'");
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    for (const auto& [k, v] : report.items()) {
        if (k == "instance")
            out << k << " = " << v.dump() << "\n";
        else
            flatten(v, k, out);
    }
    return out.str();
}

std::string render(const Json& report, OutputFormat format) {
    return format == OutputFormat::json ? report.dump(2) + "\n" : render_text(report);
}

int exit_code_for(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        if (err->code() == ErrorCode::ParseError || err->code() == ErrorCode::ValidationError) return 1;
    }
    return 2;
}

}  // namespace dfinv
