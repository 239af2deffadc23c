#include "dfinv/instance.hpp"

#include "dfinv/error.hpp"

#include <fstream>
#include <sstream>

namespace dfinv {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ParseError, field + ": " + what);
}

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ValidationError, field + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& field) {
    if (!obj.is_object() || !obj.contains(key)) parse_fail(field, std::string("missing key '") + key + "'");
    return obj.at(key);
}

VectorQ vector_from_json(const json& value, const std::string& field) {
    if (!value.is_array()) parse_fail(field, "expected an array");
    VectorQ v(static_cast<Eigen::Index>(value.size()));
    for (std::size_t i = 0; i < value.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = rational_from_json(value[i], field + "[" + std::to_string(i) + "]");
    return v;
}

std::vector<VectorQ> vectors_from_json(const json& value, const std::string& field, Eigen::Index n) {
    if (!value.is_array()) parse_fail(field, "expected an array of vectors");
    std::vector<VectorQ> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string sub = field + "[" + std::to_string(i) + "]";
        out.push_back(vector_from_json(value[i], sub));
        if (n >= 0 && out.back().size() != n)
            invalid(sub, "length " + std::to_string(out.back().size()) + " differs from n = " + std::to_string(n));
    }
    return out;
}

MatrixQ matrix_from_json(const json& value, const std::string& field) {
    const auto rows = vectors_from_json(value, field, -1);
    if (rows.empty()) parse_fail(field, "empty matrix");
    MatrixQ m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) parse_fail(field, "ragged matrix");
        m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    return m;
}

nlohmann::ordered_json vector_json(const VectorQ& v) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

/// Runs a library constructor and reports its failure against `field`.
template <typename F>
auto validated(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) throw;
        invalid(field, e.what());
    }
}

std::uint64_t unsigned_from_json(const json& v, const std::string& field) {
    if (!v.is_number_unsigned()) parse_fail(field, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

Rational rational_from_json(const json& value, const std::string& field) {
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Rational(Integer(value.get<std::uint64_t>()))
                                          : Rational(Integer(value.get<std::int64_t>()));
    }
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const Error&) {
            parse_fail(field, "'" + value.get<std::string>() + "' is not of the form p or p/q with q > 0");
        }
    }
    parse_fail(field, "expected an integer or a \"p/q\" string (floating point is not accepted)");
}

nlohmann::ordered_json rational_json(const Rational& q) { return to_string(q); }

Instance parse_instance(const json& doc, bool allow_override) {
    if (!doc.is_object()) parse_fail("<root>", "instance must be a JSON object");
    std::vector<std::string> warnings;

    // root_system
    const json& rs_json = require(doc, "root_system", "root_system");
    std::optional<std::string> preset;
    std::optional<LatticeBasis> lattice;
    RootSystem rs = [&] {
        if (rs_json.is_string()) {
            preset = rs_json.get<std::string>();
            return validated("root_system", [&] { return RootSystem::preset(*preset); });
        }
        if (!rs_json.is_object()) parse_fail("root_system", "expected a preset name or {gram, positive_roots}");
        MatrixQ gram = matrix_from_json(require(rs_json, "gram", "root_system"), "root_system.gram");
        const Eigen::Index n = gram.rows();
        auto roots = vectors_from_json(require(rs_json, "positive_roots", "root_system"), "root_system.positive_roots", n);
        if (rs_json.contains("lattice_basis")) {
            lattice = validated("root_system.lattice_basis", [&] {
                return LatticeBasis(matrix_from_json(rs_json.at("lattice_basis"), "root_system.lattice_basis"));
            });
            if (lattice->basis().rows() != n) invalid("root_system.lattice_basis", "size differs from gram");
            gram = lattice->gram(gram);
            for (auto& a : roots) a = lattice->point(a);
        }
        return validated("root_system", [&] { return RootSystem::from_data(gram, roots); });
    }();
    const Eigen::Index n = rs.dimension();
    if (!lattice) lattice = LatticeBasis::standard(n);

    // polytope
    const json& poly_json = require(doc, "polytope", "polytope");
    HPolytope polytope = [&] {
        if (poly_json.contains("h_rep")) {
            const json& h = poly_json.at("h_rep");
            const auto normals = vectors_from_json(require(h, "normals", "polytope.h_rep"), "polytope.h_rep.normals", n);
            const auto offsets = vector_from_json(require(h, "offsets", "polytope.h_rep"), "polytope.h_rep.offsets");
            if (static_cast<std::size_t>(offsets.size()) != normals.size())
                invalid("polytope.h_rep.offsets", "count differs from the number of normals");
            std::vector<Constraint> cs;
            for (std::size_t i = 0; i < normals.size(); ++i) {
                const std::string field = "polytope.h_rep.normals[" + std::to_string(i) + "]";
                const Constraint raw{normals[i], offsets(static_cast<Eigen::Index>(i))};
                const Constraint c = validated(field, [&] { return lattice->constraint(raw); });
                const Constraint given = validated(field, [&] { return Constraint::normalized(raw.normal, raw.offset); });
                if (!(given == raw))
                    warnings.push_back(field + ": normal " + to_string(raw.normal) + " is not primitive; normalized to " +
                                       to_string(given.normal) + " with offset " + to_string(given.offset));
                cs.push_back(c);
            }
            return HPolytope(n, std::move(cs));
        }
        if (poly_json.contains("v_rep")) {
            auto verts = vectors_from_json(require(poly_json.at("v_rep"), "vertices", "polytope.v_rep"),
                                           "polytope.v_rep.vertices", n);
            for (auto& v : verts) v = lattice->point(v);
            return validated("polytope.v_rep", [&] { return hull(VPolytope{std::move(verts)}); });
        }
        parse_fail("polytope", "expected h_rep or v_rep");
    }();
    const VPolytope verts = validated("polytope", [&] { return vertices(polytope); });
    const WeylGroup w = validated("root_system", [&] { return weyl_group(rs); });
    if (!validated("polytope", [&] { return is_weyl_invariant(polytope, w); }))
        invalid("polytope", "P is not invariant under the Weyl group");

    // options
    InstanceOptions options;
    if (doc.contains("options")) {
        const json& o = doc.at("options");
        if (!o.is_object()) parse_fail("options", "expected an object");
        if (o.contains("mc_samples")) options.mc_samples = unsigned_from_json(o.at("mc_samples"), "options.mc_samples");
        if (o.contains("seed")) options.seed = unsigned_from_json(o.at("seed"), "options.seed");
        if (o.contains("allow_non_invariant_f")) {
            if (!o.at("allow_non_invariant_f").is_boolean()) parse_fail("options.allow_non_invariant_f", "expected a boolean");
            options.allow_non_invariant_f = o.at("allow_non_invariant_f").get<bool>();
        }
        if (options.mc_samples == 0) invalid("options.mc_samples", "must be at least 1");
    }
    options.allow_non_invariant_f = options.allow_non_invariant_f || allow_override;

    // function
    std::optional<PLFunction> function;
    if (doc.contains("function") && !doc.at("function").is_null()) {
        const json& pieces_json = require(doc.at("function"), "pieces", "function");
        if (!pieces_json.is_array()) parse_fail("function.pieces", "expected an array");
        std::vector<AffinePiece> pieces;
        for (std::size_t i = 0; i < pieces_json.size(); ++i) {
            const std::string field = "function.pieces[" + std::to_string(i) + "]";
            VectorQ b = vector_from_json(require(pieces_json[i], "b", field), field + ".b");
            if (b.size() != n) invalid(field + ".b", "length differs from n = " + std::to_string(n));
            pieces.push_back({lattice->covector(b), rational_from_json(require(pieces_json[i], "k", field), field + ".k")});
        }
        function = validated("function", [&] { return PLFunction(std::move(pieces)); });
        if (!options.allow_non_invariant_f && !pl_is_weyl_invariant(*function, polytope, w))
            invalid("function", "f is not W-invariant on P (use --allow-non-invariant-f to proceed)");
    }

    (void)verts;
    return Instance{preset, std::move(rs), std::move(polytope), std::move(function), options, std::move(warnings)};
}

Instance load_instance(const std::string& path, bool allow_override) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "--input: cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "<root>: " + std::string(e.what()));
    }
    return parse_instance(doc, allow_override);
}

nlohmann::ordered_json to_json(const Instance& instance) {
    nlohmann::ordered_json out;
    const RootSystem& rs = instance.root_system;
    if (instance.preset) {
        out["root_system"] = *instance.preset;
    } else {
        nlohmann::ordered_json r;
        r["gram"] = nlohmann::ordered_json::array();
        for (Eigen::Index i = 0; i < rs.gram().rows(); ++i) r["gram"].push_back(vector_json(rs.gram().row(i).transpose()));
        r["positive_roots"] = nlohmann::ordered_json::array();
        for (const auto& a : rs.positive_roots()) r["positive_roots"].push_back(vector_json(a));
        out["root_system"] = r;
    }
    nlohmann::ordered_json h;
    h["normals"] = nlohmann::ordered_json::array();
    h["offsets"] = nlohmann::ordered_json::array();
    for (const auto& c : instance.polytope.constraints()) {
        h["normals"].push_back(vector_json(c.normal));
        h["offsets"].push_back(to_string(c.offset));
    }
    out["polytope"]["h_rep"] = h;
    if (instance.function) {
        nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
        for (const auto& p : instance.function->pieces()) {
            nlohmann::ordered_json piece;
            piece["b"] = vector_json(p.slope);
            piece["k"] = to_string(p.constant);
            pieces.push_back(piece);
        }
        out["function"]["pieces"] = pieces;
    }
    out["options"]["mc_samples"] = instance.options.mc_samples;
    out["options"]["seed"] = instance.options.seed;
    out["options"]["allow_non_invariant_f"] = instance.options.allow_non_invariant_f;
    return out;
}

}  // namespace dfinv
