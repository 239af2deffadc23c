#pragma once

#include "dfinv/lattice.hpp"
#include "dfinv/pl_function.hpp"
#include "dfinv/polytope.hpp"
#include "dfinv/root_system.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dfinv {

struct InstanceOptions {
    std::uint64_t mc_samples = 1000000;
    std::uint64_t seed = 1;
    bool allow_non_invariant_f = false;
};

/**
 * A parsed and validated instance file, held in lattice coordinates.
 *
 * Explicit root systems may carry a `lattice_basis` (columns spanning M in
 * the file's coordinates); all data is converted through it on load.
 */
struct Instance {
    std::optional<std::string> preset;  // set when root_system was a preset name
    RootSystem root_system;
    HPolytope polytope;
    std::optional<PLFunction> function;
    InstanceOptions options;
    std::vector<std::string> warnings;
};

/// Reads and validates. Throws ParseError (malformed input) or ValidationError
/// (an invariant fails); both messages start with the offending field.
Instance parse_instance(const nlohmann::json& doc, bool allow_non_invariant_f_override = false);
Instance load_instance(const std::string& path, bool allow_non_invariant_f_override = false);

/// Canonical form (lattice coordinates, primitive normals, fixed key order).
nlohmann::ordered_json to_json(const Instance& instance);

nlohmann::ordered_json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& value, const std::string& field);

}  // namespace dfinv
