#pragma once

#include "dfinv/instance.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dfinv {

enum class OutputFormat { text, json };

struct RunOptions {
    bool mc_check = false;
    std::optional<std::uint64_t> seed;  // overrides options.seed of the instance
};

/// validate, fano, identities, volume, barycenter, df
const std::vector<std::string>& command_names();

/// Runs one subcommand. Exact quantities appear as {"exact": "p/q", "decimal": "..."}.
nlohmann::ordered_json run_command(const std::string& command, const Instance& instance, const RunOptions& options = {});

/// One `key = value` line per leaf; nested keys are joined with dots.
std::string render_text(const nlohmann::ordered_json& report);

std::string render(const nlohmann::ordered_json& report, OutputFormat format);

/// Exit status for an error: 1 for parse and validation failures, 2 otherwise.
int exit_code_for(const std::exception& e);

}  // namespace dfinv
