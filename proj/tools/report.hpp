#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace frobhh::cli {

struct RunConfig {
    std::string command;
    std::string input;
    std::string constructor;
    std::int64_t p = 13;
    std::optional<std::int64_t> w;
    std::uint64_t seed = 1;
    std::size_t max_degree = 3;
    bool max_degree_given = false;
    bool normalized = true;
    double density_threshold = 0.2;
    std::size_t form_attempts = 64;
    bool timings = false;
};

struct Outcome {
    nlohmann::json report;
    bool pass = false;
};

// Runs one subcommand. Library failures propagate as frobhh::Error.
Outcome run(const RunConfig& cfg);

// Two-column rendering of a report: dotted path and value.
std::string render_table(const nlohmann::json& report);

}  // namespace frobhh::cli
