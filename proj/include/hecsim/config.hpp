#pragma once

// Scenario configuration. A config file is a JSON document with sections
// profile / energy / cost / pareto / split / sim; every field is optional
// and falls back to the built-in defaults. Unknown keys are rejected by
// name. Precedence when building a scenario: command-line overrides beat the
// config file, which beats the defaults.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "hecsim/simulation.hpp"

namespace hecsim {

// Defaults: agentic profile (20 GB/day), published per-GB rates, 80% edge
// split, alpha 2, x_min 1 GB, 365 tasks/device, 10,000 devices, seed 42.
Scenario default_scenario();

// Sparse scenario edits, typically collected from command-line flags.
struct ScenarioOverrides {
    std::optional<std::string> profile_label;
    std::optional<double> daily_gb;
    std::optional<double> e_transmit;
    std::optional<double> e_cloud;
    std::optional<double> e_local;
    std::optional<double> c_bandwidth;
    std::optional<double> c_hosting;
    std::optional<double> c_software;
    std::optional<double> alpha;
    std::optional<double> x_min;
    std::optional<double> p_edge;
    std::optional<std::uint64_t> n_tasks;
    std::optional<std::uint64_t> n_devices;
    std::optional<std::uint64_t> master_seed;
};

// Defaults overlaid with the (strictly validated) JSON document.
Scenario scenario_from_json(const nlohmann::json& doc);

// Reads and parses a config file, then applies it over the defaults.
Scenario load_scenario(const std::filesystem::path& config_path);

// Applies sparse overrides on top of an existing scenario; the result is
// re-validated as a whole.
Scenario apply_overrides(const Scenario& base, const ScenarioOverrides& overrides);

// Full config-shaped document for the scenario. Values round-trip through
// scenario_from_json unchanged.
nlohmann::json scenario_to_json(const Scenario& scenario);

}  // namespace hecsim
