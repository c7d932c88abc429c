#include "hecsim/config.hpp"

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <utility>

namespace hecsim {

namespace {

using nlohmann::json;

// Raw scenario fields before any validating constructor runs. Starting from
// the defaults lets the JSON document and CLI overrides stay sparse.
struct RawScenario {
    std::optional<std::string> profile_label;
    std::optional<double> daily_gb;
    double e_transmit;
    double e_cloud;
    double e_local;
    double c_bandwidth;
    double c_hosting;
    double c_software;
    double alpha;
    double x_min;
    double p_edge;
    std::size_t n_tasks;
    std::size_t n_devices;
    std::uint64_t master_seed;
};

RawScenario raw_from(const Scenario& s) {
    RawScenario raw;
    raw.e_transmit = s.energy.e_transmit.value;
    raw.e_cloud = s.energy.e_cloud.value;
    raw.e_local = s.energy.e_local.value;
    raw.c_bandwidth = s.cost.c_bandwidth.value;
    raw.c_hosting = s.cost.c_hosting.value;
    raw.c_software = s.cost.c_software.value;
    raw.alpha = s.pareto.alpha();
    raw.x_min = s.pareto.x_min();
    raw.p_edge = s.split.p_edge();
    raw.n_tasks = s.n_tasks;
    raw.n_devices = s.n_devices;
    raw.master_seed = s.master_seed;
    return raw;
}

// Label alone selects a preset; a daily volume alone defines a custom
// profile; both together name a custom profile explicitly.
WorkloadProfile resolve_profile(const std::optional<std::string>& label,
                                const std::optional<double>& daily_gb,
                                const WorkloadProfile& fallback) {
    if (!label && !daily_gb) return fallback;
    if (label && !daily_gb) {
        if (*label == "traditional") return WorkloadProfile::traditional();
        if (*label == "agentic") return WorkloadProfile::agentic();
        throw std::invalid_argument("unknown workload profile \"" + *label +
                                    "\"; presets are \"traditional\" and \"agentic\" "
                                    "(set daily_gb to define a custom profile)");
    }
    return WorkloadProfile(label ? *label : std::string("custom"), *daily_gb);
}

Scenario build_scenario(const RawScenario& raw, const WorkloadProfile& fallback_profile) {
    Scenario s{
        resolve_profile(raw.profile_label, raw.daily_gb, fallback_profile),
        EnergyParams(raw.e_transmit, raw.e_cloud, raw.e_local),
        CostParams(raw.c_bandwidth, raw.c_hosting, raw.c_software),
        SplitPolicy(raw.p_edge),
        ParetoParams(raw.alpha, raw.x_min),
        raw.n_tasks,
        raw.n_devices,
        raw.master_seed,
    };
    s.validate();
    return s;
}

[[noreturn]] void fail_key(const std::string& where, const std::string& what) {
    throw std::invalid_argument("config: " + where + " " + what);
}

const json& expect_object(const json& doc, const std::string& name) {
    if (!doc.is_object()) fail_key(name, "must be an object");
    return doc;
}

void reject_unknown_keys(const json& section, const std::string& section_name,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : section.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail_key(section_name.empty() ? ("\"" + item.key() + "\"")
                                          : ("\"" + section_name + "." + item.key() + "\""),
                     "is not a recognized key");
        }
    }
}

void read_number(const json& section, const std::string& section_name, const char* key,
                 double& out) {
    auto it = section.find(key);
    if (it == section.end()) return;
    if (!it->is_number()) fail_key("\"" + section_name + "." + key + "\"", "must be a number");
    out = it->get<double>();
}

void read_count(const json& section, const std::string& section_name, const char* key,
                std::uint64_t& out) {
    auto it = section.find(key);
    if (it == section.end()) return;
    if (!it->is_number_unsigned()) {
        fail_key("\"" + section_name + "." + key + "\"", "must be a non-negative integer");
    }
    out = it->get<std::uint64_t>();
}

void read_string(const json& section, const std::string& section_name, const char* key,
                 std::optional<std::string>& out) {
    auto it = section.find(key);
    if (it == section.end()) return;
    if (!it->is_string()) fail_key("\"" + section_name + "." + key + "\"", "must be a string");
    out = it->get<std::string>();
}

void read_optional_number(const json& section, const std::string& section_name, const char* key,
                          std::optional<double>& out) {
    auto it = section.find(key);
    if (it == section.end()) return;
    if (!it->is_number()) fail_key("\"" + section_name + "." + key + "\"", "must be a number");
    out = it->get<double>();
}

}  // namespace

Scenario default_scenario() {
    return Scenario{
        WorkloadProfile::agentic(), EnergyParams::defaults(), CostParams::defaults(),
        SplitPolicy(0.8),           ParetoParams(2.0, 1.0),
    };
}

Scenario scenario_from_json(const nlohmann::json& doc) {
    expect_object(doc, "document");
    reject_unknown_keys(doc, "", {"profile", "energy", "cost", "pareto", "split", "sim"});

    const Scenario defaults = default_scenario();
    RawScenario raw = raw_from(defaults);

    if (auto it = doc.find("profile"); it != doc.end()) {
        const json& sec = expect_object(*it, "\"profile\"");
        reject_unknown_keys(sec, "profile", {"label", "daily_gb"});
        read_string(sec, "profile", "label", raw.profile_label);
        read_optional_number(sec, "profile", "daily_gb", raw.daily_gb);
    }
    if (auto it = doc.find("energy"); it != doc.end()) {
        const json& sec = expect_object(*it, "\"energy\"");
        reject_unknown_keys(sec, "energy", {"e_transmit", "e_cloud", "e_local"});
        read_number(sec, "energy", "e_transmit", raw.e_transmit);
        read_number(sec, "energy", "e_cloud", raw.e_cloud);
        read_number(sec, "energy", "e_local", raw.e_local);
    }
    if (auto it = doc.find("cost"); it != doc.end()) {
        const json& sec = expect_object(*it, "\"cost\"");
        reject_unknown_keys(sec, "cost", {"c_bandwidth", "c_hosting", "c_software"});
        read_number(sec, "cost", "c_bandwidth", raw.c_bandwidth);
        read_number(sec, "cost", "c_hosting", raw.c_hosting);
        read_number(sec, "cost", "c_software", raw.c_software);
    }
    if (auto it = doc.find("pareto"); it != doc.end()) {
        const json& sec = expect_object(*it, "\"pareto\"");
        reject_unknown_keys(sec, "pareto", {"alpha", "x_min"});
        read_number(sec, "pareto", "alpha", raw.alpha);
        read_number(sec, "pareto", "x_min", raw.x_min);
    }
    if (auto it = doc.find("split"); it != doc.end()) {
        const json& sec = expect_object(*it, "\"split\"");
        reject_unknown_keys(sec, "split", {"p_edge"});
        read_number(sec, "split", "p_edge", raw.p_edge);
    }
    if (auto it = doc.find("sim"); it != doc.end()) {
        const json& sec = expect_object(*it, "\"sim\"");
        reject_unknown_keys(sec, "sim", {"n_tasks", "n_devices", "master_seed"});
        std::uint64_t n_tasks = raw.n_tasks;
        std::uint64_t n_devices = raw.n_devices;
        read_count(sec, "sim", "n_tasks", n_tasks);
        read_count(sec, "sim", "n_devices", n_devices);
        read_count(sec, "sim", "master_seed", raw.master_seed);
        raw.n_tasks = static_cast<std::size_t>(n_tasks);
        raw.n_devices = static_cast<std::size_t>(n_devices);
    }

    return build_scenario(raw, defaults.profile);
}

Scenario load_scenario(const std::filesystem::path& config_path) {
    std::ifstream in(config_path);
    if (!in) {
        throw std::invalid_argument("config: cannot open \"" + config_path.string() + "\"");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("config: \"" + config_path.string() +
                                    "\" is not valid JSON: " + err.what());
    }
    return scenario_from_json(doc);
}

Scenario apply_overrides(const Scenario& base, const ScenarioOverrides& overrides) {
    RawScenario raw = raw_from(base);
    raw.profile_label = overrides.profile_label;
    raw.daily_gb = overrides.daily_gb;
    if (overrides.e_transmit) raw.e_transmit = *overrides.e_transmit;
    if (overrides.e_cloud) raw.e_cloud = *overrides.e_cloud;
    if (overrides.e_local) raw.e_local = *overrides.e_local;
    if (overrides.c_bandwidth) raw.c_bandwidth = *overrides.c_bandwidth;
    if (overrides.c_hosting) raw.c_hosting = *overrides.c_hosting;
    if (overrides.c_software) raw.c_software = *overrides.c_software;
    if (overrides.alpha) raw.alpha = *overrides.alpha;
    if (overrides.x_min) raw.x_min = *overrides.x_min;
    if (overrides.p_edge) raw.p_edge = *overrides.p_edge;
    if (overrides.n_tasks) raw.n_tasks = static_cast<std::size_t>(*overrides.n_tasks);
    if (overrides.n_devices) raw.n_devices = static_cast<std::size_t>(*overrides.n_devices);
    if (overrides.master_seed) raw.master_seed = *overrides.master_seed;

    Scenario merged = build_scenario(raw, base.profile);
    merged.allocation = base.allocation;
    return merged;
}

nlohmann::json scenario_to_json(const Scenario& scenario) {
    return json{
        {"profile",
         {{"label", scenario.profile.label()}, {"daily_gb", scenario.profile.daily_gb().value}}},
        {"energy",
         {{"e_transmit", scenario.energy.e_transmit.value},
          {"e_cloud", scenario.energy.e_cloud.value},
          {"e_local", scenario.energy.e_local.value}}},
        {"cost",
         {{"c_bandwidth", scenario.cost.c_bandwidth.value},
          {"c_hosting", scenario.cost.c_hosting.value},
          {"c_software", scenario.cost.c_software.value}}},
        {"pareto", {{"alpha", scenario.pareto.alpha()}, {"x_min", scenario.pareto.x_min()}}},
        {"split", {{"p_edge", scenario.split.p_edge()}}},
        {"sim",
         {{"n_tasks", scenario.n_tasks},
          {"n_devices", scenario.n_devices},
          {"master_seed", scenario.master_seed}}},
    };
}

}  // namespace hecsim
