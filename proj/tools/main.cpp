// hecsim: energy and cost model for hybrid edge cloud versus centralized
// cloud. Subcommands cover the closed-form model (analytic), the Monte Carlo
// fleet (simulate), edge-split sweeps (sweep), the Pareto sampler self-test
// (dist-check) and the check against published reference figures (reproduce).
//
// Exit codes: 0 success, 1 usage or configuration error, 2 reproduction
// mismatch that is not a documented erratum, 3 failed dist-check.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hecsim/config.hpp"
#include "hecsim/model.hpp"
#include "hecsim/reporting.hpp"
#include "hecsim/simulation.hpp"
#include "hecsim/workload.hpp"

namespace {

struct GlobalArgs {
    std::string config_path;
    std::string format_name = "text";
    std::string out_path;
    hecsim::ScenarioOverrides overrides;
};

hecsim::Scenario make_scenario(const GlobalArgs& args) {
    hecsim::Scenario base = args.config_path.empty() ? hecsim::default_scenario()
                                                     : hecsim::load_scenario(args.config_path);
    return hecsim::apply_overrides(base, args.overrides);
}

hecsim::OutputFormat parse_format(const std::string& name) {
    if (name == "text") return hecsim::OutputFormat::text;
    if (name == "json") return hecsim::OutputFormat::json;
    if (name == "csv") return hecsim::OutputFormat::csv;
    throw std::invalid_argument("unknown format \"" + name + "\"");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file \"" + out_path + "\"");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid edge cloud energy and cost model"};
    app.require_subcommand(1);

    GlobalArgs args;
    app.add_option("--config", args.config_path, "JSON scenario file")
        ->check(CLI::ExistingFile);
    app.add_option("--format", args.format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", args.out_path, "write the report to a file instead of stdout");
    app.add_option("--seed", args.overrides.master_seed, "master RNG seed");

    auto& ov = args.overrides;
    app.add_option("--profile", ov.profile_label,
                   "workload profile: traditional, agentic, or a custom label with --daily-gb");
    app.add_option("--daily-gb", ov.daily_gb, "daily data volume per device (GB)");
    app.add_option("--p-edge", ov.p_edge, "probability a task is processed on the device");
    app.add_option("--alpha", ov.alpha, "Pareto shape parameter (> 1)");
    app.add_option("--x-min", ov.x_min, "Pareto minimum task size (GB)");
    app.add_option("--n-tasks", ov.n_tasks, "tasks per device per year");
    app.add_option("--n-devices", ov.n_devices, "devices in the simulated fleet");
    app.add_option("--e-transmit", ov.e_transmit, "transmission energy (kWh/GB)");
    app.add_option("--e-cloud", ov.e_cloud, "cloud processing energy (kWh/GB)");
    app.add_option("--e-local", ov.e_local, "device processing energy (kWh/GB)");
    app.add_option("--c-bandwidth", ov.c_bandwidth, "bandwidth cost (USD/GB)");
    app.add_option("--c-hosting", ov.c_hosting, "hosting cost (USD/GB)");
    app.add_option("--c-software", ov.c_software, "device software licensing cost (USD/GB)");

    CLI::App* analytic_cmd =
        app.add_subcommand("analytic", "closed-form energy and cost report");
    analytic_cmd->fallthrough();

    unsigned n_threads = 1;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo fleet run with deviation from the analytic model");
    simulate_cmd->fallthrough();
    simulate_cmd->add_option("--threads", n_threads, "worker threads (result is identical for any count)")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    double sweep_from = 0.5;
    double sweep_to = 0.9;
    double sweep_step = 0.1;
    std::string sweep_source = "analytic";
    unsigned sweep_threads = 1;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate a range of edge splits");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--from", sweep_from, "first edge split")->capture_default_str();
    sweep_cmd->add_option("--to", sweep_to, "last edge split (inclusive)")->capture_default_str();
    sweep_cmd->add_option("--step", sweep_step, "split increment")->capture_default_str();
    sweep_cmd->add_option("--source", sweep_source, "row source")
        ->check(CLI::IsMember({"analytic", "monte_carlo", "both"}))
        ->capture_default_str();
    sweep_cmd->add_option("--threads", sweep_threads, "worker threads for Monte Carlo rows")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    std::size_t dist_samples = 100000;
    CLI::App* dist_cmd = app.add_subcommand("dist-check", "Pareto sampler self-test");
    dist_cmd->fallthrough();
    dist_cmd->add_option("--samples", dist_samples, "sample count (>= 1000)")
        ->capture_default_str();

    CLI::App* reproduce_cmd =
        app.add_subcommand("reproduce", "compare the model against the published figures");
    reproduce_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const hecsim::OutputFormat format = parse_format(args.format_name);

        if (*analytic_cmd) {
            const hecsim::Scenario s = make_scenario(args);
            const hecsim::AnalyticResult result =
                hecsim::analytic_scenario(s.profile, s.energy, s.cost, s.split);
            emit(hecsim::render_analytic(s, result, format), args.out_path);
            return 0;
        }

        if (*simulate_cmd) {
            const hecsim::Scenario s = make_scenario(args);
            const hecsim::FleetAggregate agg = hecsim::run_fleet(s, {n_threads});
            const hecsim::AnalyticResult expected =
                hecsim::analytic_scenario(s.profile, s.energy, s.cost, s.split);
            const hecsim::DeviationReport dev = hecsim::compare_with_analytic(agg, expected);
            emit(hecsim::render_fleet(s, agg, dev, format), args.out_path);
            return 0;
        }

        if (*sweep_cmd) {
            const hecsim::Scenario s = make_scenario(args);
            const std::vector<double> splits =
                hecsim::split_range(sweep_from, sweep_to, sweep_step);
            std::vector<hecsim::SweepRow> rows;
            if (sweep_source == "analytic" || sweep_source == "both") {
                rows = hecsim::sweep_edge_split(s, splits, hecsim::SweepSource::analytic);
            }
            if (sweep_source == "monte_carlo" || sweep_source == "both") {
                const std::vector<hecsim::SweepRow> mc = hecsim::sweep_edge_split(
                    s, splits, hecsim::SweepSource::monte_carlo, {sweep_threads});
                if (rows.empty()) {
                    rows = mc;
                } else {
                    // Interleave so each split shows its analytic row directly
                    // above the Monte Carlo row.
                    std::vector<hecsim::SweepRow> merged;
                    merged.reserve(rows.size() * 2);
                    for (std::size_t i = 0; i < rows.size(); ++i) {
                        merged.push_back(rows[i]);
                        merged.push_back(mc[i]);
                    }
                    rows = std::move(merged);
                }
            }
            emit(hecsim::render_table(rows, format), args.out_path);
            return 0;
        }

        if (*dist_cmd) {
            const hecsim::Scenario s = make_scenario(args);
            const hecsim::DistCheckResult result =
                hecsim::run_dist_check(s.pareto, dist_samples, s.master_seed);
            emit(hecsim::render_dist_check(result, format), args.out_path);
            return result.passed ? 0 : 3;
        }

        if (*reproduce_cmd) {
            const hecsim::ReproductionReport report = hecsim::reproduce_results();
            emit(hecsim::render_reproduction(report, format), args.out_path);
            return report.all_matched_or_erratum() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    return 0;
}
