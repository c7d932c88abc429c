#pragma once

// Table and report rendering: edge-split sweeps (analytic or Monte Carlo),
// the reproduction check against the published reference figures, and the
// text/json/csv renderers used by the CLI. Savings are fractions everywhere
// in memory and become percentages only in text output.

#include <cstdint>
#include <string>
#include <vector>

#include "hecsim/model.hpp"
#include "hecsim/simulation.hpp"
#include "hecsim/workload.hpp"

namespace hecsim {

enum class SweepSource : std::uint8_t { analytic, monte_carlo };
enum class OutputFormat : std::uint8_t { text, json, csv };

struct SweepRow {
    double p_edge{0.0};
    double energy_hec_kwh{0.0};
    double cost_hec_usd{0.0};
    double energy_savings{0.0};
    double cost_savings{0.0};
    SweepSource source{SweepSource::analytic};
};

// Evaluate the scenario at each split, all other parameters fixed. Monte
// Carlo rows run a full fleet per split on a per-split derived seed.
std::vector<SweepRow> sweep_edge_split(const Scenario& base, const std::vector<double>& splits,
                                       SweepSource source, const RunOptions& options = {});

// Inclusive range {from, from + step, ...} clipped to [0, 1]; throws on a
// malformed range.
std::vector<double> split_range(double from, double to, double step);

// csv: fixed header + 4-decimal values; json: array of objects with the csv
// keys; text: aligned table with savings as percentages.
std::string render_table(const std::vector<SweepRow>& rows, OutputFormat format);

enum class ValueKind : std::uint8_t { energy_kwh, cost_usd, fraction };

// One computed-versus-published comparison. `citation` quotes the reference
// verbatim; `known_erratum` marks published figures that are inconsistent
// with the stated model itself and are expected not to match.
struct ReproductionEntry {
    std::string label;
    ValueKind kind{ValueKind::fraction};
    double computed{0.0};
    double reported{0.0};
    std::string reported_text;
    std::string citation;
    double tolerance{0.0};
    bool matched{false};
    bool known_erratum{false};
    std::string note;
};

struct ReproductionReport {
    std::vector<ReproductionEntry> entries;

    // True when every entry either matches or is a documented erratum.
    bool all_matched_or_erratum() const;
};

// Runs the built-in default scenarios and checks every prose-stated
// reference figure. Deterministic; repeated calls yield identical reports.
ReproductionReport reproduce_results();

std::string render_reproduction(const ReproductionReport& report, OutputFormat format);
std::string render_analytic(const Scenario& scenario, const AnalyticResult& result, OutputFormat format);
std::string render_fleet(const Scenario& scenario, const FleetAggregate& agg, const DeviationReport& deviation,
                         OutputFormat format);
std::string render_dist_check(const DistCheckResult& result, OutputFormat format);

}  // namespace hecsim
