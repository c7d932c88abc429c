#pragma once

// Monte Carlo fleet simulation. Each device samples task sizes from the
// Pareto distribution, rescales them to the profile's annual volume, assigns
// tasks to edge or cloud, and prices the realized split with the closed-form
// model. Devices are independent; device i draws from substream
// (master_seed, i), so the fleet result is identical for any worker count.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hecsim/model.hpp"
#include "hecsim/workload.hpp"

namespace hecsim {

// Per-task Bernoulli labeling is the default; deterministic_volume skips the
// assignment randomness and splits the annual volume exactly at p_edge.
enum class AllocationMode : std::uint8_t { bernoulli_tasks, deterministic_volume };

// Complete simulation input.
struct Scenario {
    WorkloadProfile profile;
    EnergyParams energy;
    CostParams cost;
    SplitPolicy split;
    ParetoParams pareto;
    std::size_t n_tasks{365};
    std::size_t n_devices{10000};
    std::uint64_t master_seed{42};
    AllocationMode allocation{AllocationMode::bernoulli_tasks};

    // Throws unless n_tasks >= 1 and n_devices >= 1.
    void validate() const;
};

struct DeviceResult {
    Gigabytes d_edge;
    Gigabytes d_cloud;
    KilowattHours energy_hec;
    UsDollars cost_hec;
    double realized_edge_fraction{0.0};
};

// Single-pass mean/variance accumulator (Welford); merge() combines two
// disjoint accumulations exactly as if the right-hand values were appended.
class RunningStats {
public:
    void add(double x);
    void merge(const RunningStats& other);

    std::size_t count() const { return count_; }
    double mean() const { return mean_; }
    // Sample standard deviation; zero for fewer than two values.
    double stddev() const;
    // Half-width of the normal-approximation 95% interval.
    double ci95_half_width() const;

private:
    std::size_t count_{0};
    double mean_{0.0};
    double m2_{0.0};
};

struct StatSummary {
    double mean{0.0};
    double stddev{0.0};
    double ci95_half_width{0.0};
};

struct FleetAggregate {
    std::size_t n_devices{0};
    StatSummary energy_hec_kwh;
    StatSummary cost_hec_usd;
    StatSummary realized_edge_fraction;
    KilowattHours energy_cloud_only;  // deterministic baseline, D_T fixed by normalization
    UsDollars cost_cloud_only;
    double energy_savings_mean{0.0};  // 1 - mean(hec) / cloud baseline
    double cost_savings_mean{0.0};
};

struct RunOptions {
    unsigned n_workers{1};
};

// One device's realized year. Deterministic in (scenario, device_index).
DeviceResult simulate_device(const Scenario& scenario, std::size_t device_index);

// Aggregates n_devices independent device results. The reduction runs over
// fixed-size chunks merged in index order, so the result is bit-identical
// for any n_workers.
FleetAggregate run_fleet(const Scenario& scenario, const RunOptions& options = {});

struct Deviation {
    std::string quantity;
    double simulated{0.0};
    double analytic{0.0};
    double absolute{0.0};
    double relative{0.0};
    bool within_ci{false};
};

struct DeviationReport {
    std::vector<Deviation> entries;
};

// Monte Carlo means versus the analytic expectations for the same scenario.
DeviationReport compare_with_analytic(const FleetAggregate& agg, const AnalyticResult& ar);

}  // namespace hecsim
