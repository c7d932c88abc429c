#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "hecsim/model.hpp"
#include "hecsim/simulation.hpp"

using namespace hecsim;

namespace {

Scenario small_scenario() {
    Scenario s{WorkloadProfile::agentic(), EnergyParams::defaults(), CostParams::defaults(),
               SplitPolicy(0.8), ParetoParams(2.0, 1.0)};
    s.n_tasks = 50;
    s.n_devices = 200;
    s.master_seed = 42;
    return s;
}

bool same_aggregate(const FleetAggregate& a, const FleetAggregate& b) {
    auto same_stat = [](const StatSummary& x, const StatSummary& y) {
        return x.mean == y.mean && x.stddev == y.stddev && x.ci95_half_width == y.ci95_half_width;
    };
    return a.n_devices == b.n_devices && same_stat(a.energy_hec_kwh, b.energy_hec_kwh) &&
           same_stat(a.cost_hec_usd, b.cost_hec_usd) &&
           same_stat(a.realized_edge_fraction, b.realized_edge_fraction) &&
           a.energy_cloud_only.value == b.energy_cloud_only.value &&
           a.cost_cloud_only.value == b.cost_cloud_only.value &&
           a.energy_savings_mean == b.energy_savings_mean &&
           a.cost_savings_mean == b.cost_savings_mean;
}

}  // namespace

TEST_CASE("running stats match closed-form mean and sample stddev") {
    RunningStats s;
    for (double x : {1.0, 2.0, 3.0, 4.0}) s.add(x);
    CHECK(s.count() == 4);
    CHECK(s.mean() == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(s.stddev() == doctest::Approx(1.2909944487358056).epsilon(1e-12));
    CHECK(s.ci95_half_width() == doctest::Approx(1.96 * 1.2909944487358056 / 2.0).epsilon(1e-12));
}

TEST_CASE("running stats edge cases") {
    RunningStats s;
    CHECK(s.count() == 0);
    CHECK(s.mean() == 0.0);
    CHECK(s.stddev() == 0.0);
    CHECK(s.ci95_half_width() == 0.0);
    s.add(7.5);
    CHECK(s.mean() == 7.5);
    CHECK(s.stddev() == 0.0);
}

TEST_CASE("merging partial stats agrees with a single pass") {
    RunningStats full;
    RunningStats left;
    RunningStats right;
    for (int i = 0; i < 1000; ++i) {
        const double x = std::sin(i) * 10.0 + i * 0.01;
        full.add(x);
        (i < 400 ? left : right).add(x);
    }
    RunningStats merged = left;
    merged.merge(right);
    CHECK(merged.count() == full.count());
    CHECK(merged.mean() == doctest::Approx(full.mean()).epsilon(1e-12));
    CHECK(merged.stddev() == doctest::Approx(full.stddev()).epsilon(1e-12));

    RunningStats empty;
    merged.merge(empty);
    CHECK(merged.mean() == doctest::Approx(full.mean()).epsilon(1e-12));
}

TEST_CASE("a device's year is deterministic and conserves volume") {
    const Scenario s = small_scenario();
    const DeviceResult a = simulate_device(s, 3);
    const DeviceResult b = simulate_device(s, 3);
    CHECK(a.d_edge.value == b.d_edge.value);
    CHECK(a.energy_hec.value == b.energy_hec.value);
    CHECK(a.cost_hec.value == b.cost_hec.value);

    // Different devices, different draws.
    const DeviceResult c = simulate_device(s, 4);
    CHECK(a.d_edge.value != c.d_edge.value);

    const double total = a.d_edge.value + a.d_cloud.value;
    CHECK(total == doctest::Approx(7300.0).epsilon(1e-9));
    CHECK(a.realized_edge_fraction >= 0.0);
    CHECK(a.realized_edge_fraction <= 1.0);

    // Accounting identities against the model rates.
    CHECK(a.energy_hec.value ==
          doctest::Approx(a.d_edge.value * 0.5 + a.d_cloud.value * 2.2).epsilon(1e-12));
    CHECK(a.cost_hec.value ==
          doctest::Approx(a.d_cloud.value * 0.3 + a.d_edge.value * 0.02).epsilon(1e-12));
}

TEST_CASE("device and scenario validation") {
    Scenario s = small_scenario();
    CHECK_THROWS_AS(simulate_device(s, s.n_devices), std::invalid_argument);
    s.n_tasks = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    CHECK_THROWS_AS(run_fleet(s), std::invalid_argument);
    s = small_scenario();
    s.n_devices = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("deterministic volume mode splits exactly at p_edge") {
    Scenario s = small_scenario();
    s.allocation = AllocationMode::deterministic_volume;
    const DeviceResult d = simulate_device(s, 0);
    CHECK(d.d_edge.value == 7300.0 * 0.8);
    CHECK(d.realized_edge_fraction == doctest::Approx(0.8).epsilon(1e-12));

    const FleetAggregate agg = run_fleet(s);
    const AnalyticResult ar =
        analytic_scenario(s.profile, s.energy, s.cost, s.split);
    CHECK(agg.energy_hec_kwh.mean == ar.energy_hec.value);
    CHECK(agg.cost_hec_usd.mean == ar.cost_hec.value);
    CHECK(agg.energy_hec_kwh.stddev == 0.0);
    CHECK(agg.energy_savings_mean == doctest::Approx(ar.savings_energy_fraction).epsilon(1e-12));
}

TEST_CASE("fleet aggregate tracks the analytic expectation") {
    const Scenario s = small_scenario();
    const FleetAggregate agg = run_fleet(s);
    CHECK(agg.n_devices == 200);
    CHECK(agg.energy_cloud_only.value == doctest::Approx(16060.0).epsilon(1e-12));
    CHECK(agg.cost_cloud_only.value == doctest::Approx(2190.0).epsilon(1e-12));

    // 200 devices x 50 tasks: loose bands around the expectation.
    CHECK(agg.realized_edge_fraction.mean == doctest::Approx(0.8).epsilon(0.05));
    CHECK(agg.energy_hec_kwh.mean == doctest::Approx(6132.0).epsilon(0.05));
    CHECK(agg.cost_hec_usd.mean == doctest::Approx(554.8).epsilon(0.08));

    // Savings means are defined by the aggregate's own fields.
    CHECK(agg.energy_savings_mean == 1.0 - agg.energy_hec_kwh.mean / agg.energy_cloud_only.value);
    CHECK(agg.cost_savings_mean == 1.0 - agg.cost_hec_usd.mean / agg.cost_cloud_only.value);
}

TEST_CASE("fleet runs are reproducible and seed-sensitive") {
    const Scenario s = small_scenario();
    CHECK(same_aggregate(run_fleet(s), run_fleet(s)));

    Scenario other = s;
    other.master_seed = 43;
    CHECK_FALSE(same_aggregate(run_fleet(s), run_fleet(other)));
}

TEST_CASE("worker count does not change the result") {
    const Scenario s = small_scenario();
    const FleetAggregate serial = run_fleet(s, {1});
    CHECK(same_aggregate(serial, run_fleet(s, {2})));
    CHECK(same_aggregate(serial, run_fleet(s, {4})));
    CHECK(same_aggregate(serial, run_fleet(s, {16})));
}

TEST_CASE("deviation report compares the right quantities") {
    const Scenario s = small_scenario();
    const FleetAggregate agg = run_fleet(s);
    const AnalyticResult ar = analytic_scenario(s.profile, s.energy, s.cost, s.split);
    const DeviationReport report = compare_with_analytic(agg, ar);

    REQUIRE(report.entries.size() == 5);
    CHECK(report.entries[0].quantity == "energy_hec_kwh");
    CHECK(report.entries[1].quantity == "cost_hec_usd");
    CHECK(report.entries[2].quantity == "energy_savings");
    CHECK(report.entries[3].quantity == "cost_savings");
    CHECK(report.entries[4].quantity == "realized_edge_fraction");

    for (const Deviation& d : report.entries) {
        CHECK(d.absolute == d.simulated - d.analytic);
        if (d.analytic != 0.0) {
            CHECK(d.relative == doctest::Approx(d.absolute / std::abs(d.analytic)).epsilon(1e-12));
        }
    }
    CHECK(report.entries[0].simulated == agg.energy_hec_kwh.mean);
    CHECK(report.entries[0].analytic == ar.energy_hec.value);
    CHECK(report.entries[4].analytic == doctest::Approx(0.8).epsilon(1e-12));

    // within_ci is exactly the |absolute| <= ci95 predicate for the stat rows.
    CHECK(report.entries[0].within_ci ==
          (std::abs(agg.energy_hec_kwh.mean - ar.energy_hec.value) <=
           agg.energy_hec_kwh.ci95_half_width));
}

TEST_CASE("fleets smaller than one chunk work") {
    Scenario s = small_scenario();
    s.n_devices = 5;
    const FleetAggregate agg = run_fleet(s, {8});
    CHECK(agg.n_devices == 5);
    CHECK(same_aggregate(agg, run_fleet(s, {1})));
}
