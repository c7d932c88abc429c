#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "hecsim/config.hpp"
#include "hecsim/reporting.hpp"

using namespace hecsim;
using nlohmann::json;

namespace {

Scenario mc_scenario() {
    Scenario s = default_scenario();
    s.n_tasks = 50;
    s.n_devices = 400;
    return s;
}

const ReproductionEntry& entry_by_label(const ReproductionReport& report,
                                        const std::string& label) {
    const auto it = std::find_if(report.entries.begin(), report.entries.end(),
                                 [&](const ReproductionEntry& e) { return e.label == label; });
    REQUIRE(it != report.entries.end());
    return *it;
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("split range is inclusive and validated") {
    const std::vector<double> r = split_range(0.5, 0.9, 0.1);
    REQUIRE(r.size() == 5);
    CHECK(r.front() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.back() == doctest::Approx(0.9).epsilon(1e-12));

    const std::vector<double> quarters = split_range(0.0, 1.0, 0.25);
    REQUIRE(quarters.size() == 5);
    CHECK(quarters.front() == 0.0);
    CHECK(quarters.back() == 1.0);

    CHECK(split_range(0.3, 0.3, 0.1) == std::vector<double>{0.3});
    CHECK(split_range(0.3, 0.35, 0.1).size() == 1);

    CHECK_THROWS_AS(split_range(0.5, 0.4, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(split_range(0.5, 0.9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(split_range(0.5, 0.9, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(split_range(-0.1, 0.9, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(split_range(0.5, 1.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(split_range(0.5, std::nan(""), 0.1), std::invalid_argument);
}

TEST_CASE("analytic sweep reproduces the published cost savings column") {
    const std::vector<SweepRow> rows = sweep_edge_split(
        default_scenario(), split_range(0.5, 0.9, 0.1), SweepSource::analytic);
    REQUIRE(rows.size() == 5);

    const double expected_cost[] = {0.4667, 0.5600, 0.6533, 0.7467, 0.8400};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].source == SweepSource::analytic);
        CHECK(std::round(rows[i].cost_savings * 1e4) / 1e4 ==
              doctest::Approx(expected_cost[i]).epsilon(1e-9));
    }

    // The 80% row carries the headline agentic figures.
    CHECK(rows[3].p_edge == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(rows[3].energy_hec_kwh == doctest::Approx(6132.0).epsilon(1e-9));
    CHECK(rows[3].cost_hec_usd == doctest::Approx(554.8).epsilon(1e-9));
    CHECK(rows[3].energy_savings == doctest::Approx(0.6181818181818182).epsilon(1e-12));
}

TEST_CASE("analytic sweep savings are linear in the split") {
    const std::vector<double> splits{0.1, 0.2, 0.4, 0.8};
    const std::vector<SweepRow> rows =
        sweep_edge_split(default_scenario(), splits, SweepSource::analytic);
    const double unit_energy = rows[0].energy_savings / 0.1;
    for (const SweepRow& r : rows) {
        CHECK(r.energy_savings == doctest::Approx(r.p_edge * unit_energy).epsilon(1e-12));
    }
}

TEST_CASE("monte carlo sweep rows sit near the analytic rows") {
    const std::vector<double> splits{0.5, 0.8};
    const std::vector<SweepRow> analytic =
        sweep_edge_split(mc_scenario(), splits, SweepSource::analytic);
    const std::vector<SweepRow> mc =
        sweep_edge_split(mc_scenario(), splits, SweepSource::monte_carlo);
    REQUIRE(mc.size() == 2);
    for (std::size_t i = 0; i < mc.size(); ++i) {
        CHECK(mc[i].source == SweepSource::monte_carlo);
        CHECK(std::abs(mc[i].energy_savings - analytic[i].energy_savings) < 0.02);
        CHECK(std::abs(mc[i].cost_savings - analytic[i].cost_savings) < 0.02);
    }
    // Distinct splits draw from distinct streams.
    CHECK(mc[0].energy_hec_kwh != mc[1].energy_hec_kwh);

    // Rerunning reproduces the rows bit for bit.
    const std::vector<SweepRow> again =
        sweep_edge_split(mc_scenario(), splits, SweepSource::monte_carlo);
    CHECK(again[0].energy_hec_kwh == mc[0].energy_hec_kwh);
    CHECK(again[1].cost_hec_usd == mc[1].cost_hec_usd);
}

TEST_CASE("sweep table rendering") {
    const std::vector<SweepRow> rows = sweep_edge_split(
        default_scenario(), split_range(0.5, 0.9, 0.1), SweepSource::analytic);

    const std::string csv = render_table(rows, OutputFormat::csv);
    CHECK(csv.rfind("p_edge,energy_hec_kwh,cost_hec_usd,energy_savings,cost_savings,source\n",
                    0) == 0);
    CHECK(count_lines(csv) == 6);
    CHECK(csv.find("0.8000,6132.0000,554.8000,0.6182,0.7467,analytic\n") != std::string::npos);

    const json arr = json::parse(render_table(rows, OutputFormat::json));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    CHECK(arr[3]["p_edge"].get<double>() == 0.8);
    CHECK(arr[3]["energy_savings"].get<double>() == 0.6182);
    CHECK(arr[3]["cost_savings"].get<double>() == 0.7467);
    CHECK(arr[3]["source"].get<std::string>() == "analytic");

    const std::string text = render_table(rows, OutputFormat::text);
    CHECK(text.find("p_edge") != std::string::npos);
    CHECK(text.find("61.82%") != std::string::npos);
    CHECK(text.find("74.67%") != std::string::npos);
}

TEST_CASE("reproduction report matches everything except the two known errata") {
    const ReproductionReport report = reproduce_results();
    REQUIRE(report.entries.size() == 12);
    CHECK(report.all_matched_or_erratum());

    std::size_t errata = 0;
    for (const ReproductionEntry& e : report.entries) {
        CHECK(!e.label.empty());
        CHECK(!e.citation.empty());
        CHECK(e.citation.find('"') != std::string::npos);
        if (e.known_erratum) {
            ++errata;
            CHECK_FALSE(e.matched);
            CHECK(!e.note.empty());
        } else {
            CHECK(e.matched);
        }
    }
    CHECK(errata == 2);

    const ReproductionEntry& hybrid = entry_by_label(report, "traditional hybrid energy (80% edge)");
    CHECK(hybrid.computed == doctest::Approx(735.84).epsilon(1e-9));
    CHECK(hybrid.reported == 674.0);
    CHECK(hybrid.known_erratum);

    const ReproductionEntry& savings =
        entry_by_label(report, "traditional energy savings (80% edge)");
    CHECK(savings.computed == doctest::Approx(0.6181818181818182).epsilon(1e-12));
    CHECK(savings.reported == 0.65);
    CHECK(savings.known_erratum);

    CHECK(entry_by_label(report, "agentic cloud-only energy").computed ==
          doctest::Approx(16060.0).epsilon(1e-12));
    CHECK(entry_by_label(report, "agentic cloud-only cost").computed ==
          doctest::Approx(2190.0).epsilon(1e-12));
    CHECK(entry_by_label(report, "agentic energy saved (80% edge)").computed ==
          doctest::Approx(9928.0).epsilon(1e-9));
    CHECK(entry_by_label(report, "agentic cost saved (80% edge)").computed ==
          doctest::Approx(1635.2).epsilon(1e-9));
    CHECK(entry_by_label(report, "traditional cloud-only energy").computed ==
          doctest::Approx(1927.2).epsilon(1e-9));
    CHECK(entry_by_label(report, "traditional hybrid cost (80% edge)").computed ==
          doctest::Approx(66.576).epsilon(1e-9));
}

TEST_CASE("reproduction rendering") {
    const ReproductionReport report = reproduce_results();

    const std::string text = render_reproduction(report, OutputFormat::text);
    CHECK(std::count(text.begin(), text.end(), '[') >= 12);
    CHECK(text.find("[ERRATUM]") != std::string::npos);
    CHECK(text.find("[MISMATCH]") == std::string::npos);
    CHECK(text.find("10 matched, 2 known errata, 0 unexplained mismatches") != std::string::npos);

    const json doc = json::parse(render_reproduction(report, OutputFormat::json));
    CHECK(doc["all_matched_or_erratum"].get<bool>());
    REQUIRE(doc["entries"].size() == 12);
    CHECK(doc["entries"][0]["kind"].get<std::string>() == "energy_kwh");
    CHECK(doc["entries"][0]["matched"].get<bool>());

    const std::string csv = render_reproduction(report, OutputFormat::csv);
    CHECK(csv.rfind("label,kind,computed,reported,tolerance,matched,known_erratum\n", 0) == 0);
    CHECK(count_lines(csv) == 13);
}

TEST_CASE("an unexplained mismatch fails the report") {
    ReproductionReport report = reproduce_results();
    report.entries[0].matched = false;
    CHECK_FALSE(report.all_matched_or_erratum());
}

TEST_CASE("analytic rendering") {
    const Scenario s = default_scenario();
    const AnalyticResult r = analytic_scenario(s.profile, s.energy, s.cost, s.split);

    const std::string text = render_analytic(s, r, OutputFormat::text);
    CHECK(text.find("agentic") != std::string::npos);
    CHECK(text.find("61.82%") != std::string::npos);
    CHECK(text.find("74.67%") != std::string::npos);
    CHECK(text.find("16060.00") != std::string::npos);
    CHECK(text.find("554.80") != std::string::npos);

    const json doc = json::parse(render_analytic(s, r, OutputFormat::json));
    CHECK(doc["scenario"]["profile"]["label"].get<std::string>() == "agentic");
    CHECK(doc["result"]["energy_hec_kwh"].get<double>() == 6132.0);
    CHECK(doc["result"]["energy_savings"].get<double>() == 0.6182);
    CHECK(doc["result"]["cost_savings"].get<double>() == 0.7467);
    CHECK(doc["result"]["cost_saved_usd"].get<double>() == 1635.2);

    const std::string csv = render_analytic(s, r, OutputFormat::csv);
    CHECK(csv.rfind("d_edge_gb,d_cloud_gb,energy_cloud_kwh,", 0) == 0);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.find("16060.0000") != std::string::npos);
}

TEST_CASE("fleet rendering") {
    const Scenario s = mc_scenario();
    const FleetAggregate agg = run_fleet(s);
    const AnalyticResult ar = analytic_scenario(s.profile, s.energy, s.cost, s.split);
    const DeviationReport dev = compare_with_analytic(agg, ar);

    const std::string text = render_fleet(s, agg, dev, OutputFormat::text);
    CHECK(text.find("400 devices") != std::string::npos);
    CHECK(text.find("energy_hec_kwh") != std::string::npos);
    CHECK(text.find("deviation vs analytic expectation") != std::string::npos);

    const json doc = json::parse(render_fleet(s, agg, dev, OutputFormat::json));
    CHECK(doc["aggregate"]["n_devices"].get<std::size_t>() == 400);
    CHECK(doc["aggregate"]["energy_hec_kwh"]["mean"].get<double>() == agg.energy_hec_kwh.mean);
    CHECK(doc["aggregate"]["energy_cloud_only_kwh"].get<double>() == agg.energy_cloud_only.value);
    REQUIRE(doc["deviation"].size() == 5);
    CHECK(doc["deviation"][0]["quantity"].get<std::string>() == "energy_hec_kwh");

    const std::string csv = render_fleet(s, agg, dev, OutputFormat::csv);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.rfind("n_devices,energy_hec_mean_kwh,", 0) == 0);
    CHECK(csv.find("rel_dev_energy_savings") != std::string::npos);
    CHECK(csv.find("rel_dev_realized_edge_fraction") != std::string::npos);
}

TEST_CASE("dist check rendering") {
    const DistCheckResult r = run_dist_check(ParetoParams(2.0, 1.0), 5000, 42);

    const std::string text = render_dist_check(r, OutputFormat::text);
    CHECK(text.find("pareto sampler check") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);

    const json doc = json::parse(render_dist_check(r, OutputFormat::json));
    CHECK(doc["n_samples"].get<std::size_t>() == 5000);
    CHECK(doc["passed"].get<bool>() == r.passed);
    CHECK(doc["ks_stat"].get<double>() == r.ks_stat);

    CHECK_THROWS_AS(render_dist_check(r, OutputFormat::csv), std::invalid_argument);
}
