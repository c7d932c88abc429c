#include "hecsim/simulation.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace hecsim {

namespace {

// Chunk size of the fleet reduction. Fixed so the merge tree depends only on
// the scenario, never on the worker count.
constexpr std::size_t kChunkDevices = 64;

}  // namespace

void Scenario::validate() const {
    if (n_tasks == 0) throw std::invalid_argument("Scenario: n_tasks must be >= 1");
    if (n_devices == 0) throw std::invalid_argument("Scenario: n_devices must be >= 1");
}

void RunningStats::add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double delta = other.mean_ - mean_;
    const double n = na + nb;
    mean_ += delta * (nb / n);
    m2_ += other.m2_ + delta * delta * (na * nb / n);
    count_ += other.count_;
}

double RunningStats::stddev() const {
    if (count_ < 2) return 0.0;
    return std::sqrt(m2_ / static_cast<double>(count_ - 1));
}

double RunningStats::ci95_half_width() const {
    if (count_ == 0) return 0.0;
    return 1.96 * stddev() / std::sqrt(static_cast<double>(count_));
}

DeviceResult simulate_device(const Scenario& scenario, std::size_t device_index) {
    scenario.validate();
    if (device_index >= scenario.n_devices) {
        throw std::invalid_argument("simulate_device: device_index out of range");
    }

    RngStream rng = RngStream::substream(scenario.master_seed, device_index);
    std::vector<double> sizes = sample_tasks(rng, scenario.n_tasks, scenario.pareto);
    sizes = normalize_to_annual(sizes, scenario.profile.annual_gb());

    Gigabytes d_edge{0.0};
    Gigabytes d_cloud{0.0};
    if (scenario.allocation == AllocationMode::deterministic_volume) {
        d_edge = scenario.profile.annual_gb() * scenario.split.p_edge();
        d_cloud = scenario.profile.annual_gb() * scenario.split.p_cloud();
    } else {
        const TaskSet ts = allocate(rng, std::move(sizes), scenario.split);
        std::tie(d_edge, d_cloud) = edge_cloud_volumes(ts);
    }

    DeviceResult r{
        .d_edge = d_edge,
        .d_cloud = d_cloud,
        .energy_hec = energy_hec(d_edge, d_cloud, scenario.energy),
        .cost_hec = cost_hec(d_edge, d_cloud, scenario.cost),
    };
    const double total = d_edge.value + d_cloud.value;
    r.realized_edge_fraction = total > 0.0 ? d_edge.value / total : 0.0;
    return r;
}

namespace {

struct ChunkStats {
    RunningStats energy;
    RunningStats cost;
    RunningStats edge_fraction;

    void absorb(const DeviceResult& d) {
        energy.add(d.energy_hec.value);
        cost.add(d.cost_hec.value);
        edge_fraction.add(d.realized_edge_fraction);
    }

    void merge(const ChunkStats& other) {
        energy.merge(other.energy);
        cost.merge(other.cost);
        edge_fraction.merge(other.edge_fraction);
    }
};

ChunkStats simulate_chunk(const Scenario& scenario, std::size_t first, std::size_t last) {
    ChunkStats stats;
    for (std::size_t i = first; i < last; ++i) {
        stats.absorb(simulate_device(scenario, i));
    }
    return stats;
}

StatSummary summarize(const RunningStats& s) {
    return StatSummary{s.mean(), s.stddev(), s.ci95_half_width()};
}

}  // namespace

FleetAggregate run_fleet(const Scenario& scenario, const RunOptions& options) {
    scenario.validate();
    const std::size_t n = scenario.n_devices;
    const std::size_t n_chunks = (n + kChunkDevices - 1) / kChunkDevices;

    std::vector<ChunkStats> partials(n_chunks);
    const unsigned workers = std::max(1u, options.n_workers);
    if (workers == 1 || n_chunks == 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) {
            partials[c] = simulate_chunk(scenario, c * kChunkDevices, std::min(n, (c + 1) * kChunkDevices));
        }
    } else {
        std::atomic<std::size_t> next_chunk{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t c = next_chunk.fetch_add(1);
                if (c >= n_chunks) return;
                partials[c] = simulate_chunk(scenario, c * kChunkDevices, std::min(n, (c + 1) * kChunkDevices));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Order of this merge is fixed by chunk index, not by completion order.
    ChunkStats total;
    for (const ChunkStats& p : partials) total.merge(p);

    FleetAggregate agg;
    agg.n_devices = n;
    agg.energy_hec_kwh = summarize(total.energy);
    agg.cost_hec_usd = summarize(total.cost);
    agg.realized_edge_fraction = summarize(total.edge_fraction);
    agg.energy_cloud_only = energy_cloud(scenario.profile.annual_gb(), scenario.energy);
    agg.cost_cloud_only = cost_cloud(scenario.profile.annual_gb(), scenario.cost);
    agg.energy_savings_mean =
        agg.energy_cloud_only.value > 0.0 ? 1.0 - agg.energy_hec_kwh.mean / agg.energy_cloud_only.value : 0.0;
    agg.cost_savings_mean =
        agg.cost_cloud_only.value > 0.0 ? 1.0 - agg.cost_hec_usd.mean / agg.cost_cloud_only.value : 0.0;
    return agg;
}

namespace {

Deviation make_deviation(std::string quantity, double simulated, double analytic, double ci_half_width) {
    Deviation d;
    d.quantity = std::move(quantity);
    d.simulated = simulated;
    d.analytic = analytic;
    d.absolute = simulated - analytic;
    if (analytic != 0.0) {
        d.relative = d.absolute / std::abs(analytic);
    } else {
        d.relative = d.absolute == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    d.within_ci = std::abs(d.absolute) <= ci_half_width;
    return d;
}

}  // namespace

DeviationReport compare_with_analytic(const FleetAggregate& agg, const AnalyticResult& ar) {
    const double d_total = ar.d_edge.value + ar.d_cloud.value;
    const double p_edge = d_total > 0.0 ? ar.d_edge.value / d_total : 0.0;

    DeviationReport report;
    report.entries.push_back(make_deviation("energy_hec_kwh", agg.energy_hec_kwh.mean, ar.energy_hec.value,
                                            agg.energy_hec_kwh.ci95_half_width));
    report.entries.push_back(make_deviation("cost_hec_usd", agg.cost_hec_usd.mean, ar.cost_hec.value,
                                            agg.cost_hec_usd.ci95_half_width));
    // Savings are affine in the hec mean, so their CI is the hec CI divided
    // by the deterministic cloud baseline.
    const double energy_ci = agg.energy_cloud_only.value > 0.0
                                 ? agg.energy_hec_kwh.ci95_half_width / agg.energy_cloud_only.value
                                 : 0.0;
    const double cost_ci =
        agg.cost_cloud_only.value > 0.0 ? agg.cost_hec_usd.ci95_half_width / agg.cost_cloud_only.value : 0.0;
    report.entries.push_back(
        make_deviation("energy_savings", agg.energy_savings_mean, ar.savings_energy_fraction, energy_ci));
    report.entries.push_back(
        make_deviation("cost_savings", agg.cost_savings_mean, ar.savings_cost_fraction, cost_ci));
    report.entries.push_back(make_deviation("realized_edge_fraction", agg.realized_edge_fraction.mean, p_edge,
                                            agg.realized_edge_fraction.ci95_half_width));
    return report;
}

}  // namespace hecsim
