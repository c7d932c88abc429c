#pragma once

// Per-device task-size generation. Sizes follow a Pareto distribution
// f(x) = alpha * x_min^alpha / x^(alpha+1) on x >= x_min, are rescaled so a
// device's annual total is exact, and are then assigned to edge or cloud by
// an independent Bernoulli draw per task.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hecsim/model.hpp"
#include "hecsim/rng.hpp"
#include "hecsim/units.hpp"

namespace hecsim {

// Shape and minimum of the task-size distribution. alpha <= 1 is rejected:
// the mean would be infinite and a normalized annual total meaningless.
class ParetoParams {
public:
    ParetoParams(double alpha, double x_min_gb);

    double alpha() const { return alpha_; }
    double x_min() const { return x_min_; }

    // alpha * x_min / (alpha - 1), finite because alpha > 1.
    double mean() const { return alpha_ * x_min_ / (alpha_ - 1.0); }

private:
    double alpha_;
    double x_min_;
};

enum class Placement : std::uint8_t { edge, cloud };

// Task sizes (GB) with their edge/cloud assignment, same length.
struct TaskSet {
    std::vector<double> sizes_gb;
    std::vector<Placement> assignment;
};

// Density at x; defined only for x >= x_min.
double pareto_pdf(double x, const ParetoParams& pp);

// P(X <= x); zero below x_min.
double pareto_cdf(double x, const ParetoParams& pp);

// Inverse CDF: x_min * (1 - u)^(-1/alpha) for u in [0, 1).
double pareto_quantile(double u, const ParetoParams& pp);

// n_tasks independent draws through the inverse CDF. Deterministic given the
// stream state.
std::vector<double> sample_tasks(RngStream& rng, std::size_t n_tasks, const ParetoParams& pp);

// Rescale sizes so they sum to d_total; proportions are preserved.
std::vector<double> normalize_to_annual(const std::vector<double>& sizes_gb, Gigabytes d_total);

// Label each task edge with probability p_edge, cloud otherwise. The
// assignment is per task, not per GB, so the realized GB edge fraction
// fluctuates around p_edge.
TaskSet allocate(RngStream& rng, std::vector<double> sizes_gb, const SplitPolicy& split);

// Sum of edge-labeled and cloud-labeled sizes.
std::pair<Gigabytes, Gigabytes> edge_cloud_volumes(const TaskSet& ts);

// Kolmogorov-Smirnov distance between the empirical distribution of `sorted`
// (ascending) and the analytic CDF.
double ks_statistic(const std::vector<double>& sorted_samples, const ParetoParams& pp);

// Sampler self-check: draws n samples and compares moments, support and the
// empirical CDF against the analytic distribution.
struct DistCheckResult {
    std::size_t n_samples{0};
    double alpha{0.0};
    double x_min{0.0};
    double sample_mean{0.0};
    double analytic_mean{0.0};
    double sample_min{0.0};
    double ks_stat{0.0};
    double ks_threshold{0.0};
    bool min_ok{false};
    bool passed{false};
};

DistCheckResult run_dist_check(const ParetoParams& pp, std::size_t n_samples, std::uint64_t seed);

}  // namespace hecsim
