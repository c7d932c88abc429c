#include "hecsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hecsim {

ParetoParams::ParetoParams(double alpha, double x_min_gb) : alpha_(alpha), x_min_(x_min_gb) {
    if (!std::isfinite(alpha) || alpha <= 1.0) {
        throw std::invalid_argument("ParetoParams: alpha must be > 1 (alpha <= 1 has an infinite mean), got " +
                                    std::to_string(alpha));
    }
    if (!std::isfinite(x_min_gb) || x_min_gb <= 0.0) {
        throw std::invalid_argument("ParetoParams: x_min must be finite and > 0 GB, got " +
                                    std::to_string(x_min_gb));
    }
}

double pareto_pdf(double x, const ParetoParams& pp) {
    if (!(x >= pp.x_min())) {
        throw std::domain_error("pareto_pdf: density is defined only for x >= x_min, got x = " +
                                std::to_string(x));
    }
    return pp.alpha() * std::pow(pp.x_min(), pp.alpha()) / std::pow(x, pp.alpha() + 1.0);
}

double pareto_cdf(double x, const ParetoParams& pp) {
    if (x < pp.x_min()) return 0.0;
    return 1.0 - std::pow(pp.x_min() / x, pp.alpha());
}

double pareto_quantile(double u, const ParetoParams& pp) {
    if (!(u >= 0.0) || u >= 1.0) {
        throw std::domain_error("pareto_quantile: u must lie in [0, 1), got " + std::to_string(u));
    }
    return pp.x_min() * std::pow(1.0 - u, -1.0 / pp.alpha());
}

std::vector<double> sample_tasks(RngStream& rng, std::size_t n_tasks, const ParetoParams& pp) {
    if (n_tasks == 0) {
        throw std::invalid_argument("sample_tasks: n_tasks must be >= 1");
    }
    std::vector<double> sizes;
    sizes.reserve(n_tasks);
    for (std::size_t i = 0; i < n_tasks; ++i) {
        sizes.push_back(pareto_quantile(rng.next_uniform(), pp));
    }
    return sizes;
}

std::vector<double> normalize_to_annual(const std::vector<double>& sizes_gb, Gigabytes d_total) {
    if (sizes_gb.empty()) {
        throw std::invalid_argument("normalize_to_annual: sizes must be non-empty");
    }
    if (!std::isfinite(d_total.value) || d_total.value <= 0.0) {
        throw std::invalid_argument("normalize_to_annual: d_total must be finite and > 0 GB, got " +
                                    std::to_string(d_total.value));
    }
    double sum = 0.0;
    for (double s : sizes_gb) {
        if (!std::isfinite(s) || s <= 0.0) {
            throw std::invalid_argument("normalize_to_annual: all sizes must be finite and > 0 GB");
        }
        sum += s;
    }
    if (sum == 0.0) {
        throw std::invalid_argument("normalize_to_annual: sizes sum to zero");
    }
    const double scale = d_total.value / sum;
    std::vector<double> scaled;
    scaled.reserve(sizes_gb.size());
    for (double s : sizes_gb) scaled.push_back(s * scale);
    return scaled;
}

TaskSet allocate(RngStream& rng, std::vector<double> sizes_gb, const SplitPolicy& split) {
    if (sizes_gb.empty()) {
        throw std::invalid_argument("allocate: sizes must be non-empty");
    }
    TaskSet ts;
    ts.assignment.reserve(sizes_gb.size());
    for (std::size_t i = 0; i < sizes_gb.size(); ++i) {
        // next_uniform() < 1, so p_edge = 1 labels every task edge.
        ts.assignment.push_back(rng.next_uniform() < split.p_edge() ? Placement::edge : Placement::cloud);
    }
    ts.sizes_gb = std::move(sizes_gb);
    return ts;
}

std::pair<Gigabytes, Gigabytes> edge_cloud_volumes(const TaskSet& ts) {
    double edge = 0.0;
    double cloud = 0.0;
    for (std::size_t i = 0; i < ts.sizes_gb.size(); ++i) {
        (ts.assignment[i] == Placement::edge ? edge : cloud) += ts.sizes_gb[i];
    }
    return {Gigabytes{edge}, Gigabytes{cloud}};
}

double ks_statistic(const std::vector<double>& sorted_samples, const ParetoParams& pp) {
    if (sorted_samples.empty()) {
        throw std::invalid_argument("ks_statistic: samples must be non-empty");
    }
    const double n = static_cast<double>(sorted_samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        const double f = pareto_cdf(sorted_samples[i], pp);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, f - lo, hi - f});
    }
    return d;
}

DistCheckResult run_dist_check(const ParetoParams& pp, std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 1000) {
        throw std::invalid_argument("run_dist_check: sample size must be >= 1000, got " +
                                    std::to_string(n_samples));
    }
    RngStream rng = RngStream::substream(seed, 0);
    std::vector<double> samples = sample_tasks(rng, n_samples, pp);

    DistCheckResult r;
    r.n_samples = n_samples;
    r.alpha = pp.alpha();
    r.x_min = pp.x_min();
    r.sample_mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n_samples);
    r.analytic_mean = pp.mean();
    r.sample_min = *std::min_element(samples.begin(), samples.end());
    r.min_ok = r.sample_min >= pp.x_min();

    std::sort(samples.begin(), samples.end());
    r.ks_stat = ks_statistic(samples, pp);
    // The pass bar is 0.01 at the reference size of 100,000 draws; the KS
    // statistic shrinks like 1/sqrt(n), so the bar scales accordingly.
    r.ks_threshold = 0.01 * std::sqrt(100000.0 / static_cast<double>(n_samples));
    r.passed = r.min_ok && r.ks_stat < r.ks_threshold;
    return r;
}

}  // namespace hecsim
