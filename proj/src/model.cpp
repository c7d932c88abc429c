#include "hecsim/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hecsim {

namespace {

void require_rate(double value, const char* what) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and >= 0, got " +
                                    std::to_string(value));
    }
}

void require_volume(Gigabytes v, const char* where, const char* what) {
    if (!std::isfinite(v.value) || v.value < 0.0) {
        throw std::invalid_argument(std::string(where) + ": " + what + " must be finite and >= 0 GB, got " +
                                    std::to_string(v.value));
    }
}

void require_probability(double p, const char* where) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw std::invalid_argument(std::string(where) + ": p_edge must lie in [0, 1], got " +
                                    std::to_string(p));
    }
}

}  // namespace

EnergyParams::EnergyParams(double transmit_kwh_per_gb, double cloud_kwh_per_gb, double local_kwh_per_gb)
    : e_transmit(transmit_kwh_per_gb), e_cloud(cloud_kwh_per_gb), e_local(local_kwh_per_gb) {
    require_rate(transmit_kwh_per_gb, "EnergyParams: e_transmit");
    require_rate(cloud_kwh_per_gb, "EnergyParams: e_cloud");
    require_rate(local_kwh_per_gb, "EnergyParams: e_local");
}

CostParams::CostParams(double bandwidth_usd_per_gb, double hosting_usd_per_gb, double software_usd_per_gb)
    : c_bandwidth(bandwidth_usd_per_gb), c_hosting(hosting_usd_per_gb), c_software(software_usd_per_gb) {
    require_rate(bandwidth_usd_per_gb, "CostParams: c_bandwidth");
    require_rate(hosting_usd_per_gb, "CostParams: c_hosting");
    require_rate(software_usd_per_gb, "CostParams: c_software");
}

WorkloadProfile::WorkloadProfile(std::string label, double daily_gb)
    : label_(std::move(label)), daily_gb_(daily_gb), annual_gb_(annualize(Gigabytes{daily_gb})) {
    if (!std::isfinite(daily_gb) || daily_gb <= 0.0) {
        throw std::invalid_argument("WorkloadProfile: daily_gb must be finite and > 0, got " +
                                    std::to_string(daily_gb));
    }
}

SplitPolicy::SplitPolicy(double p_edge) : p_edge_(p_edge) {
    require_probability(p_edge, "SplitPolicy");
}

Gigabytes annualize(Gigabytes daily_gb) {
    require_volume(daily_gb, "annualize", "daily_gb");
    return daily_gb * kDaysPerYear;
}

KilowattHours energy_cloud(Gigabytes d_total, const EnergyParams& ep) {
    require_volume(d_total, "energy_cloud", "d_total");
    return d_total * ep.cloud_path_rate();
}

KilowattHours energy_hec(Gigabytes d_edge, Gigabytes d_cloud, const EnergyParams& ep) {
    require_volume(d_edge, "energy_hec", "d_edge");
    require_volume(d_cloud, "energy_hec", "d_cloud");
    return d_edge * ep.e_local + d_cloud * ep.cloud_path_rate();
}

UsDollars cost_cloud(Gigabytes d_total, const CostParams& cp) {
    require_volume(d_total, "cost_cloud", "d_total");
    return d_total * cp.cloud_path_rate();
}

UsDollars cost_hec(Gigabytes d_edge, Gigabytes d_cloud, const CostParams& cp) {
    require_volume(d_edge, "cost_hec", "d_edge");
    require_volume(d_cloud, "cost_hec", "d_cloud");
    return d_cloud * cp.cloud_path_rate() + d_edge * cp.c_software;
}

double savings_energy_fraction(const EnergyParams& ep, double p_edge) {
    require_probability(p_edge, "savings_energy_fraction");
    const double path = ep.cloud_path_rate().value;
    if (path == 0.0) {
        throw std::domain_error(
            "savings_energy_fraction: cloud path rate e_transmit + e_cloud is zero, division by zero");
    }
    return (path - ep.e_local.value) / path * p_edge;
}

double savings_cost_fraction(const CostParams& cp, double p_edge) {
    require_probability(p_edge, "savings_cost_fraction");
    const double path = cp.cloud_path_rate().value;
    if (path == 0.0) {
        throw std::domain_error(
            "savings_cost_fraction: cloud path rate c_bandwidth + c_hosting is zero, division by zero");
    }
    return (path - cp.c_software.value) / path * p_edge;
}

namespace {

// The closed-form savings and the 1 - hec/cloud ratio are algebraically
// identical; both are computed and compared so a regression in either route
// is caught at the call site.
void check_savings_consistency(double closed_form, double ratio, const char* what) {
    const double scale = std::max(1.0, std::abs(closed_form));
    if (std::abs(closed_form - ratio) > 1e-12 * scale) {
        throw std::logic_error(std::string("analytic_scenario: ") + what +
                               " closed form and hec/cloud ratio disagree: " +
                               std::to_string(closed_form) + " vs " + std::to_string(ratio));
    }
}

}  // namespace

AnalyticResult analytic_scenario(const WorkloadProfile& profile, const EnergyParams& ep,
                                 const CostParams& cp, const SplitPolicy& split) {
    const Gigabytes d_total = profile.annual_gb();
    const Gigabytes d_edge = d_total * split.p_edge();
    const Gigabytes d_cloud = d_total * split.p_cloud();

    AnalyticResult r{
        .d_edge = d_edge,
        .d_cloud = d_cloud,
        .energy_cloud_only = energy_cloud(d_total, ep),
        .energy_hec = energy_hec(d_edge, d_cloud, ep),
        .cost_cloud_only = cost_cloud(d_total, cp),
        .cost_hec = cost_hec(d_edge, d_cloud, cp),
    };
    r.savings_energy_fraction = savings_energy_fraction(ep, split.p_edge());
    r.savings_cost_fraction = savings_cost_fraction(cp, split.p_edge());

    if (r.energy_cloud_only.value > 0.0) {
        check_savings_consistency(r.savings_energy_fraction, 1.0 - r.energy_hec / r.energy_cloud_only,
                                  "energy savings");
    }
    if (r.cost_cloud_only.value > 0.0) {
        check_savings_consistency(r.savings_cost_fraction, 1.0 - r.cost_hec / r.cost_cloud_only,
                                  "cost savings");
    }
    return r;
}

}  // namespace hecsim
