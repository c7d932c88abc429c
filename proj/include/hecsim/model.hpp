#pragma once

// Closed-form energy and cost model for hybrid edge cloud (HEC) versus a
// centralized cloud. Everything here is pure and deterministic: per-GB rates,
// an annual data volume, and an edge/cloud split produce totals and savings.
//
// Cloud-only route:   energy = D_T * (e_transmit + e_cloud)
//                     cost   = D_T * (c_bandwidth + c_hosting)
// Hybrid route:       energy = D_edge * e_local + D_cloud * (e_transmit + e_cloud)
//                     cost   = D_cloud * (c_bandwidth + c_hosting) + D_edge * c_software
// Savings fractions are linear in the edge probability.

#include <string>

#include "hecsim/units.hpp"

namespace hecsim {

inline constexpr double kDaysPerYear = 365.0;

// Per-GB energy rates (kWh/GB). All rates must be finite and >= 0.
struct EnergyParams {
    KwhPerGb e_transmit;  // device -> cloud transmission
    KwhPerGb e_cloud;     // processing in the cloud
    KwhPerGb e_local;     // processing on the device

    EnergyParams(double transmit_kwh_per_gb, double cloud_kwh_per_gb, double local_kwh_per_gb);

    static EnergyParams defaults() { return {0.7, 1.5, 0.5}; }

    // Combined per-GB rate of the offload route.
    KwhPerGb cloud_path_rate() const { return e_transmit + e_cloud; }
};

// Per-GB monetary rates (USD/GB). All rates must be finite and >= 0.
struct CostParams {
    UsdPerGb c_bandwidth;  // transfer to the cloud
    UsdPerGb c_hosting;    // cloud compute + storage
    UsdPerGb c_software;   // licensing for on-device processing

    CostParams(double bandwidth_usd_per_gb, double hosting_usd_per_gb, double software_usd_per_gb);

    static CostParams defaults() { return {0.10, 0.20, 0.02}; }

    UsdPerGb cloud_path_rate() const { return c_bandwidth + c_hosting; }
};

// A device class described by its daily data volume. The annual volume is
// daily * 365 exactly (no leap-year adjustment).
class WorkloadProfile {
public:
    WorkloadProfile(std::string label, double daily_gb);

    static WorkloadProfile traditional() { return {"traditional", 2.4}; }
    static WorkloadProfile agentic() { return {"agentic", 20.0}; }

    const std::string& label() const { return label_; }
    Gigabytes daily_gb() const { return daily_gb_; }
    Gigabytes annual_gb() const { return annual_gb_; }

private:
    std::string label_;
    Gigabytes daily_gb_;
    Gigabytes annual_gb_;
};

// Probability that a task is processed on the device rather than offloaded.
class SplitPolicy {
public:
    explicit SplitPolicy(double p_edge);

    double p_edge() const { return p_edge_; }
    double p_cloud() const { return 1.0 - p_edge_; }

private:
    double p_edge_;
};

// Bundle of the analytic quantities for one scenario.
struct AnalyticResult {
    Gigabytes d_edge;
    Gigabytes d_cloud;
    KilowattHours energy_cloud_only;
    KilowattHours energy_hec;
    UsDollars cost_cloud_only;
    UsDollars cost_hec;
    double savings_energy_fraction{0.0};
    double savings_cost_fraction{0.0};

    KilowattHours energy_saved() const { return energy_cloud_only - energy_hec; }
    UsDollars cost_saved() const { return cost_cloud_only - cost_hec; }
};

// Annual volume from a daily volume (365 days). Rejects negative or
// non-finite input.
Gigabytes annualize(Gigabytes daily_gb);

// Energy to transmit and process the whole volume in the cloud.
KilowattHours energy_cloud(Gigabytes d_total, const EnergyParams& ep);

// Energy when d_edge is processed locally and d_cloud is offloaded.
KilowattHours energy_hec(Gigabytes d_edge, Gigabytes d_cloud, const EnergyParams& ep);

// Bandwidth plus hosting cost of the cloud-only route.
UsDollars cost_cloud(Gigabytes d_total, const CostParams& cp);

// Cloud cost for the offloaded share plus licensing for the local share.
UsDollars cost_hec(Gigabytes d_edge, Gigabytes d_cloud, const CostParams& cp);

// Fractional energy savings of HEC over cloud-only:
//   (e_transmit + e_cloud - e_local) / (e_transmit + e_cloud) * p_edge.
// Negative output is valid and means local processing costs more energy than
// the cloud route. Throws when the cloud path rate is zero.
double savings_energy_fraction(const EnergyParams& ep, double p_edge);

// Fractional cost savings, same shape as the energy formula.
double savings_cost_fraction(const CostParams& cp, double p_edge);

// Full analytic evaluation at the expectation-level split
// d_edge = p_edge * D_T. The savings fields are computed from the closed
// forms and cross-checked against 1 - hec/cloud; a disagreement beyond
// rounding noise indicates a programming error and throws.
AnalyticResult analytic_scenario(const WorkloadProfile& profile, const EnergyParams& ep,
                                 const CostParams& cp, const SplitPolicy& split);

}  // namespace hecsim
