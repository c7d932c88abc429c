#pragma once

// Dimension-tagged scalar quantities. The model mixes per-day, per-year and
// per-GB figures; tagging GB, kWh and USD keeps them from being combined by
// accident. Rates (kWh/GB, USD/GB) multiply with volumes to give totals.

#include <compare>

namespace hecsim {

template <class Tag>
struct Quantity {
    double value{0.0};

    constexpr Quantity() = default;
    constexpr explicit Quantity(double v) : value(v) {}

    friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity{a.value + b.value}; }
    friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity{a.value - b.value}; }
    friend constexpr Quantity operator*(Quantity a, double k) { return Quantity{a.value * k}; }
    friend constexpr Quantity operator*(double k, Quantity a) { return Quantity{k * a.value}; }
    friend constexpr Quantity operator/(Quantity a, double k) { return Quantity{a.value / k}; }
    // Ratio of like quantities is dimensionless.
    friend constexpr double operator/(Quantity a, Quantity b) { return a.value / b.value; }

    constexpr auto operator<=>(const Quantity&) const = default;
};

using Gigabytes = Quantity<struct GigabytesTag>;
using KilowattHours = Quantity<struct KilowattHoursTag>;
using UsDollars = Quantity<struct UsDollarsTag>;
using KwhPerGb = Quantity<struct KwhPerGbTag>;
using UsdPerGb = Quantity<struct UsdPerGbTag>;

constexpr KilowattHours operator*(Gigabytes d, KwhPerGb rate) { return KilowattHours{d.value * rate.value}; }
constexpr KilowattHours operator*(KwhPerGb rate, Gigabytes d) { return d * rate; }
constexpr UsDollars operator*(Gigabytes d, UsdPerGb rate) { return UsDollars{d.value * rate.value}; }
constexpr UsDollars operator*(UsdPerGb rate, Gigabytes d) { return d * rate; }

}  // namespace hecsim
