#pragma once

#include "szilard/physics.hpp"
#include "szilard/types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace szilard {

/// Information bookkeeping of one cycle at temperature T > 0.
struct InfoMetrics {
    double shannon_entropy = 0.0;   // nats
    Joules total_work = 0.0;
    Joules erasure_work = 0.0;
    Joules net_work = 0.0;
    /// W_tot / W_eras; empty when the measurement outcome is deterministic.
    std::optional<double> efficiency;

    double entropy_bits() const;
};

/// -Σ f ln f in nats; zero-probability entries contribute nothing.
double shannon_entropy(const MeasurementDistribution& distribution);

/// Landauer cost k_B T H of resetting the demon's record.
/// Throws DomainError when |Σ f - 1| > 1e-9, ZeroTemperatureError at T = 0.
Joules erasure_work(const MeasurementDistribution& distribution, const ThermalPoint& thermal);

/// k_B T Σ f_m ln f_m* with precomputed ln f_m*.
Joules net_work(const MeasurementDistribution& distribution, std::span<const double> log_weights,
                const ThermalPoint& thermal);

Joules net_work(const SpinStatistics& spin, long particles, const WellGeometry& geometry,
                const ThermalPoint& thermal);

/// W_tot / W_eras, or empty when W_eras = 0.
std::optional<double> info_work_efficiency(const SpinStatistics& spin, long particles,
                                           const WellGeometry& geometry,
                                           const ThermalPoint& thermal);

/// All of the above in one pass.
InfoMetrics info_metrics(const SpinStatistics& spin, long particles, const WellGeometry& geometry,
                         const ThermalPoint& thermal);

/// 1 / (1 + (1-α) ln(1-α) / (α ln(α/2))) for 0 < α < 1.
double second_highest_efficiency(double alpha);

/// α_F = (2u - 1)/(4u - 1), the parameter of the fermion k = 2 and k = 4u - 2 configurations.
double fermion_alpha(int u);

/// α_B = (2s + 2)/(4s + 3), the parameter of the boson N = 2 configuration.
double boson_alpha(int s);

/// Extremal configurations of one species, found by evaluating the closed forms.
/// "Configuration" means k = N mod 4u for fermions and N itself for bosons.
struct ExtremalReport {
    SpinStatistics spin;
    /// Configurations with W_0 = 0 (fermion k in [0, 4u), boson N in [0, scan_limit]).
    std::vector<long> zero_absorption;
    /// Among the zero-absorption set: where W_tot / (k_B T) = D is largest, and its value.
    std::vector<long> max_work;
    double max_work_over_kT = 0.0;
    /// Among the zero-absorption set: where the T-independent efficiency is largest.
    std::vector<long> highest_efficiency;
    double highest_efficiency_value = 0.0;
    std::vector<long> second_highest_efficiency;
    double second_highest_efficiency_value = 0.0;
    /// Boson maximum work exceeds the fermion maximum (ln 2) for every compared boson spin.
    bool boson_exceeds_fermion = true;
    /// Boson spins s for which the comparison failed.
    std::vector<int> comparison_counterexamples;
};

/// `boson_scan_limit` bounds the N scan for bosons and, for fermion reports,
/// the boson spins s = 0..boson_scan_limit compared against the fermion maximum.
ExtremalReport extremal_report(const SpinStatistics& spin, const WellGeometry& geometry,
                               long boson_scan_limit = 20);

}  // namespace szilard
