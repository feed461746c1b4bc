#pragma once

#include "szilard/physics.hpp"

#include <span>
#include <vector>

namespace szilard {

/// Probabilities f_m of finding m particles left of the wall, stored over a
/// contiguous support [first_m, first_m + size).
struct MeasurementDistribution {
    long first_m = 0;
    std::vector<double> probabilities;

    long last_m() const { return first_m + static_cast<long>(probabilities.size()) - 1; }
    bool contains(long m) const { return m >= first_m && m <= last_m(); }
    /// f_m, zero outside the support.
    double at(long m) const;
    double total() const;
};

/// Affine low-temperature work law W_tot(T) = slope k_B T - absorbed.
struct WorkDecomposition {
    double slope = 0.0;      // D, dimensionless
    Joules absorbed = 0.0;   // W_0

    Joules total_work(const ThermalPoint& thermal) const {
        return slope * thermal.kT() - absorbed;
    }
};

/// Cycle work -k_B T Σ f_m (ln f_m - ln f_m*) with `log_weights[i]` = ln f* of
/// the i-th support entry. Zero-probability entries contribute nothing.
Joules relative_entropy_work(const MeasurementDistribution& distribution,
                             std::span<const double> log_weights, const ThermalPoint& thermal);

}  // namespace szilard
