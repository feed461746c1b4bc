#pragma once

#include "szilard/equilibrium.hpp"
#include "szilard/physics.hpp"
#include "szilard/types.hpp"

#include <optional>
#include <vector>

namespace szilard {

// Species-independent entry points. Each call forwards to the fermion or
// boson closed forms according to `spin.kind()`.

MeasurementDistribution measurement_distribution(const SpinStatistics& spin, long particles);

/// ln f_m* aligned with measurement_distribution(spin, particles). Requires T > 0.
std::vector<double> log_post_expansion_weights(const SpinStatistics& spin, long particles,
                                               const WellGeometry& geometry,
                                               const ThermalPoint& thermal);

WorkDecomposition work_coefficients(const SpinStatistics& spin, long particles,
                                    const WellGeometry& geometry);

Joules total_work(const SpinStatistics& spin, long particles, const WellGeometry& geometry,
                  const ThermalPoint& thermal);

/// Analytic equilibrium wall for m on the left; empty when m has zero
/// low-temperature probability.
std::optional<WallPosition> analytic_equilibrium(const SpinStatistics& spin, long particles, long m,
                                                 const WellGeometry& geometry);

}  // namespace szilard
