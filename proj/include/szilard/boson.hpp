#pragma once

#include "szilard/equilibrium.hpp"
#include "szilard/physics.hpp"
#include "szilard/types.hpp"

#include <vector>

namespace szilard::boson {

/// N bosons of integer spin s; every m in [0, N] is reachable.
struct BosonFilling {
    long particles;
    int s;

    int degeneracy() const { return 2 * s + 1; }
};

BosonFilling make_filling(long particles, int s);

/// f_m = C(m+2s, 2s) C(N-m+2s, 2s) / C(N+4s+1, 4s+1) over m = 0..N.
MeasurementDistribution measurement_distribution(const BosonFilling& filling);

WallPosition equilibrium_wall(const BosonFilling& filling, long m, const WellGeometry& geometry);

double post_expansion_weight(const BosonFilling& filling, long m, const WellGeometry& geometry,
                             const ThermalPoint& thermal);

double log_post_expansion_weight(const BosonFilling& filling, long m, const WellGeometry& geometry,
                                 const ThermalPoint& thermal);

std::vector<double> log_post_expansion_weights(const BosonFilling& filling,
                                               const WellGeometry& geometry,
                                               const ThermalPoint& thermal);

/// Slope D_B and absorbed work W_0B.
WorkDecomposition work_coefficients(const BosonFilling& filling, const WellGeometry& geometry);

Joules total_work(const BosonFilling& filling, const WellGeometry& geometry,
                  const ThermalPoint& thermal);

/// Term-by-term -k_B T Σ f_m ln(f_m/f_m*). Requires T > 0.
Joules total_work_from_weights(const BosonFilling& filling, const WellGeometry& geometry,
                               const ThermalPoint& thermal);

/// s → ∞ values of D_B and W_0B at fixed N.
WorkDecomposition large_spin_limits(long particles, const WellGeometry& geometry);

}  // namespace szilard::boson
