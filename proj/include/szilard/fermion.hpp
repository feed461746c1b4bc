#pragma once

#include "szilard/equilibrium.hpp"
#include "szilard/physics.hpp"
#include "szilard/types.hpp"

#include <vector>

namespace szilard::fermion {

/// Which occupation picture counts the partially filled level: particles
/// for k < 2u, holes for k >= 2u.
enum class Representation { Particle, Hole };

/// N = 4un + k fermions with u = s + 1/2 and 0 <= k < 4u.
///
/// The low-temperature support of m (particles left of the wall) is indexed
/// by j: j = p = m - 2un for particles and j = q = 2u(n+1) - m for holes,
/// with 0 <= j <= effective_k().
struct FermionFilling {
    long particles;
    int u;
    long n;
    long k;
    Representation representation;

    /// k in the particle picture, 4u - k in the hole picture.
    long effective_k() const;
    long support_first() const;
    long support_last() const;
    bool in_support(long m) const { return m >= support_first() && m <= support_last(); }
    /// p or q for a supported m.
    long index_of(long m) const;
    long m_of_index(long j) const;
    /// Particles of level n+1 on the left, p = m - 2un, in either picture.
    long left_partial(long m) const { return m - 2L * u * n; }
};

FermionFilling decompose(long particles, int u);

MeasurementDistribution measurement_distribution(const FermionFilling& filling);

/// Analytic equilibrium wall for m particles on the left (m in the support).
WallPosition equilibrium_wall(const FermionFilling& filling, long m, const WellGeometry& geometry);

/// f_m* after the wall relaxed. Requires T > 0 and m in the support.
double post_expansion_weight(const FermionFilling& filling, long m, const WellGeometry& geometry,
                             const ThermalPoint& thermal);

/// ln f_m*; stays finite where f_m* itself underflows.
double log_post_expansion_weight(const FermionFilling& filling, long m,
                                 const WellGeometry& geometry, const ThermalPoint& thermal);

/// ln f_m* for every m of the support, in support order.
std::vector<double> log_post_expansion_weights(const FermionFilling& filling,
                                               const WellGeometry& geometry,
                                               const ThermalPoint& thermal);

/// Slope D_F and zero-temperature absorbed work W_0F.
WorkDecomposition work_coefficients(const FermionFilling& filling, const WellGeometry& geometry);

/// D_F k_B T - W_0F; legal at T = 0.
Joules total_work(const FermionFilling& filling, const WellGeometry& geometry,
                  const ThermalPoint& thermal);

/// The same work summed term by term, -k_B T Σ f_m ln(f_m/f_m*). Requires T > 0.
Joules total_work_from_weights(const FermionFilling& filling, const WellGeometry& geometry,
                               const ThermalPoint& thermal);

/// W_0F / N; N must be positive.
Joules average_absorbed_work(const FermionFilling& filling, const WellGeometry& geometry);

/// n → ∞ limit of W_0F / N, which depends on (u, k) only.
Joules average_absorbed_work_limit(int u, long k, const WellGeometry& geometry);

}  // namespace szilard::fermion
