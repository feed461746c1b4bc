#include "szilard/fermion.hpp"

#include "szilard/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace szilard::fermion {

namespace {

/// C(2u, j) C(2u, ke - j): configurations of the split level with j on the left.
ExactCount split_count(int u, long ke, long j) {
    return binomial(2L * u, j) * binomial(2L * u, ke - j);
}

/// f_j = C(2u, j) C(2u, ke - j) / C(4u, ke)
double support_probability(int u, long ke, long j) {
    return count_ratio(split_count(u, ke, j), binomial(4L * u, ke));
}

/// D_F as a function of (u, effective k) only.
double slope(int u, long ke) {
    const double log_ratio =
        std::log(count_ratio(binomial(4L * u, ke), binomial(2L * u, ke)));
    if (ke % 2 == 1)
        return log_ratio;
    const ExactCount central = binomial(2L * u, ke / 2);
    return (1.0 - count_ratio(central * central, binomial(4L * u, ke))) * log_ratio;
}

/// Last index of the W_0 sums: (ke-1)/2 for odd ke, ke/2 - 1 for even ke.
long last_absorbing_index(long ke) { return ke % 2 == 1 ? (ke - 1) / 2 : ke / 2 - 1; }

void require_support(const FermionFilling& filling, long m) {
    if (!filling.in_support(m))
        throw DomainError("fermion: m=" + std::to_string(m) +
                          " lies outside the low-temperature support");
}

Joules split_at(const FermionFilling& filling, long m, const WellGeometry& geometry) {
    return level_split(filling.n + 1, equilibrium_wall(filling, m, geometry), geometry).delta_e;
}

}  // namespace

long FermionFilling::effective_k() const {
    return representation == Representation::Particle ? k : 4L * u - k;
}

long FermionFilling::support_first() const {
    return representation == Representation::Particle ? 2L * u * n : 2L * u * n + k - 2L * u;
}

long FermionFilling::support_last() const {
    return representation == Representation::Particle ? 2L * u * n + k : 2L * u * (n + 1);
}

long FermionFilling::index_of(long m) const {
    return representation == Representation::Particle ? m - 2L * u * n : 2L * u * (n + 1) - m;
}

long FermionFilling::m_of_index(long j) const {
    return representation == Representation::Particle ? 2L * u * n + j : 2L * u * (n + 1) - j;
}

FermionFilling decompose(long particles, int u) {
    if (particles < 0)
        throw DomainError("fermion: particle number must be >= 0");
    if (u < 1)
        throw DomainError("fermion: u must be >= 1");
    const long period = 4L * u;
    const long n = particles / period;
    const long k = particles % period;
    const auto rep = k < 2L * u ? Representation::Particle : Representation::Hole;
    return {particles, u, n, k, rep};
}

MeasurementDistribution measurement_distribution(const FermionFilling& filling) {
    const long ke = filling.effective_k();
    MeasurementDistribution dist;
    dist.first_m = filling.support_first();
    dist.probabilities.resize(static_cast<std::size_t>(ke + 1));
    for (long m = filling.support_first(); m <= filling.support_last(); ++m)
        dist.probabilities[static_cast<std::size_t>(m - dist.first_m)] =
            support_probability(filling.u, ke, filling.index_of(m));
    return dist;
}

WallPosition equilibrium_wall(const FermionFilling& filling, long m, const WellGeometry& geometry) {
    require_support(filling, m);
    const double ratio = fermion_eq_ratio(filling.u, filling.n, filling.k, filling.left_partial(m));
    return wall_position(ratio, geometry);
}

double log_post_expansion_weight(const FermionFilling& filling, long m,
                                 const WellGeometry& geometry, const ThermalPoint& thermal) {
    require_support(filling, m);
    if (thermal.is_zero())
        throw ZeroTemperatureError("fermion f_m* is undefined at T = 0; use work_coefficients");
    const int u = filling.u;
    const long ke = filling.effective_k();
    const long j = filling.index_of(m);

    if (ke % 2 == 0 && 2 * j == ke) {
        // Balanced loading: the wall stays at L/2.
        const ExactCount central = binomial(2L * u, ke / 2);
        return std::log(count_ratio(central * central, binomial(4L * u, ke)));
    }
    const long minority = std::min(j, ke - j);
    if (minority == 0)
        return 0.0;  // includes the wall reaching the end of the well
    const double prefactor = count_ratio(split_count(u, ke, j), binomial(2L * u, ke));
    return std::log(prefactor) -
           static_cast<double>(minority) * thermal.beta() * split_at(filling, m, geometry);
}

double post_expansion_weight(const FermionFilling& filling, long m, const WellGeometry& geometry,
                             const ThermalPoint& thermal) {
    const double log_weight = log_post_expansion_weight(filling, m, geometry, thermal);
    const long ke = filling.effective_k();
    if (ke % 2 == 0 && filling.index_of(m) == ke / 2)
        return support_probability(filling.u, ke, ke / 2);
    return std::exp(log_weight);
}

std::vector<double> log_post_expansion_weights(const FermionFilling& filling,
                                               const WellGeometry& geometry,
                                               const ThermalPoint& thermal) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(filling.effective_k() + 1));
    for (long m = filling.support_first(); m <= filling.support_last(); ++m)
        out.push_back(log_post_expansion_weight(filling, m, geometry, thermal));
    return out;
}

WorkDecomposition work_coefficients(const FermionFilling& filling, const WellGeometry& geometry) {
    const long ke = filling.effective_k();
    WorkDecomposition result;
    result.slope = slope(filling.u, ke);
    for (long j = 1; j <= last_absorbing_index(ke); ++j) {
        const long m = filling.m_of_index(j);
        result.absorbed += 2.0 * static_cast<double>(j) * support_probability(filling.u, ke, j) *
                           split_at(filling, m, geometry);
    }
    return result;
}

Joules total_work(const FermionFilling& filling, const WellGeometry& geometry,
                  const ThermalPoint& thermal) {
    return work_coefficients(filling, geometry).total_work(thermal);
}

Joules total_work_from_weights(const FermionFilling& filling, const WellGeometry& geometry,
                               const ThermalPoint& thermal) {
    const auto dist = measurement_distribution(filling);
    const auto log_weights = log_post_expansion_weights(filling, geometry, thermal);
    return relative_entropy_work(dist, log_weights, thermal);
}

Joules average_absorbed_work(const FermionFilling& filling, const WellGeometry& geometry) {
    if (filling.particles < 1)
        throw DomainError("average_absorbed_work: needs N >= 1");
    return work_coefficients(filling, geometry).absorbed / static_cast<double>(filling.particles);
}

Joules average_absorbed_work_limit(int u, long k, const WellGeometry& geometry) {
    if (u < 1)
        throw DomainError("average_absorbed_work_limit: u must be >= 1");
    if (k < 0 || k >= 4L * u)
        throw DomainError("average_absorbed_work_limit: need 0 <= k < 4u");
    const long ke = k < 2L * u ? k : 4L * u - k;
    double sum = 0.0;
    for (long j = 1; j <= last_absorbing_index(ke); ++j)
        sum += static_cast<double>(j) * support_probability(u, ke, j) *
               static_cast<double>(ke - 2 * j);
    // π²ħ²/(ML²) = 2 E0
    return 2.0 * reference_energy(geometry) * sum / (static_cast<double>(u) * u);
}

}  // namespace szilard::fermion
