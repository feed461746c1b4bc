#include "szilard/boson.hpp"

#include "szilard/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace szilard::boson {

namespace {

bool use_log_space(const BosonFilling& filling) {
    return filling.particles + 4L * filling.s + 1 > kLogSpaceThreshold;
}

double log_of_ratio(const ExactCount& num, const ExactCount& den) {
    const double r = count_ratio(num, den);
    if (r > 0.0 && std::isfinite(r))
        return std::log(r);
    return log_count(num) - log_count(den);
}

/// C(m + 2s, 2s) for m = 0..N by the recurrence C(m+1+2s, 2s) = C(m+2s, 2s)(m+1+2s)/(m+1).
std::vector<ExactCount> side_counts(const BosonFilling& filling) {
    const long g = 2L * filling.s;
    std::vector<ExactCount> side(static_cast<std::size_t>(filling.particles + 1));
    side[0] = 1;
    for (long m = 0; m < filling.particles; ++m) {
        const auto i = static_cast<std::size_t>(m);
        side[i + 1] = side[i] * (m + 1 + g) / (m + 1);
    }
    return side;
}

/// ln[C(m+2s, 2s) C(N-m+2s, 2s)] - ln(denominator) for every m.
/// The denominator is given both exactly (small arguments) and as a logarithm.
std::vector<double> log_pair_ratios(const BosonFilling& filling, long den_a, long den_b) {
    const long N = filling.particles;
    const long g = 2L * filling.s;
    std::vector<double> out(static_cast<std::size_t>(N + 1));
    if (use_log_space(filling)) {
        const double log_den = log_binomial(den_a, den_b);
        for (long m = 0; m <= N; ++m)
            out[static_cast<std::size_t>(m)] =
                log_binomial(m + g, g) + log_binomial(N - m + g, g) - log_den;
        return out;
    }
    const auto side = side_counts(filling);
    const ExactCount den = binomial(den_a, den_b);
    for (long m = 0; m <= N; ++m)
        out[static_cast<std::size_t>(m)] =
            log_of_ratio(side[static_cast<std::size_t>(m)] * side[static_cast<std::size_t>(N - m)],
                         den);
    return out;
}

/// ln C(N+4s+1, 4s+1) - ln C(N+2s, N)
double log_slope_base(const BosonFilling& filling) {
    const long N = filling.particles;
    const long s = filling.s;
    if (use_log_space(filling))
        return log_binomial(N + 4 * s + 1, 4 * s + 1) - log_binomial(N + 2 * s, N);
    return log_of_ratio(binomial(N + 4 * s + 1, 4 * s + 1), binomial(N + 2 * s, N));
}

/// Balanced term (C(N/2+2s, 2s))² / C(N+4s+1, N) for even N.
double balanced_fraction(const BosonFilling& filling) {
    const long N = filling.particles;
    const long s = filling.s;
    if (use_log_space(filling))
        return std::exp(2.0 * log_binomial(N / 2 + 2 * s, 2 * s) - log_binomial(N + 4 * s + 1, N));
    const ExactCount half = binomial(N / 2 + 2 * s, 2 * s);
    return count_ratio(half * half, binomial(N + 4 * s + 1, N));
}

void require_range(const BosonFilling& filling, long m) {
    if (m < 0 || m > filling.particles)
        throw DomainError("boson: m=" + std::to_string(m) + " outside [0, N]");
}

double log_weight_impl(const BosonFilling& filling, long m, double log_pair_prefactor,
                       const WellGeometry& geometry, const ThermalPoint& thermal) {
    const long N = filling.particles;
    if (m == 0 || m == N)
        return 0.0;  // the wall reaches the end of the well
    if (N % 2 == 0 && 2 * m == N)
        return std::log(balanced_fraction(filling));
    const long minority = std::min(m, N - m);
    const Joules split = level_split(1, equilibrium_wall(filling, m, geometry), geometry).delta_e;
    return log_pair_prefactor - static_cast<double>(minority) * thermal.beta() * split;
}

}  // namespace

BosonFilling make_filling(long particles, int s) {
    if (particles < 0)
        throw DomainError("boson: particle number must be >= 0");
    if (s < 0)
        throw DomainError("boson: spin must be >= 0");
    return {particles, s};
}

MeasurementDistribution measurement_distribution(const BosonFilling& filling) {
    const long N = filling.particles;
    const long s = filling.s;
    MeasurementDistribution dist;
    dist.first_m = 0;
    dist.probabilities.resize(static_cast<std::size_t>(N + 1));
    if (use_log_space(filling)) {
        const auto logs = log_pair_ratios(filling, N + 4 * s + 1, 4 * s + 1);
        std::transform(logs.begin(), logs.end(), dist.probabilities.begin(),
                       [](double x) { return std::exp(x); });
        return dist;
    }
    const auto side = side_counts(filling);
    const ExactCount den = binomial(N + 4 * s + 1, 4 * s + 1);
    for (long m = 0; m <= N; ++m) {
        const auto i = static_cast<std::size_t>(m);
        dist.probabilities[i] = count_ratio(side[i] * side[static_cast<std::size_t>(N - m)], den);
    }
    return dist;
}

WallPosition equilibrium_wall(const BosonFilling& filling, long m, const WellGeometry& geometry) {
    require_range(filling, m);
    return wall_position(boson_eq_ratio(m, filling.particles), geometry);
}

double log_post_expansion_weight(const BosonFilling& filling, long m, const WellGeometry& geometry,
                                 const ThermalPoint& thermal) {
    require_range(filling, m);
    if (thermal.is_zero())
        throw ZeroTemperatureError("boson f_m* is undefined at T = 0; use work_coefficients");
    const long N = filling.particles;
    const long g = 2L * filling.s;
    double log_prefactor = 0.0;
    if (m != 0 && m != N && 2 * m != N) {
        if (use_log_space(filling))
            log_prefactor = log_binomial(m + g, g) + log_binomial(N - m + g, g) -
                            log_binomial(N + g, N);
        else
            log_prefactor = log_of_ratio(binomial(m + g, g) * binomial(N - m + g, g),
                                         binomial(N + g, N));
    }
    return log_weight_impl(filling, m, log_prefactor, geometry, thermal);
}

double post_expansion_weight(const BosonFilling& filling, long m, const WellGeometry& geometry,
                             const ThermalPoint& thermal) {
    const double log_weight = log_post_expansion_weight(filling, m, geometry, thermal);
    if (filling.particles % 2 == 0 && 2 * m == filling.particles && m != 0)
        return balanced_fraction(filling);
    return std::exp(log_weight);
}

std::vector<double> log_post_expansion_weights(const BosonFilling& filling,
                                               const WellGeometry& geometry,
                                               const ThermalPoint& thermal) {
    if (thermal.is_zero())
        throw ZeroTemperatureError("boson f_m* is undefined at T = 0; use work_coefficients");
    const long N = filling.particles;
    const auto prefactors = log_pair_ratios(filling, N + 2L * filling.s, N);
    std::vector<double> out(static_cast<std::size_t>(N + 1));
    for (long m = 0; m <= N; ++m)
        out[static_cast<std::size_t>(m)] =
            log_weight_impl(filling, m, prefactors[static_cast<std::size_t>(m)], geometry, thermal);
    return out;
}

WorkDecomposition work_coefficients(const BosonFilling& filling, const WellGeometry& geometry) {
    const long N = filling.particles;
    WorkDecomposition result;
    const double base = log_slope_base(filling);
    result.slope = N % 2 == 1 ? base : (1.0 - balanced_fraction(filling)) * base;
    const long last = N % 2 == 1 ? (N - 1) / 2 : N / 2 - 1;
    if (last < 1)
        return result;
    const auto dist = measurement_distribution(filling);
    for (long m = 1; m <= last; ++m) {
        const Joules split = level_split(1, equilibrium_wall(filling, m, geometry), geometry).delta_e;
        result.absorbed += 2.0 * static_cast<double>(m) * dist.at(m) * split;
    }
    return result;
}

Joules total_work(const BosonFilling& filling, const WellGeometry& geometry,
                  const ThermalPoint& thermal) {
    return work_coefficients(filling, geometry).total_work(thermal);
}

Joules total_work_from_weights(const BosonFilling& filling, const WellGeometry& geometry,
                               const ThermalPoint& thermal) {
    const auto dist = measurement_distribution(filling);
    const auto log_weights = log_post_expansion_weights(filling, geometry, thermal);
    return relative_entropy_work(dist, log_weights, thermal);
}

WorkDecomposition large_spin_limits(long particles, const WellGeometry& geometry) {
    if (particles < 0)
        throw DomainError("large_spin_limits: N must be >= 0");
    const long N = particles;
    const double n_ln2 = static_cast<double>(N) * std::numbers::ln2;
    WorkDecomposition result;
    if (N % 2 == 1) {
        result.slope = n_ln2;
    } else {
        const ExactCount all_states = ExactCount(1) << N;
        result.slope = (1.0 - count_ratio(binomial(N, N / 2), all_states)) * n_ln2;
    }
    const long last = N % 2 == 1 ? (N - 1) / 2 : N / 2 - 1;
    if (last < 1)
        return result;
    const ExactCount half_states = ExactCount(1) << (N - 1);
    for (long m = 1; m <= last; ++m) {
        const WallPosition wall = wall_position(boson_eq_ratio(m, N), geometry);
        result.absorbed += static_cast<double>(m) * count_ratio(binomial(N, m), half_states) *
                           level_split(1, wall, geometry).delta_e;
    }
    return result;
}

}  // namespace szilard::boson
