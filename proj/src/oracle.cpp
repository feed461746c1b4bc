#include "szilard/oracle.hpp"

#include "szilard/combinatorics.hpp"
#include "szilard/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace szilard::oracle {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kGridPoints = 64;
constexpr double kGoldenTolerance = 1e-10;
constexpr double kPolishTolerance = 1e-13;

double log_add(double a, double b) {
    if (a == kNegInf)
        return b;
    if (b == kNegInf)
        return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

void validate(long particles, const SpinStatistics& spin, const ThermalPoint& thermal,
              const OracleOptions& options) {
    if (particles < 0)
        throw DomainError("oracle: N must be >= 0");
    if (particles > options.max_particles)
        throw DomainError("oracle: N=" + std::to_string(particles) + " exceeds the limit " +
                          std::to_string(options.max_particles));
    if (spin.degeneracy() > options.max_degeneracy)
        throw DomainError("oracle: degeneracy " + std::to_string(spin.degeneracy()) +
                          " exceeds the limit " + std::to_string(options.max_degeneracy));
    if (options.initial_levels < 1 || options.max_levels < 1)
        throw DomainError("oracle: level cutoff must be >= 1");
    if (!(options.tolerance > 0.0))
        throw DomainError("oracle: tolerance must be positive");
    if (thermal.is_zero())
        throw ZeroTemperatureError("oracle: needs T > 0");
}

struct ConvergedBox {
    BoxPartition partition;
    ConvergenceReport convergence;
};

ConvergedBox converged_box(long count, Meters width, const SpinStatistics& spin,
                           const WellGeometry& geometry, const ThermalPoint& thermal,
                           const OracleOptions& options) {
    if (count == 0)
        return {{0.0, 0.0}, {1, 0.0}};
    auto spectrum = [&](long levels) {
        return BoxSpectrum{width, levels, spin.degeneracy(), spin.kind()};
    };
    if (options.max_levels < 2)
        throw ConvergenceError("oracle: a level cap of 1 leaves nothing to compare", 1,
                               std::numeric_limits<double>::infinity());
    long levels = std::max(2L, std::min(options.initial_levels, options.max_levels));
    BoxPartition previous = box_partition(count, spectrum(levels / 2), geometry, thermal);
    for (;;) {
        const BoxPartition current = box_partition(count, spectrum(levels), geometry, thermal);
        const double delta = current.log_z == kNegInf || previous.log_z == kNegInf
                                 ? std::numeric_limits<double>::infinity()
                                 : std::abs(current.log_z - previous.log_z);
        if (delta < options.tolerance)
            return {current, {levels, delta}};
        if (levels >= options.max_levels)
            throw ConvergenceError("oracle: ln Z did not settle within " +
                                       std::to_string(levels) + " levels (delta " +
                                       std::to_string(delta) + ")",
                                   levels, delta);
        previous = current;
        levels = std::min(2 * levels, options.max_levels);
    }
}

struct Equilibrium {
    WallPosition wall;
    ConvergenceReport convergence;
};

Equilibrium find_equilibrium(long m, long particles, const SpinStatistics& spin,
                             const WellGeometry& geometry, const ThermalPoint& thermal,
                             const OracleOptions& options) {
    if (m < 0 || m > particles)
        throw DomainError("oracle: m outside [0, N]");
    if (m == 0)
        return {wall_position(0.0, geometry), {}};
    if (m == particles)
        return {wall_position(std::numeric_limits<double>::infinity(), geometry), {}};

    const Meters L = geometry.length();
    ConvergenceReport report;
    auto eval = [&](Meters x) {
        auto sp = split_partition(m, particles, x, spin, geometry, thermal, options);
        report.merge(sp.convergence);
        return sp;
    };

    int best = 1;
    double best_value = kNegInf;
    for (int i = 1; i < kGridPoints; ++i) {
        const double v = eval(L * i / kGridPoints).log_z;
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }

    // Golden-section on ln Z_m inside the neighbouring grid cells.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = L * (best - 1) / kGridPoints;
    double b = L * (best + 1) / kGridPoints;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval(c).log_z;
    double fd = eval(d).log_z;
    while (b - a > kGoldenTolerance * L) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c).log_z;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d).log_z;
        }
    }

    // ln Z_m is flat to rounding near its maximum; finish on the sign of the gradient.
    const double lo_limit = L * std::max(best - 1, 0) / kGridPoints;
    const double hi_limit = L * (best + 1) / kGridPoints;
    const double centre = 0.5 * (a + b);
    double width = 1e-8 * L;
    double lo = centre;
    double hi = centre;
    for (;;) {
        lo = centre - width > lo_limit ? centre - width : std::nextafter(lo_limit, hi_limit);
        hi = centre + width < hi_limit ? centre + width : std::nextafter(hi_limit, lo_limit);
        const bool rising = eval(lo).log_z_gradient > 0.0;
        const bool falling = eval(hi).log_z_gradient < 0.0;
        if (rising && falling)
            break;
        if (centre - width <= lo_limit && centre + width >= hi_limit) {
            // Gradient has no sign change in the bracket; keep the golden result.
            return {wall_position(centre / (L - centre), geometry), report};
        }
        width *= 10.0;
    }
    while (hi - lo > kPolishTolerance * L) {
        const double mid = 0.5 * (lo + hi);
        if (eval(mid).log_z_gradient > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    return {wall_position(x / (L - x), geometry), report};
}

}  // namespace

void ConvergenceReport::merge(const ConvergenceReport& other) {
    levels = std::max(levels, other.levels);
    achieved_delta = std::max(achieved_delta, other.achieved_delta);
}

BoxPartition box_partition(long count, const BoxSpectrum& spectrum, const WellGeometry& geometry,
                           const ThermalPoint& thermal) {
    if (count < 0)
        throw DomainError("box_partition: count must be >= 0");
    if (spectrum.level_cutoff < 1)
        throw DomainError("box_partition: level cutoff must be >= 1");
    if (spectrum.degeneracy < 1)
        throw DomainError("box_partition: degeneracy must be >= 1");
    if (!(spectrum.width > 0.0))
        throw DomainError("box_partition: width must be positive");
    const double beta = thermal.beta();
    if (count == 0)
        return {0.0, 0.0};

    const long g = spectrum.degeneracy;
    const bool fermions = spectrum.statistics == Statistics::Fermion;
    std::vector<double> log_ways(static_cast<std::size_t>(count + 1), kNegInf);
    for (long a = 0; a <= count; ++a) {
        if (fermions && a > g)
            break;
        log_ways[static_cast<std::size_t>(a)] =
            fermions ? log_binomial(g, a) : log_binomial(g + a - 1, a);
    }

    // log_z[a]: a particles in the levels seen so far; log_e[a]: same with the energy as weight.
    std::vector<double> log_z(static_cast<std::size_t>(count + 1), kNegInf);
    std::vector<double> log_e(static_cast<std::size_t>(count + 1), kNegInf);
    log_z[0] = 0.0;
    for (long n = 1; n <= spectrum.level_cutoff; ++n) {
        const Joules e = level_energy(n, spectrum.width, geometry);
        for (long a = count; a >= 1; --a) {
            auto z = log_z[static_cast<std::size_t>(a)];
            auto en = log_e[static_cast<std::size_t>(a)];
            for (long b = 1; b <= a; ++b) {
                const double w = log_ways[static_cast<std::size_t>(b)];
                const double rest_z = log_z[static_cast<std::size_t>(a - b)];
                if (w == kNegInf || rest_z == kNegInf)
                    continue;
                const double factor = w - beta * static_cast<double>(b) * e;
                z = log_add(z, rest_z + factor);
                const double rest_e = log_e[static_cast<std::size_t>(a - b)];
                en = log_add(en, factor + log_add(rest_e, rest_z + std::log(static_cast<double>(b) * e)));
            }
            log_z[static_cast<std::size_t>(a)] = z;
            log_e[static_cast<std::size_t>(a)] = en;
        }
    }
    const double lz = log_z[static_cast<std::size_t>(count)];
    if (lz == kNegInf)
        return {kNegInf, 0.0};   // the cutoff cannot hold `count` fermions
    return {lz, std::exp(log_e[static_cast<std::size_t>(count)] - lz)};
}

SplitPartition split_partition(long m, long particles, Meters wall, const SpinStatistics& spin,
                               const WellGeometry& geometry, const ThermalPoint& thermal,
                               const OracleOptions& options) {
    validate(particles, spin, thermal, options);
    if (m < 0 || m > particles)
        throw DomainError("split_partition: m outside [0, N]");
    const Meters L = geometry.length();
    if (!(wall > 0.0 && wall < L))
        throw DomainError("split_partition: wall must lie strictly inside the well");
    const auto left = converged_box(m, wall, spin, geometry, thermal, options);
    const auto right = converged_box(particles - m, L - wall, spin, geometry, thermal, options);
    const double beta = thermal.beta();
    SplitPartition out;
    out.log_z = left.partition.log_z + right.partition.log_z;
    out.log_z_gradient = 2.0 * beta * left.partition.mean_energy / wall -
                         2.0 * beta * right.partition.mean_energy / (L - wall);
    out.convergence = left.convergence;
    out.convergence.merge(right.convergence);
    return out;
}

double ExactEnsemble::log_total() const {
    double total = kNegInf;
    for (double v : log_z)
        total = log_add(total, v);
    return total;
}

MeasurementDistribution ExactEnsemble::distribution() const {
    const double total = log_total();
    MeasurementDistribution dist;
    dist.first_m = 0;
    dist.probabilities.reserve(log_z.size());
    for (double v : log_z)
        dist.probabilities.push_back(std::exp(v - total));
    return dist;
}

ExactEnsemble exact_ensemble(long particles, Meters wall, const SpinStatistics& spin,
                             const WellGeometry& geometry, const ThermalPoint& thermal,
                             const OracleOptions& options) {
    ExactEnsemble out;
    out.wall = wall;
    for (long m = 0; m <= particles; ++m) {
        const auto sp = split_partition(m, particles, wall, spin, geometry, thermal, options);
        out.log_z.push_back(sp.log_z);
        out.convergence.merge(sp.convergence);
    }
    return out;
}

MeasurementDistribution exact_distribution(long particles, Meters wall, const SpinStatistics& spin,
                                           const WellGeometry& geometry,
                                           const ThermalPoint& thermal,
                                           const OracleOptions& options) {
    return exact_ensemble(particles, wall, spin, geometry, thermal, options).distribution();
}

WallPosition exact_equilibrium(long m, long particles, const SpinStatistics& spin,
                               const WellGeometry& geometry, const ThermalPoint& thermal,
                               const OracleOptions& options) {
    validate(particles, spin, thermal, options);
    return find_equilibrium(m, particles, spin, geometry, thermal, options).wall;
}

ExactWork exact_total_work(long particles, const SpinStatistics& spin,
                           const WellGeometry& geometry, const ThermalPoint& thermal,
                           Meters insertion, const OracleOptions& options) {
    validate(particles, spin, thermal, options);
    ExactWork out;
    const auto at_insertion = exact_ensemble(particles, insertion, spin, geometry, thermal, options);
    out.convergence = at_insertion.convergence;
    out.distribution = at_insertion.distribution();

    double sum = 0.0;
    for (long m = 0; m <= particles; ++m) {
        const auto eq = find_equilibrium(m, particles, spin, geometry, thermal, options);
        out.convergence.merge(eq.convergence);
        out.equilibria.push_back(eq.wall);
        double log_weight = 0.0;
        if (!eq.wall.at_boundary()) {
            const auto relaxed =
                exact_ensemble(particles, eq.wall.position, spin, geometry, thermal, options);
            out.convergence.merge(relaxed.convergence);
            log_weight = relaxed.log_z[static_cast<std::size_t>(m)] - relaxed.log_total();
        }
        out.post_weights.push_back(std::exp(log_weight));
        const double f = out.distribution.at(m);
        if (f > 0.0)
            sum += f * (std::log(f) - log_weight);
    }
    out.total_work = -thermal.kT() * sum;

    if (spin.is_fermion()) {
        const auto filling = fermion::decompose(particles, spin.u());
        for (long m = 0; m <= particles; ++m)
            if (!filling.in_support(m))
                out.leakage += out.distribution.at(m);
    }
    return out;
}

}  // namespace szilard::oracle
