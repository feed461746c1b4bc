#pragma once

#include "szilard/equilibrium.hpp"
#include "szilard/physics.hpp"
#include "szilard/types.hpp"

#include <stdexcept>
#include <vector>

namespace szilard::oracle {

/// Limits and convergence settings of the brute-force canonical ensemble.
struct OracleOptions {
    long initial_levels = 64;
    /// Ceiling on the level cutoff reached by doubling.
    long max_levels = 1024;
    /// Required change of every ln Z between successive cutoffs.
    double tolerance = 1e-9;
    long max_particles = 6;
    int max_degeneracy = 12;
};

/// Level cutoff exhausted before ln Z settled.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, long levels, double achieved_delta)
        : std::runtime_error(what), levels_(levels), achieved_delta_(achieved_delta) {}

    long levels() const { return levels_; }
    double achieved_delta() const { return achieved_delta_; }

private:
    long levels_;
    double achieved_delta_;
};

/// Worst case over every box evaluated for a result.
struct ConvergenceReport {
    long levels = 0;
    double achieved_delta = 0.0;

    void merge(const ConvergenceReport& other);
};

/// Levels 1..level_cutoff of a box of the given width, each g-fold degenerate.
struct BoxSpectrum {
    Meters width;
    long level_cutoff;
    int degeneracy;
    Statistics statistics;
};

/// ln Z of `count` particles in one box and the canonical mean energy.
struct BoxPartition {
    double log_z = 0.0;
    Joules mean_energy = 0.0;
};

/// Canonical partition function at a fixed level cutoff; ln Z = -inf when the
/// cutoff cannot hold `count` fermions.
BoxPartition box_partition(long count, const BoxSpectrum& spectrum, const WellGeometry& geometry,
                           const ThermalPoint& thermal);

/// ln Z_m(l) of m particles left of a wall at l and N - m on the right, and
/// its derivative with respect to l (zero at the pressure balance).
struct SplitPartition {
    double log_z = 0.0;
    double log_z_gradient = 0.0;   // per meter
    ConvergenceReport convergence;
};

SplitPartition split_partition(long m, long particles, Meters wall, const SpinStatistics& spin,
                               const WellGeometry& geometry, const ThermalPoint& thermal,
                               const OracleOptions& options = {});

/// ln Z_m(l) for m = 0..N at one wall position.
struct ExactEnsemble {
    Meters wall = 0.0;
    std::vector<double> log_z;
    ConvergenceReport convergence;

    double log_total() const;
    MeasurementDistribution distribution() const;
};

ExactEnsemble exact_ensemble(long particles, Meters wall, const SpinStatistics& spin,
                             const WellGeometry& geometry, const ThermalPoint& thermal,
                             const OracleOptions& options = {});

/// f_m = Z_m / Z over the full range [0, N].
MeasurementDistribution exact_distribution(long particles, Meters wall, const SpinStatistics& spin,
                                           const WellGeometry& geometry,
                                           const ThermalPoint& thermal,
                                           const OracleOptions& options = {});

/// Wall position maximizing ln Z_m(l); m in {0, N} gives the boundary.
WallPosition exact_equilibrium(long m, long particles, const SpinStatistics& spin,
                               const WellGeometry& geometry, const ThermalPoint& thermal,
                               const OracleOptions& options = {});

struct ExactWork {
    Joules total_work = 0.0;
    MeasurementDistribution distribution;
    /// Wall and f_m* after expansion, per m = 0..N.
    std::vector<WallPosition> equilibria;
    std::vector<double> post_weights;
    /// Exact probability at the insertion point carried by m outside the
    /// low-temperature support of the closed forms.
    double leakage = 0.0;
    ConvergenceReport convergence;
};

/// -k_B T Σ f_m ln(f_m / f_m*) with f_m taken at `insertion` and
/// f_m* = Z_m(l_m) / Z(l_m) at each exact equilibrium l_m.
ExactWork exact_total_work(long particles, const SpinStatistics& spin,
                           const WellGeometry& geometry, const ThermalPoint& thermal,
                           Meters insertion, const OracleOptions& options = {});

}  // namespace szilard::oracle
