#pragma once

#include "szilard/physics.hpp"

namespace szilard {

/// Wall position after isothermal expansion.
///
/// `ratio` is l/(L - l). The two ends of the well are first-class values:
/// ratio 0 is the wall at the left end (l = 0), ratio +inf at the right end (l = L).
struct WallPosition {
    double ratio;
    Meters position;

    bool at_boundary() const;
};

/// |E_level(l) - E_level(L - l)| for a wall at l.
struct LevelSplit {
    long level;
    Joules delta_e;
};

/// The wall reached an end of the well; there is no level pair to compare.
class BoundaryWallError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Low-temperature wall balance for fermions with N = 4un + k and p particles
/// of the partially filled level on the left:
///     r³ = [un(2n+1) + 3p(n+1)] / [un(2n+1) + 3(k-p)(n+1)].
/// Returns +inf when only the denominator vanishes and 1 when both do.
double fermion_eq_ratio(int u, long n, long k, long p);

/// Boson wall balance r³ = m/(N - m); 0 for m = 0 and +inf for m = N.
double boson_eq_ratio(long m, long total);

/// Converts a balance ratio into a position l = L r/(1 + r).
WallPosition wall_position(double ratio, const WellGeometry& geometry);

/// Exact level splitting; throws BoundaryWallError for a wall at an end.
LevelSplit level_split(long level, const WallPosition& wall, const WellGeometry& geometry);

/// Large-n form (4π²ħ²/ML²)(n+1)|k/2u - p/u| of the splitting of level n+1.
Joules level_split_large_n(int u, long n, long k, long p, const WellGeometry& geometry);

}  // namespace szilard
