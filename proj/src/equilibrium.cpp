#include "szilard/equilibrium.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace szilard {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cube_root_ratio(long double numerator, long double denominator) {
    if (denominator == 0.0L)
        return numerator == 0.0L ? 1.0 : kInf;
    if (numerator == denominator)
        return 1.0;
    return static_cast<double>(std::cbrt(numerator / denominator));
}

}  // namespace

bool WallPosition::at_boundary() const { return ratio == 0.0 || std::isinf(ratio); }

double fermion_eq_ratio(int u, long n, long k, long p) {
    if (u < 1)
        throw DomainError("fermion_eq_ratio: u must be >= 1");
    if (n < 0)
        throw DomainError("fermion_eq_ratio: n must be >= 0");
    if (p < 0 || p > k)
        throw DomainError("fermion_eq_ratio: need 0 <= p <= k");
    const long long shell = static_cast<long long>(u) * n * (2 * n + 1);
    const long long left = shell + 3LL * p * (n + 1);
    const long long right = shell + 3LL * (k - p) * (n + 1);
    return cube_root_ratio(left, right);
}

double boson_eq_ratio(long m, long total) {
    if (total < 1)
        throw DomainError("boson_eq_ratio: N must be >= 1");
    if (m < 0 || m > total)
        throw DomainError("boson_eq_ratio: need 0 <= m <= N");
    return cube_root_ratio(m, total - m);
}

WallPosition wall_position(double ratio, const WellGeometry& geometry) {
    if (!(ratio >= 0.0))
        throw DomainError("wall_position: ratio must be >= 0 or +inf");
    const Meters length = geometry.length();
    if (std::isinf(ratio))
        return {ratio, length};
    if (ratio == 1.0)
        return {ratio, 0.5 * length};
    return {ratio, length * ratio / (1.0 + ratio)};
}

LevelSplit level_split(long level, const WallPosition& wall, const WellGeometry& geometry) {
    if (level < 1)
        throw DomainError("level_split: level must be >= 1");
    if (wall.at_boundary())
        throw BoundaryWallError("level_split: the wall reached the end of the well");
    if (wall.ratio == 1.0)
        return {level, 0.0};
    // |1/l² - 1/(L-l)²| L² = (1 + r)³ |1 - r| / r² with r = l/(L - l).
    const double r = wall.ratio;
    const double shape = (1.0 + r) * (1.0 + r) * (1.0 + r) * std::abs(1.0 - r) / (r * r);
    const double nn = static_cast<double>(level);
    return {level, nn * nn * reference_energy(geometry) * shape};
}

Joules level_split_large_n(int u, long n, long k, long p, const WellGeometry& geometry) {
    if (u < 1)
        throw DomainError("level_split_large_n: u must be >= 1");
    if (n < 1)
        throw DomainError("level_split_large_n: needs n >= 1");
    // 4π²ħ²/(ML²) = 8 E0
    const double imbalance = std::abs(static_cast<double>(k - 2 * p)) / (2.0 * u);
    return 8.0 * reference_energy(geometry) * static_cast<double>(n + 1) * imbalance;
}

}  // namespace szilard
