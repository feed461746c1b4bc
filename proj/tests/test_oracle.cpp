#include "reference_values.hpp"
#include "szilard/engine.hpp"
#include "szilard/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

using namespace szilard;
using namespace szilard::oracle;

namespace {

const WellGeometry kWell = WellGeometry::nanometer_well();
const Meters kL = kWell.length();

ThermalPoint at_ratio(double r) {
    return ThermalPoint::from_energy_ratio(r, reference::kE0);
}

/// Z and <E> by listing every occupation of `levels` levels with `g` states each.
std::pair<double, double> enumerate_box(long count, Meters width, long levels, int g,
                                        bool fermions, const ThermalPoint& t) {
    const long states = levels * g;
    double z = 0.0;
    double ze = 0.0;
    // Occupation numbers per single-particle state, nondecreasing state index for bosons.
    std::function<void(long, long, double)> place = [&](long first, long left, double energy) {
        if (left == 0) {
            const double w = std::exp(-t.beta() * energy);
            z += w;
            ze += w * energy;
            return;
        }
        for (long st = first; st < states; ++st)
            place(fermions ? st + 1 : st, left - 1, energy + level_energy(st / g + 1, width, kWell));
    };
    place(0, count, 0.0);
    return {std::log(z), ze / z};
}

}  // namespace

TEST_CASE("box partition against enumeration") {
    const auto t = at_ratio(3.0);
    for (bool fermions : {true, false}) {
        for (int g : {1, 2, 3}) {
            for (long count = 0; count <= 4; ++count) {
                const BoxSpectrum sp{0.7 * kL, 5, g, fermions ? Statistics::Fermion : Statistics::Boson};
                const auto dp = box_partition(count, sp, kWell, t);
                const auto [lz, mean] = enumerate_box(count, sp.width, 5, g, fermions, t);
                CHECK(dp.log_z == doctest::Approx(lz).epsilon(1e-12));
                CHECK(dp.mean_energy == doctest::Approx(mean).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("box partition limits") {
    const auto t = at_ratio(0.01);
    const BoxSpectrum two{kL, 64, 2, Statistics::Fermion};
    CHECK(box_partition(0, two, kWell, t).log_z == 0.0);
    const Joules e1 = level_energy(1, kL, kWell);
    const Joules e2 = level_energy(2, kL, kWell);
    CHECK(box_partition(1, two, kWell, t).log_z + t.beta() * e1 ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-12));
    CHECK(box_partition(3, two, kWell, t).log_z + t.beta() * (2 * e1 + e2) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-12));
    const BoxSpectrum one_level{kL, 1, 1, Statistics::Fermion};
    CHECK(std::isinf(box_partition(2, one_level, kWell, t).log_z));
    CHECK_THROWS_AS(box_partition(1, two, kWell, ThermalPoint(0.0)), ZeroTemperatureError);
}

TEST_CASE("split partition symmetries") {
    const auto spin = SpinStatistics::fermion(3);
    const auto t = at_ratio(0.7);
    const auto z1 = split_partition(1, 4, kL / 2, spin, kWell, t);
    const auto z3 = split_partition(3, 4, kL / 2, spin, kWell, t);
    CHECK(z1.log_z == z3.log_z);
    const auto a = split_partition(1, 4, 0.3 * kL, spin, kWell, t);
    const auto b = split_partition(3, 4, kL - 0.3 * kL, spin, kWell, t);
    CHECK(a.log_z == doctest::Approx(b.log_z).epsilon(1e-13));
    CHECK(a.log_z_gradient == doctest::Approx(-b.log_z_gradient).epsilon(1e-10));
    const auto right_only = split_partition(0, 4, 0.3 * kL, spin, kWell, t);
    const BoxSpectrum sp{0.7 * kL, 1024, 4, Statistics::Fermion};
    CHECK(right_only.log_z == doctest::Approx(box_partition(4, sp, kWell, t).log_z).epsilon(1e-12));
    CHECK_THROWS_AS(split_partition(1, 4, 0.0, spin, kWell, t), DomainError);
    CHECK_THROWS_AS(split_partition(5, 4, kL / 2, spin, kWell, t), DomainError);
}

TEST_CASE("gradient matches a finite difference") {
    const auto spin = SpinStatistics::boson(2);
    const auto t = at_ratio(2.0);
    const Meters x = 0.37 * kL;
    const Meters h = 1e-6 * kL;
    const double up = split_partition(2, 5, x + h, spin, kWell, t).log_z;
    const double down = split_partition(2, 5, x - h, spin, kWell, t).log_z;
    CHECK(split_partition(2, 5, x, spin, kWell, t).log_z_gradient ==
          doctest::Approx((up - down) / (2 * h)).epsilon(1e-6));
}

TEST_CASE("exact distributions at low temperature") {
    const auto half = exact_distribution(1, kL / 2, SpinStatistics::fermion(1), kWell, at_ratio(5.0));
    CHECK(half.at(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(half.at(1) == doctest::Approx(0.5).epsilon(1e-14));

    const auto pair = exact_distribution(2, kL / 2, SpinStatistics::fermion(1), kWell, at_ratio(0.1));
    CHECK(pair.at(1) / (pair.at(0) + pair.at(2)) == doctest::Approx(2.0).epsilon(1e-9));

    const auto bosons = exact_distribution(3, kL / 2, SpinStatistics::boson(0), kWell, at_ratio(0.05));
    for (long m = 0; m <= 3; ++m)
        CHECK(std::abs(bosons.at(m) - 0.25) < 1e-3);

    const auto nine = exact_distribution(3, kL / 2, SpinStatistics::fermion(9), kWell, at_ratio(0.05));
    CHECK(std::abs(nine.at(1) - 0.394737) < 1e-3);
    CHECK(nine.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact equilibria") {
    const auto t = at_ratio(0.05);
    CHECK(std::abs(exact_equilibrium(2, 4, SpinStatistics::boson(2), kWell, at_ratio(1.0)).position -
                   kL / 2) < 1e-9 * kL);
    CHECK(std::abs(exact_equilibrium(1, 3, SpinStatistics::boson(0), kWell, t).position -
                   reference::kWallCubeRootHalf) < 1e-6 * kL);
    CHECK(std::abs(exact_equilibrium(1, 3, SpinStatistics::fermion(9), kWell, t).position -
                   reference::kWallCubeRootHalf) < 1e-6 * kL);
    CHECK(exact_equilibrium(0, 3, SpinStatistics::boson(0), kWell, t).position == 0.0);
    CHECK(exact_equilibrium(3, 3, SpinStatistics::boson(0), kWell, t).position == kL);
}

TEST_CASE("exact total work against the closed forms") {
    const auto cold = at_ratio(0.05);
    const auto single = exact_total_work(1, SpinStatistics::fermion(1), kWell, cold, kL / 2);
    CHECK(single.total_work == doctest::Approx(cold.kT() * std::numbers::ln2).epsilon(1e-3));
    const auto pair = exact_total_work(2, SpinStatistics::boson(0), kWell, cold, kL / 2);
    CHECK(pair.total_work / cold.kT() == doctest::Approx(0.732408).epsilon(1e-3));
    CHECK(pair.leakage == 0.0);

    const auto warm = at_ratio(0.1);
    const auto spin = SpinStatistics::fermion(9);
    const Joules w1 = exact_total_work(3, spin, kWell, cold, kL / 2).total_work;
    const Joules w2 = exact_total_work(3, spin, kWell, warm, kL / 2).total_work;
    const double slope = (w2 - w1) / (warm.kT() - cold.kT());
    const Joules absorbed = slope * cold.kT() - w1;
    CHECK(slope == doctest::Approx(reference::kFermionU5N3Slope).epsilon(1e-2));
    CHECK(absorbed == doctest::Approx(reference::kFermionU5N3Absorbed).epsilon(1e-2));
}

TEST_CASE("ground-state counting") {
    const auto t = at_ratio(0.02);
    const Joules e1 = level_energy(1, kL / 2, kWell);
    const auto fermions = exact_ensemble(3, kL / 2, SpinStatistics::fermion(1), kWell, t);
    CHECK(fermions.log_total() + 3 * t.beta() * e1 == doctest::Approx(std::log(4.0)).epsilon(1e-10));
    const auto bosons = exact_ensemble(3, kL / 2, SpinStatistics::boson(2), kWell, t);
    // C(N + 4s + 1, 4s + 1) = C(8, 5) = 56 ground configurations
    CHECK(bosons.log_total() + 3 * t.beta() * e1 == doctest::Approx(std::log(56.0)).epsilon(1e-10));
}

TEST_CASE("limits and convergence failures") {
    const auto t = at_ratio(5.0);
    OracleOptions tiny;
    tiny.max_levels = 4;
    try {
        exact_distribution(3, kL / 2, SpinStatistics::fermion(1), kWell, t, tiny);
        FAIL("expected a convergence error");
    } catch (const ConvergenceError& e) {
        CHECK(e.levels() == 4);
        CHECK(e.achieved_delta() > 1e-9);
    }
    CHECK_THROWS_AS(exact_distribution(7, kL / 2, SpinStatistics::boson(0), kWell, t), DomainError);
    CHECK_THROWS_AS(exact_distribution(2, kL / 2, SpinStatistics::boson(12), kWell, t), DomainError);
    CHECK_THROWS_AS(exact_distribution(2, kL / 2, SpinStatistics::boson(0), kWell, ThermalPoint(0.0)),
                    ZeroTemperatureError);
    const auto ens = exact_ensemble(3, kL / 2, SpinStatistics::fermion(1), kWell, t);
    CHECK(ens.convergence.levels >= 64);
    CHECK(ens.convergence.achieved_delta < 1e-9);
}
