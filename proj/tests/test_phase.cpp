#include "reference_values.hpp"
#include "szilard/engine.hpp"
#include "szilard/phase.hpp"

#include <doctest.h>

using namespace szilard;

namespace {
const WellGeometry kWell = WellGeometry::nanometer_well();
}

TEST_CASE("critical temperature spot values") {
    CHECK(*critical_temperature(SpinStatistics::fermion(9), 3, kWell) ==
          doctest::Approx(reference::kFermionU5N3Tc).epsilon(1e-12));
    CHECK(*critical_temperature(SpinStatistics::boson(0), 3, kWell) ==
          doctest::Approx(reference::kBosonS0N3Tc).epsilon(1e-12));
    CHECK(*critical_temperature(SpinStatistics::fermion(9), 1, kWell) == 0.0);
    CHECK_FALSE(critical_temperature(SpinStatistics::fermion(9), 40, kWell).has_value());
    CHECK_FALSE(critical_temperature(SpinStatistics::boson(0), 0, kWell).has_value());
}

TEST_CASE("phase curve keeps input order and undefined points") {
    const auto curve = phase_curve(SpinStatistics::fermion(9), kWell, {20, 3, 40});
    REQUIRE(curve.size() == 3);
    CHECK(curve[0].particles == 20);
    CHECK_FALSE(curve[0].critical.has_value());
    CHECK(curve[1].critical.has_value());
    CHECK_FALSE(curve[2].critical.has_value());
}

TEST_CASE("work changes sign across T_c") {
    const auto spin = SpinStatistics::boson(0);
    const double tc = reference::kBosonS0N3Tc;
    const auto grid = work_grid(spin, kWell, {3}, {0.0, tc * (1 - 1e-3), tc * (1 + 1e-3)});
    CHECK(grid.sign(0, 0) == -1);
    CHECK(grid.sign(0, 1) == -1);
    CHECK(grid.sign(0, 2) == 1);
    const Joules at_tc = total_work(spin, 3, kWell, ThermalPoint(tc));
    CHECK(std::abs(at_tc) < 1e-10 * work_coefficients(spin, 3, kWell).absorbed);
}

TEST_CASE("grid cells equal direct calls for any thread count") {
    const auto spin = SpinStatistics::fermion(3);
    std::vector<long> Ns;
    for (long N = 0; N <= 40; ++N)
        Ns.push_back(N);
    const std::vector<Kelvin> Ts = {0.0, 0.05, 0.2, 1.0};
    const auto serial = work_grid(spin, kWell, Ns, Ts, 1);
    const auto parallel = work_grid(spin, kWell, Ns, Ts, 4);
    CHECK(serial.work == parallel.work);
    for (std::size_t i = 0; i < Ns.size(); ++i)
        for (std::size_t j = 0; j < Ts.size(); ++j)
            REQUIRE(serial.at(i, j) == total_work(spin, Ns[i], kWell, ThermalPoint(Ts[j])));
}

TEST_CASE("zero-absorption cells at T = 0 are exactly zero") {
    const auto grid = work_grid(SpinStatistics::fermion(9), kWell, {1, 2, 18, 19, 20}, {0.0});
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(grid.at(i, 0) == 0.0);
}
