#include "reference_values.hpp"
#include "szilard/engine.hpp"
#include "szilard/info.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace szilard;

namespace {
const WellGeometry kWell = WellGeometry::nanometer_well();
const auto kFermionHalf = SpinStatistics::fermion(1);
}

TEST_CASE("entropy of the spin-1/2 pair") {
    const auto d = measurement_distribution(kFermionHalf, 2);
    CHECK(shannon_entropy(d) == doctest::Approx(reference::kEntropyFermionU1N2).epsilon(1e-14));
}

TEST_CASE("erasure work needs a normalized distribution") {
    MeasurementDistribution d{0, {0.5, 0.6}};
    CHECK_THROWS_AS(erasure_work(d, ThermalPoint(1.0)), DomainError);
    MeasurementDistribution ok{0, {0.5, 0.5}};
    CHECK(erasure_work(ok, ThermalPoint(1.0)) ==
          doctest::Approx(kBoltzmann * std::numbers::ln2).epsilon(1e-15));
    CHECK_THROWS_AS(erasure_work(ok, ThermalPoint(0.0)), ZeroTemperatureError);
}

TEST_CASE("efficiency spot values") {
    const ThermalPoint t(1.0);
    CHECK(*info_work_efficiency(kFermionHalf, 1, kWell, t) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*info_work_efficiency(kFermionHalf, 2, kWell, t) ==
          doctest::Approx(0.688426).epsilon(1e-6));
    CHECK_FALSE(info_work_efficiency(SpinStatistics::fermion(9), 20, kWell, t).has_value());
    CHECK_FALSE(info_work_efficiency(SpinStatistics::boson(2), 0, kWell, t).has_value());
}

TEST_CASE("work splits into erasure and net parts") {
    const auto m = info_metrics(SpinStatistics::fermion(9), 3, kWell, ThermalPoint(0.3));
    CHECK(m.total_work == doctest::Approx(m.erasure_work + m.net_work).epsilon(1e-10));
    CHECK(m.entropy_bits() == doctest::Approx(m.shannon_entropy / std::numbers::ln2));
}

TEST_CASE("second-highest efficiency formula") {
    CHECK(second_highest_efficiency(1.0 / 3) == doctest::Approx(0.688426).epsilon(1e-6));
    CHECK(second_highest_efficiency(2.0 / 3) == doctest::Approx(0.666667).epsilon(1e-6));
    CHECK_THROWS_AS(second_highest_efficiency(0.0), DomainError);
    CHECK_THROWS_AS(second_highest_efficiency(1.0), DomainError);
    CHECK(fermion_alpha(1) == 1.0 / 3);
    CHECK(boson_alpha(0) == 2.0 / 3);
}

TEST_CASE("fermion extremal configurations") {
    const auto r = extremal_report(SpinStatistics::fermion(9), kWell);
    CHECK(r.zero_absorption == std::vector<long>{0, 1, 2, 18, 19});
    CHECK(r.max_work == std::vector<long>{1, 19});
    CHECK(r.max_work_over_kT == std::numbers::ln2);
    CHECK(r.highest_efficiency == std::vector<long>{1, 19});
    CHECK(r.highest_efficiency_value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.second_highest_efficiency == std::vector<long>{2, 18});
    CHECK(r.second_highest_efficiency_value ==
          doctest::Approx(second_highest_efficiency(fermion_alpha(5))).epsilon(1e-12));
    CHECK(r.boson_exceeds_fermion);
    CHECK(r.comparison_counterexamples.empty());
}

TEST_CASE("boson extremal configurations") {
    const auto r = extremal_report(SpinStatistics::boson(6), kWell);
    CHECK(r.zero_absorption == std::vector<long>{0, 1, 2});
    CHECK(r.max_work == std::vector<long>{2});
    CHECK(r.max_work_over_kT > std::numbers::ln2);
    CHECK(r.highest_efficiency == std::vector<long>{1});
    CHECK(r.second_highest_efficiency == std::vector<long>{2});
    CHECK(r.second_highest_efficiency_value ==
          doctest::Approx(second_highest_efficiency(boson_alpha(3))).epsilon(1e-12));
    CHECK(r.boson_exceeds_fermion);
}
