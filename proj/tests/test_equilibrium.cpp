#include "reference_values.hpp"
#include "szilard/equilibrium.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace szilard;

namespace {
const WellGeometry kWell = WellGeometry::nanometer_well();
}

TEST_CASE("fermion balance ratio with an empty shell core") {
    CHECK(fermion_eq_ratio(5, 0, 3, 1) == doctest::Approx(reference::kCubeRootHalf).epsilon(1e-15));
    CHECK(fermion_eq_ratio(5, 0, 3, 2) == doctest::Approx(1.0 / reference::kCubeRootHalf).epsilon(1e-15));
    CHECK(fermion_eq_ratio(5, 0, 3, 0) == 0.0);
    CHECK(std::isinf(fermion_eq_ratio(5, 0, 3, 3)));
    CHECK(fermion_eq_ratio(5, 0, 0, 0) == 1.0);
    CHECK(fermion_eq_ratio(5, 4, 6, 3) == 1.0);
}

TEST_CASE("boson balance ratio") {
    CHECK(boson_eq_ratio(1, 3) == doctest::Approx(reference::kCubeRootHalf).epsilon(1e-15));
    CHECK(boson_eq_ratio(0, 3) == 0.0);
    CHECK(std::isinf(boson_eq_ratio(3, 3)));
    CHECK(boson_eq_ratio(2, 4) == 1.0);
    CHECK_THROWS_AS(boson_eq_ratio(4, 3), DomainError);
}

TEST_CASE("wall position and splitting") {
    const auto wall = wall_position(reference::kCubeRootHalf, kWell);
    CHECK(wall.position == doctest::Approx(reference::kWallCubeRootHalf).epsilon(1e-14));
    CHECK_FALSE(wall.at_boundary());
    const auto split = level_split(1, wall, kWell);
    CHECK(split.level == 1);
    CHECK(split.delta_e == doctest::Approx(reference::kSplitCubeRootHalf).epsilon(1e-12));
}

TEST_CASE("centred wall has no splitting") {
    const auto wall = wall_position(1.0, kWell);
    CHECK(wall.position == kWell.length() / 2);
    CHECK(level_split(7, wall, kWell).delta_e == 0.0);
}

TEST_CASE("walls at the ends") {
    const auto left = wall_position(0.0, kWell);
    const auto right = wall_position(std::numeric_limits<double>::infinity(), kWell);
    CHECK(left.position == 0.0);
    CHECK(right.position == kWell.length());
    CHECK(left.at_boundary());
    CHECK(right.at_boundary());
    CHECK_THROWS_AS(level_split(1, left, kWell), BoundaryWallError);
    CHECK_THROWS_AS(level_split(1, right, kWell), BoundaryWallError);
    CHECK_THROWS_AS(wall_position(-1.0, kWell), DomainError);
}

TEST_CASE("exact splitting of a high level") {
    const auto w10 = wall_position(fermion_eq_ratio(5, 10, 3, 1), kWell);
    const auto w100 = wall_position(fermion_eq_ratio(5, 100, 3, 1), kWell);
    CHECK(level_split(11, w10, kWell).delta_e ==
          doctest::Approx(reference::kSplitExactU5K3P1n10).epsilon(1e-10));
    CHECK(level_split(101, w100, kWell).delta_e ==
          doctest::Approx(reference::kSplitExactU5K3P1n100).epsilon(1e-10));
}

TEST_CASE("large-n splitting approaches the exact one") {
    const double exact10 = reference::kSplitExactU5K3P1n10;
    const double exact100 = reference::kSplitExactU5K3P1n100;
    const double gap10 = std::abs(level_split_large_n(5, 10, 3, 1, kWell) - exact10) / exact10;
    const double gap100 = std::abs(level_split_large_n(5, 100, 3, 1, kWell) - exact100) / exact100;
    CHECK(gap10 < 0.15);
    CHECK(gap100 < 0.02);
    CHECK(gap100 < gap10);
    CHECK(level_split_large_n(5, 10, 4, 2, kWell) == 0.0);
    CHECK_THROWS_AS(level_split_large_n(5, 0, 3, 1, kWell), DomainError);
}
