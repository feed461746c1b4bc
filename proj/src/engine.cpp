#include "szilard/engine.hpp"

#include "szilard/boson.hpp"
#include "szilard/fermion.hpp"

namespace szilard {

MeasurementDistribution measurement_distribution(const SpinStatistics& spin, long particles) {
    if (spin.is_fermion())
        return fermion::measurement_distribution(fermion::decompose(particles, spin.u()));
    return boson::measurement_distribution(boson::make_filling(particles, spin.s()));
}

std::vector<double> log_post_expansion_weights(const SpinStatistics& spin, long particles,
                                               const WellGeometry& geometry,
                                               const ThermalPoint& thermal) {
    if (spin.is_fermion())
        return fermion::log_post_expansion_weights(fermion::decompose(particles, spin.u()),
                                                   geometry, thermal);
    return boson::log_post_expansion_weights(boson::make_filling(particles, spin.s()), geometry,
                                             thermal);
}

WorkDecomposition work_coefficients(const SpinStatistics& spin, long particles,
                                    const WellGeometry& geometry) {
    if (spin.is_fermion())
        return fermion::work_coefficients(fermion::decompose(particles, spin.u()), geometry);
    return boson::work_coefficients(boson::make_filling(particles, spin.s()), geometry);
}

Joules total_work(const SpinStatistics& spin, long particles, const WellGeometry& geometry,
                  const ThermalPoint& thermal) {
    return work_coefficients(spin, particles, geometry).total_work(thermal);
}

std::optional<WallPosition> analytic_equilibrium(const SpinStatistics& spin, long particles, long m,
                                                 const WellGeometry& geometry) {
    if (spin.is_fermion()) {
        const auto filling = fermion::decompose(particles, spin.u());
        if (!filling.in_support(m))
            return std::nullopt;
        return fermion::equilibrium_wall(filling, m, geometry);
    }
    return boson::equilibrium_wall(boson::make_filling(particles, spin.s()), m, geometry);
}

}  // namespace szilard
