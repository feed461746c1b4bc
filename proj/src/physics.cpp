#include "szilard/physics.hpp"

#include <cmath>

namespace szilard {

SpinStatistics::SpinStatistics(int twice_spin, Statistics kind)
    : twice_spin_(twice_spin), kind_(kind) {
    if (twice_spin < 0)
        throw DomainError("twice_spin must be non-negative");
    const bool odd = twice_spin % 2 == 1;
    if (kind == Statistics::Fermion && !odd)
        throw DomainError("fermions need half-integer spin (odd 2s), got 2s=" +
                          std::to_string(twice_spin));
    if (kind == Statistics::Boson && odd)
        throw DomainError("bosons need integer spin (even 2s), got 2s=" +
                          std::to_string(twice_spin));
}

int SpinStatistics::u() const {
    if (!is_fermion())
        throw DomainError("u = s + 1/2 is defined for fermions only");
    return (twice_spin_ + 1) / 2;
}

int SpinStatistics::s() const {
    if (is_fermion())
        throw DomainError("integer spin s is defined for bosons only");
    return twice_spin_ / 2;
}

std::string SpinStatistics::label() const {
    return std::string(is_fermion() ? "fermion" : "boson") + " 2s=" + std::to_string(twice_spin_);
}

WellGeometry::WellGeometry(Meters length, double mass) : length_(length), mass_(mass) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw DomainError("well length must be positive and finite");
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw DomainError("particle mass must be positive and finite");
}

ThermalPoint::ThermalPoint(Kelvin temperature) : temperature_(temperature) {
    if (!(temperature >= 0.0) || !std::isfinite(temperature))
        throw DomainError("temperature must be finite and non-negative");
}

ThermalPoint ThermalPoint::from_energy_ratio(double ratio, Joules energy) {
    return ThermalPoint(ratio * energy / kBoltzmann);
}

double ThermalPoint::beta() const {
    if (is_zero())
        throw ZeroTemperatureError("beta = 1/(k_B T) is undefined at T = 0");
    return 1.0 / kT();
}

Joules level_energy(long n, Meters width, const WellGeometry& geometry) {
    if (n < 1)
        throw DomainError("level index must be >= 1");
    if (!(width > 0.0))
        throw DomainError("box width must be positive");
    const double nn = static_cast<double>(n);
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    return nn * nn * pi2 * kHbar * kHbar / (2.0 * geometry.mass() * width * width);
}

Joules reference_energy(const WellGeometry& geometry) {
    return level_energy(1, geometry.length(), geometry);
}

}  // namespace szilard
