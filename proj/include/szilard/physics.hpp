#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace szilard {

/// CODATA exact values.
inline constexpr double kBoltzmann = 1.380649e-23;      // J/K
inline constexpr double kHbar = 1.054571817e-34;        // J s

using Joules = double;
using Kelvin = double;
using Meters = double;

/// Argument outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quantity that is well defined only at T > 0 was requested at T = 0.
class ZeroTemperatureError : public DomainError {
public:
    using DomainError::DomainError;
};

enum class Statistics { Fermion, Boson };

/// Particle species: spin stored as the integer 2s.
class SpinStatistics {
public:
    SpinStatistics(int twice_spin, Statistics kind);

    static SpinStatistics fermion(int twice_spin) { return {twice_spin, Statistics::Fermion}; }
    static SpinStatistics boson(int twice_spin) { return {twice_spin, Statistics::Boson}; }

    int twice_spin() const { return twice_spin_; }
    Statistics kind() const { return kind_; }
    bool is_fermion() const { return kind_ == Statistics::Fermion; }

    /// Spin states per level, 2s + 1.
    int degeneracy() const { return twice_spin_ + 1; }

    /// u = s + 1/2; fermions only.
    int u() const;

    /// Integer spin s; bosons only.
    int s() const;

    std::string label() const;

    friend bool operator==(const SpinStatistics&, const SpinStatistics&) = default;

private:
    int twice_spin_;
    Statistics kind_;
};

/// One-dimensional infinite well of length L holding particles of mass M.
class WellGeometry {
public:
    WellGeometry(Meters length, double mass);

    /// The values used throughout the reference figures: L = 1 nm, M = 1e-26 kg.
    static WellGeometry nanometer_well() { return {1e-9, 1e-26}; }

    Meters length() const { return length_; }
    double mass() const { return mass_; }

private:
    Meters length_;
    double mass_;
};

/// Heat-bath temperature, T >= 0.
class ThermalPoint {
public:
    explicit ThermalPoint(Kelvin temperature);

    /// Temperature such that k_B T equals `ratio` times `energy`.
    static ThermalPoint from_energy_ratio(double ratio, Joules energy);

    Kelvin temperature() const { return temperature_; }
    Joules kT() const { return kBoltzmann * temperature_; }
    bool is_zero() const { return temperature_ == 0.0; }

    /// 1/(k_B T); throws ZeroTemperatureError at T = 0.
    double beta() const;

private:
    Kelvin temperature_;
};

/// E_n(width) = n² π² ħ² / (2 M width²).
Joules level_energy(long n, Meters width, const WellGeometry& geometry);

/// E0 = E_1(L), the natural energy unit of the full well.
Joules reference_energy(const WellGeometry& geometry);

}  // namespace szilard
