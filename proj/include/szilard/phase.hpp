#pragma once

#include "szilard/physics.hpp"
#include "szilard/types.hpp"

#include <optional>
#include <vector>

namespace szilard {

/// T_c = W_0 / (D k_B), the temperature at which the cycle stops absorbing
/// work. Empty when D = 0 (the measurement carries no usable information).
std::optional<Kelvin> critical_temperature(const WorkDecomposition& coefficients);

std::optional<Kelvin> critical_temperature(const SpinStatistics& spin, long particles,
                                           const WellGeometry& geometry);

struct PhasePoint {
    long particles;
    WorkDecomposition coefficients;
    std::optional<Kelvin> critical;
};

/// One PhasePoint per entry of `particle_numbers`, in input order.
std::vector<PhasePoint> phase_curve(const SpinStatistics& spin, const WellGeometry& geometry,
                                    const std::vector<long>& particle_numbers);

/// W_tot over a rectangular (N, T) grid. Row i is particle_numbers[i],
/// column j is temperatures[j]. Cells are independent; the result does not
/// depend on `threads`.
struct WorkGrid {
    std::vector<long> particle_numbers;
    std::vector<Kelvin> temperatures;
    std::vector<Joules> work;   // row-major

    Joules at(std::size_t row, std::size_t column) const;
    /// -1, 0 or +1.
    int sign(std::size_t row, std::size_t column) const;
};

/// `threads` = 0 picks std::thread::hardware_concurrency().
WorkGrid work_grid(const SpinStatistics& spin, const WellGeometry& geometry,
                   const std::vector<long>& particle_numbers,
                   const std::vector<Kelvin>& temperatures, unsigned threads = 1);

}  // namespace szilard
