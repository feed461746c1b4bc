#include "szilard/phase.hpp"

#include "szilard/engine.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace szilard {

std::optional<Kelvin> critical_temperature(const WorkDecomposition& coefficients) {
    if (!(coefficients.slope > 0.0))
        return std::nullopt;
    return coefficients.absorbed / (coefficients.slope * kBoltzmann);
}

std::optional<Kelvin> critical_temperature(const SpinStatistics& spin, long particles,
                                           const WellGeometry& geometry) {
    return critical_temperature(work_coefficients(spin, particles, geometry));
}

std::vector<PhasePoint> phase_curve(const SpinStatistics& spin, const WellGeometry& geometry,
                                    const std::vector<long>& particle_numbers) {
    std::vector<PhasePoint> out;
    out.reserve(particle_numbers.size());
    for (long N : particle_numbers) {
        const auto c = work_coefficients(spin, N, geometry);
        out.push_back({N, c, critical_temperature(c)});
    }
    return out;
}

Joules WorkGrid::at(std::size_t row, std::size_t column) const {
    return work.at(row * temperatures.size() + column);
}

int WorkGrid::sign(std::size_t row, std::size_t column) const {
    const Joules w = at(row, column);
    return (w > 0.0) - (w < 0.0);
}

WorkGrid work_grid(const SpinStatistics& spin, const WellGeometry& geometry,
                   const std::vector<long>& particle_numbers,
                   const std::vector<Kelvin>& temperatures, unsigned threads) {
    std::vector<ThermalPoint> thermals;
    thermals.reserve(temperatures.size());
    for (Kelvin t : temperatures)
        thermals.emplace_back(t);

    WorkGrid grid{particle_numbers, temperatures,
                  std::vector<Joules>(particle_numbers.size() * temperatures.size())};
    const std::size_t columns = temperatures.size();
    auto fill_row = [&](std::size_t row) {
        const auto c = work_coefficients(spin, particle_numbers[row], geometry);
        for (std::size_t j = 0; j < columns; ++j)
            grid.work[row * columns + j] = c.total_work(thermals[j]);
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, particle_numbers.size()));
    if (threads <= 1) {
        for (std::size_t row = 0; row < particle_numbers.size(); ++row)
            fill_row(row);
        return grid;
    }

    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t row = t; row < particle_numbers.size(); row += threads)
                    fill_row(row);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return grid;
}

}  // namespace szilard
