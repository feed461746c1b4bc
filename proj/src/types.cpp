#include "szilard/types.hpp"

#include <cmath>
#include <numeric>

namespace szilard {

double MeasurementDistribution::at(long m) const {
    return contains(m) ? probabilities[static_cast<std::size_t>(m - first_m)] : 0.0;
}

double MeasurementDistribution::total() const {
    return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

Joules relative_entropy_work(const MeasurementDistribution& distribution,
                             std::span<const double> log_weights, const ThermalPoint& thermal) {
    if (log_weights.size() != distribution.probabilities.size())
        throw DomainError("relative_entropy_work: weights do not match the support");
    const double kT = thermal.kT();
    if (kT == 0.0)
        throw ZeroTemperatureError("relative_entropy_work: needs T > 0");
    double sum = 0.0;
    for (std::size_t i = 0; i < log_weights.size(); ++i) {
        const double f = distribution.probabilities[i];
        if (f > 0.0)
            sum += f * (std::log(f) - log_weights[i]);
    }
    return -kT * sum;
}

}  // namespace szilard
