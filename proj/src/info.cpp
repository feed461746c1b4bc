#include "szilard/info.hpp"

#include "szilard/boson.hpp"
#include "szilard/engine.hpp"
#include "szilard/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace szilard {

namespace {

constexpr double kNormalizationTolerance = 1e-9;
constexpr double kTieTolerance = 1e-12;

bool ties(double a, double b) {
    return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Candidate {
    long configuration;
    double slope;
    double entropy;
};

// Largest value with every configuration attaining it.
std::pair<std::vector<long>, double> argmax(const std::vector<std::pair<long, double>>& values) {
    std::vector<long> where;
    double best = -INFINITY;
    for (const auto& [c, v] : values) {
        if (where.empty() || (v > best && !ties(v, best))) {
            best = v;
            where = {c};
        } else if (ties(v, best)) {
            where.push_back(c);
        }
    }
    return {where, best};
}

double max_boson_work(int s, const WellGeometry& geometry) {
    double best = 0.0;
    for (long N = 0; N <= 2; ++N)
        best = std::max(best, boson::work_coefficients(boson::make_filling(N, s), geometry).slope);
    return best;
}

}  // namespace

double InfoMetrics::entropy_bits() const {
    return shannon_entropy / std::numbers::ln2;
}

double shannon_entropy(const MeasurementDistribution& distribution) {
    double h = 0.0;
    for (double f : distribution.probabilities)
        if (f > 0.0)
            h -= f * std::log(f);
    return h;
}

Joules erasure_work(const MeasurementDistribution& distribution, const ThermalPoint& thermal) {
    if (std::abs(distribution.total() - 1.0) > kNormalizationTolerance)
        throw DomainError("erasure_work: distribution is not normalized");
    if (thermal.is_zero())
        throw ZeroTemperatureError("erasure_work: needs T > 0");
    return thermal.kT() * shannon_entropy(distribution);
}

Joules net_work(const MeasurementDistribution& distribution, std::span<const double> log_weights,
                const ThermalPoint& thermal) {
    if (log_weights.size() != distribution.probabilities.size())
        throw DomainError("net_work: weights do not match the support");
    if (thermal.is_zero())
        throw ZeroTemperatureError("net_work: needs T > 0");
    double sum = 0.0;
    for (std::size_t i = 0; i < log_weights.size(); ++i) {
        const double f = distribution.probabilities[i];
        if (f > 0.0)
            sum += f * log_weights[i];
    }
    return thermal.kT() * sum;
}

Joules net_work(const SpinStatistics& spin, long particles, const WellGeometry& geometry,
                const ThermalPoint& thermal) {
    const auto dist = measurement_distribution(spin, particles);
    const auto logs = log_post_expansion_weights(spin, particles, geometry, thermal);
    return net_work(dist, logs, thermal);
}

std::optional<double> info_work_efficiency(const SpinStatistics& spin, long particles,
                                           const WellGeometry& geometry,
                                           const ThermalPoint& thermal) {
    return info_metrics(spin, particles, geometry, thermal).efficiency;
}

InfoMetrics info_metrics(const SpinStatistics& spin, long particles, const WellGeometry& geometry,
                         const ThermalPoint& thermal) {
    const auto dist = measurement_distribution(spin, particles);
    const auto logs = log_post_expansion_weights(spin, particles, geometry, thermal);
    InfoMetrics out;
    out.shannon_entropy = shannon_entropy(dist);
    out.erasure_work = erasure_work(dist, thermal);
    out.total_work = work_coefficients(spin, particles, geometry).total_work(thermal);
    out.net_work = net_work(dist, logs, thermal);
    if (out.erasure_work > 0.0)
        out.efficiency = out.total_work / out.erasure_work;
    return out;
}

double second_highest_efficiency(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("second_highest_efficiency: alpha must lie in (0, 1)");
    const double a = alpha;
    return 1.0 / (1.0 + (1.0 - a) * std::log(1.0 - a) / (a * std::log(a / 2.0)));
}

double fermion_alpha(int u) {
    if (u < 1)
        throw DomainError("fermion_alpha: u must be >= 1");
    return static_cast<double>(2 * u - 1) / static_cast<double>(4 * u - 1);
}

double boson_alpha(int s) {
    if (s < 0)
        throw DomainError("boson_alpha: s must be >= 0");
    return static_cast<double>(2 * s + 2) / static_cast<double>(4 * s + 3);
}

ExtremalReport extremal_report(const SpinStatistics& spin, const WellGeometry& geometry,
                               long boson_scan_limit) {
    if (boson_scan_limit < 2)
        throw DomainError("extremal_report: scan limit must be >= 2");
    ExtremalReport report{spin, {}, {}, 0.0, {}, 0.0, {}, 0.0, true, {}};

    std::vector<Candidate> zero;
    if (spin.is_fermion()) {
        const int u = spin.u();
        // W_0 depends on k only; one full shell (n = 1) is representative.
        for (long k = 0; k < 4L * u; ++k) {
            const long N = 4L * u + k;
            const auto filling = fermion::decompose(N, u);
            const auto c = fermion::work_coefficients(filling, geometry);
            if (c.absorbed == 0.0)
                zero.push_back({k, c.slope, shannon_entropy(fermion::measurement_distribution(filling))});
        }
    } else {
        for (long N = 0; N <= boson_scan_limit; ++N) {
            const auto filling = boson::make_filling(N, spin.s());
            const auto c = boson::work_coefficients(filling, geometry);
            if (c.absorbed == 0.0)
                zero.push_back({N, c.slope, shannon_entropy(boson::measurement_distribution(filling))});
        }
    }

    std::vector<std::pair<long, double>> slopes;
    std::vector<std::pair<long, double>> efficiencies;
    for (const auto& c : zero) {
        report.zero_absorption.push_back(c.configuration);
        slopes.emplace_back(c.configuration, c.slope);
        // With W_0 = 0 the efficiency D k_B T / (k_B T H) is T-independent.
        if (c.entropy > 0.0)
            efficiencies.emplace_back(c.configuration, c.slope / c.entropy);
    }
    std::tie(report.max_work, report.max_work_over_kT) = argmax(slopes);
    std::tie(report.highest_efficiency, report.highest_efficiency_value) = argmax(efficiencies);
    std::erase_if(efficiencies, [&](const auto& e) { return ties(e.second, report.highest_efficiency_value); });
    if (!efficiencies.empty())
        std::tie(report.second_highest_efficiency, report.second_highest_efficiency_value) =
            argmax(efficiencies);

    if (spin.is_fermion()) {
        const double fermion_max = report.max_work_over_kT;
        for (int s = 0; s <= static_cast<int>(boson_scan_limit); ++s)
            if (!(max_boson_work(s, geometry) > fermion_max && !ties(max_boson_work(s, geometry), fermion_max)))
                report.comparison_counterexamples.push_back(s);
    } else {
        // Every fermion spin reaches the same maximum; u = 1 stands for all of them.
        const auto f = extremal_report(SpinStatistics::fermion(1), geometry, 2);
        const double boson_max = report.max_work_over_kT;
        if (!(boson_max > f.max_work_over_kT && !ties(boson_max, f.max_work_over_kT)))
            report.comparison_counterexamples.push_back(spin.s());
    }
    report.boson_exceeds_fermion = report.comparison_counterexamples.empty();
    return report;
}

}  // namespace szilard
