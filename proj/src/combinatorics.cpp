#include "szilard/combinatorics.hpp"

#include "szilard/physics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szilard {

namespace mp = boost::multiprecision;

ExactCount binomial(long a, long b) {
    if (a < 0)
        throw DomainError("binomial: a must be non-negative");
    if (b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    ExactCount result = 1;
    // Each partial product is itself a binomial, so the division is exact.
    for (long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

double log_binomial(long a, long b) {
    if (b < 0 || b > a)
        throw DomainError("log_binomial: need 0 <= b <= a");
    if (b == 0 || b == a)
        return 0.0;
    const double x = static_cast<double>(a);
    const double y = static_cast<double>(b);
    return std::lgamma(x + 1.0) - std::lgamma(y + 1.0) - std::lgamma(x - y + 1.0);
}

ExactCount bose_state_count(long degeneracy, long particles) {
    if (degeneracy < 1)
        throw DomainError("bose_state_count: degeneracy must be >= 1");
    if (particles < 0)
        throw DomainError("bose_state_count: particle count must be >= 0");
    return binomial(degeneracy + particles - 1, particles);
}

double approximate(const ExactCount& count) { return count.convert_to<double>(); }

double log_count(const ExactCount& count) {
    if (count <= 0)
        throw DomainError("log_count: count must be positive");
    const auto bits = static_cast<long>(mp::msb(count));
    if (bits < 1000)
        return std::log(approximate(count));
    const long shift = bits - 60;
    const ExactCount head = count >> shift;
    return std::log(approximate(head)) + static_cast<double>(shift) * std::numbers::ln2;
}

double count_ratio(const ExactCount& num, const ExactCount& den) {
    using Float = mp::cpp_bin_float_50;
    if (den == 0)
        throw DomainError("count_ratio: zero denominator");
    return static_cast<double>(Float(num) / Float(den));
}

}  // namespace szilard
