#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace szilard {

/// Arbitrary-precision non-negative integer count.
using ExactCount = boost::multiprecision::cpp_int;

/// Arguments above this use the log-gamma path when forming probabilities.
inline constexpr long kLogSpaceThreshold = 5000;

/// C(a, b); zero when b < 0 or b > a. Requires a >= 0.
ExactCount binomial(long a, long b);

/// ln C(a, b) through log-gamma. Requires 0 <= b <= a.
double log_binomial(long a, long b);

/// Ways to put `particles` bosons into `degeneracy` states: C(g + a - 1, a).
ExactCount bose_state_count(long degeneracy, long particles);

/// Nearest double; may lose precision (or overflow to inf) for huge counts.
double approximate(const ExactCount& count);

/// Natural log of a positive count, valid far beyond the double range.
double log_count(const ExactCount& count);

/// num/den evaluated in 50-digit binary float and rounded once to double.
double count_ratio(const ExactCount& num, const ExactCount& den);

}  // namespace szilard
