#pragma once

#include <string>

#include "combsub/interval_set.hpp"

namespace combsub {

inline constexpr int default_significant_digits = 10;

/// Round-half-even to `digits` significant digits; integers print without a fraction,
/// zero prints as "0".
std::string to_decimal(const Rational& x, int digits = default_significant_digits);

/// Refines a copy of the enclosure until both ends render identically.
std::string to_decimal(const RootEnclosure& x, int digits = default_significant_digits);

/// "-inf" / "inf" for infinite endpoints.
std::string to_decimal(const Endpoint& x, int digits = default_significant_digits);

}  // namespace combsub
