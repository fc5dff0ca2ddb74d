#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rnagen {

// All structure counts and ranks are exact integers; values outgrow 64 bits
// around n = 90, so everything runs on arbitrary precision.
using Count = mpz_class;

/// Decimal rendering used everywhere counts or ranks cross a text boundary.
std::string to_decimal(const Count& value);

/// Parses a non-negative decimal string; throws Errc::bad_argument otherwise.
Count parse_decimal(std::string_view text);

} // namespace rnagen
