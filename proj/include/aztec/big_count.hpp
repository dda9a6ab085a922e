#pragma once

#include <gmpxx.h>

#include <string>

namespace aztec {

// Exact nonnegative tiling counts.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& value) { return value.get_str(10); }

}  // namespace aztec
