#pragma once

#include <gmpxx.h>

namespace fibtri {

// Exact arbitrary-precision integer used everywhere; no fixed-width arithmetic.
using Int = mpz_class;

}  // namespace fibtri
