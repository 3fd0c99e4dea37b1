#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace latzeta {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical: lowest terms, positive denominator

Int int_pow(const Int& base, unsigned long e);

// base^e for e of either sign; throws usage_error on 0^negative.
Rat rat_pow(const Rat& base, long e);

// Exact p^(k/2) for integer p >= 1. Odd k requires p to be a perfect
// square; otherwise precision_error.
Rat prime_half_pow(const Int& p, long long k_doubled);

std::string rat_to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

}  // namespace latzeta
