#pragma once

#include <vector>

#include "latzeta/total_ash.hpp"

namespace latzeta {
namespace localzeta {

enum class FormKind { Orthogonal, Symplectic, GeneralLinear };

// Per-prime data for one local Euler factor. For orthogonal spaces A is
// n0/2 - 1; the symplectic case always carries (n0, A, B, f) = (0, 0, 0, 1).
// GeneralLinear is the plain sublattice-counting factor used as a
// cross-check (no bilinear form).
struct LocalInvariants {
    Int p = 2;
    int ell = 1;
    int n0 = 0;
    HalfInt A{HalfInt::whole(-1)};
    HalfInt B{0};
    int f = 1;
    FormKind kind = FormKind::Orthogonal;

    int n() const;
    void validate() const;
};

enum class DiscClass { Square, NonSquare, OddDim };

// Invariants at a prime not dividing the discriminant.
LocalInvariants classify_unramified(const Int& p, int n, DiscClass disc);

// Exponents e_r with denominator factors (1 - p^e_r * Y^(f n)), r in [0, ell].
std::vector<long long> denominator_exponents(const LocalInvariants& inv);

// The assembled Euler factor: numerator coefficients in Y = p^(-s/2)
// (exact integers) over the geometric denominator factors.
struct LocalFactor {
    Int p;
    std::vector<Rat> numerator;          // index = Y-degree
    std::vector<long long> denomExponents;
    int denomStep = 0;                   // Y-degree step of each factor (f*n)
    std::string numeratorText;
};

LocalFactor local_factor(const LocalInvariants& inv);

// Power-series expansion of the factor up to Y-degree M; coefficient at
// Y^d counts maximal sublattices of index p^(d/2).
std::vector<Int> local_series_coeffs(const LocalInvariants& inv, int M);

// Same, but indexed by the exponent k of the index p^k (odd Y-degrees,
// which are always zero, dropped).
std::vector<Int> local_index_coeffs(const LocalInvariants& inv, int maxIndexExp);

}  // namespace localzeta
}  // namespace latzeta
