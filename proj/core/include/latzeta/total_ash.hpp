#pragma once

#include "latzeta/ash.hpp"

namespace latzeta {
namespace totalash {

// Local invariants driving the two-class numerator. A and B are
// half-integers and n = 2(ell + A + 1) must come out integral.
struct TotalAshSpec {
    int ell = 1;
    HalfInt A{HalfInt::whole(-1)};
    HalfInt B{0};

    int n() const;  // 2(ell + A + 1)
    void validate() const;
};

// Inner double sum attached to J inside [0, ell-1]; every T-degree even,
// exponent parameter B absent (bCoef == 0 throughout).
TermTable script_u(int ell, const descent::SubsetMask& J);

// Parity-graded sums over J with the X^(B<J>) twist carried symbolically.
enum class Parity { Even, Odd };
TermTable u_parity(int ell, Parity parity);

// Companion sum indexed by I inside [1, ell]; equals T^#(flat I) times
// script_u(flat I) with q -> X^-1, which is a standing test.
TermTable p_ell_i(int ell, const descent::SubsetMask& I);

// Same parity sums assembled through the p_ell_i route; used to
// cross-check u_parity.
TermTable u_parity_via_pli(int ell, Parity parity);

// The two class polynomials in T and the combined polynomial in Y.
std::pair<SeriesPoly, SeriesPoly> w0_w1(const TotalAshSpec& spec);
SeriesPoly w_total(const TotalAshSpec& spec);

// Exact functional equation between the even and odd parity sums with B
// kept symbolic.
bool check_fe_total(int ell);

// Exact product factorization of w_total at B = 0.
bool check_b0_degeneration(int ell, HalfInt A);

}  // namespace totalash
}  // namespace latzeta
