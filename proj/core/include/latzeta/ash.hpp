#pragma once

#include "latzeta/descent.hpp"
#include "latzeta/term_table.hpp"

namespace latzeta {
namespace ash {

// Three-variable numerator: one table term per descent class K, carrying
// w_K(q) * q^(-a(K)) * u^b(K) * T^#K.
TermTable p_total(int ell);

// The even/odd-type numerator polynomial in (X, T): coefficient of T^d is
// sum over #K == d of w_K(X^-1) * X^(a_eps(K)), a polynomial in X with
// non-negative integer coefficients.
SeriesPoly w_eps(int ell, int eps);

// Coefficient multiplicity at X^j inside the degree-d coefficient, counted
// directly over permutations (independent of the polynomial route).
long long gamma_coeff(int ell, int d, int eps, long long j);

// Support bounds (alpha, beta) of the degree-d coefficient, as exact
// rationals; d*alpha and d*beta are integers.
std::pair<Rat, Rat> alpha_beta(int ell, int d, int eps);

// X- exponent of the self-duality twist, and the exact check itself.
HalfInt fe_x_exponent(int ell, int eps);
bool check_functional_eq(int ell, int eps);

}  // namespace ash
}  // namespace latzeta
