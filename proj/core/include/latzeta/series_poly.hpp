#pragma once

#include <vector>

#include "latzeta/half_laurent.hpp"

namespace latzeta {

// Polynomial in an outer variable (T or Y) whose coefficients are
// HalfLaurent polynomials in an inner variable (X or q). Trailing zero
// coefficients are trimmed, so degree() is honest.
class SeriesPoly {
  public:
    explicit SeriesPoly(Var outer = Var::T, Var inner = Var::X) : outer_(outer), inner_(inner) {}
    static SeriesPoly one(Var outer = Var::T, Var inner = Var::X);

    Var outer() const { return outer_; }
    Var inner() const { return inner_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const HalfLaurent& coeff(int d) const;
    void add_term(int d, const HalfLaurent& c);
    const std::vector<HalfLaurent>& coeffs() const { return coeffs_; }

    SeriesPoly& operator+=(const SeriesPoly& o);
    friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
    bool operator==(const SeriesPoly& o) const;

    // outer -> outer^k (degree stretch), k >= 1
    SeriesPoly stretched(int k, Var new_outer) const;
    // multiply by outer^k
    SeriesPoly outer_shifted(int k) const;

    // Exact value with inner = p, outer = t.
    Rat eval_exact(const Int& p, const Rat& t) const;

    bool integer_coeffs() const;
    bool nonneg_coeffs() const;

    std::string str() const;
    std::string latex() const;

  private:
    void trim();
    Var outer_, inner_;
    std::vector<HalfLaurent> coeffs_;
};

// Whether f satisfies f(inner^-1, outer^-1) == inner^xs * outer^os * f,
// all comparisons exact. Degree bookkeeping: with D = f.degree(), the
// identity reads coeff[D + os](inner^-1) == inner^xs * coeff[d] for all d,
// where D + os + d ranges over the reversed index.
bool check_two_variable_fe(const SeriesPoly& f, HalfInt inner_exp, int outer_exp);

}  // namespace latzeta
