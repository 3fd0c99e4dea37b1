#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "latzeta/series_poly.hpp"

namespace latzeta {

// One summand of a three-variable expression
//     weight(v) * v^xExp * u^uExp * v^(B*bCoef) * T^tDeg,
// where v is the weight variable (q or X) and B is an exponent parameter
// carried symbolically as the integer multiplier bCoef. Tables with
// bCoef == 0 everywhere are ordinary (v, u, T) expressions.
struct TableTerm {
    HalfLaurent weight;
    HalfInt xExp{0};
    int uExp = 0;
    int bCoef = 0;
    int tDeg = 0;
};

class TermTable {
  public:
    explicit TermTable(Var weight_var = Var::q) : var_(weight_var) {}

    Var weight_var() const { return var_; }
    const std::vector<TableTerm>& terms() const { return terms_; }
    void add(TableTerm t);
    std::size_t size() const { return terms_.size(); }

    // Terms merged by (uExp, bCoef, tDeg); the weight absorbs xExp.
    using Key = std::tuple<int, int, int>;
    std::map<Key, HalfLaurent> collect() const;

    // Structural equality after merging.
    bool equivalent(const TermTable& o) const;

    friend TermTable operator+(const TermTable& a, const TermTable& b);

    // weight var -> its inverse; xExp and the weight flip sign, u, B, T fixed.
    TermTable invert_weight_var(Var new_var) const;

    // Map every term through (x, u, T) -> (x^-1, u^-1, T^-1) and B -> B
    // (the symbolic exponent parameter keeps its meaning; its multiplier
    // flips sign because it rides on x). tDeg may go negative.
    TermTable invert_all() const;

    // Multiply by x^dx * u^du * x^(B*db) * T^dt.
    TermTable shifted(HalfInt dx, int du, int db, int dt) const;

    // Specialize u = x^uSlope, T -> x^tSlope * T, B = bValue; collapses to a
    // polynomial in T whose coefficients are HalfLaurent in the weight var.
    SeriesPoly specialize(HalfInt uSlope, HalfInt tSlope, HalfInt bValue) const;

    // Keep only the terms with tDeg of the given parity.
    TermTable parity_part(int parity) const;

    int max_t_deg() const;

    std::string str() const;

  private:
    Var var_;
    std::vector<TableTerm> terms_;
};

}  // namespace latzeta
