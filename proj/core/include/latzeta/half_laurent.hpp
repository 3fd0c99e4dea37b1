#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "latzeta/rational.hpp"

namespace latzeta {

enum class Var : std::uint8_t { X, q, u, T, Y };

const char* var_name(Var v);

// Exponent in (1/2)*Z, stored doubled so half-integers stay exact.
struct HalfInt {
    long long twice = 0;

    HalfInt() = default;
    explicit constexpr HalfInt(long long doubled) : twice(doubled) {}
    static constexpr HalfInt whole(long long k) { return HalfInt(2 * k); }
    static constexpr HalfInt half(long long k) { return HalfInt(k); }

    bool is_integer() const { return twice % 2 == 0; }
    long long floor_int() const;  // largest integer <= value

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    friend HalfInt operator*(long long c, HalfInt a) { return HalfInt(c * a.twice); }
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const;  // "k" or "k/2"
};

// Sparse univariate Laurent polynomial with exponents in (1/2)*Z and
// exact rational coefficients. Zero coefficients are never stored.
class HalfLaurent {
  public:
    explicit HalfLaurent(Var v = Var::X) : var_(v) {}
    static HalfLaurent constant(const Rat& c, Var v = Var::X);
    static HalfLaurent monomial(const Rat& c, HalfInt e, Var v = Var::X);
    static HalfLaurent one(Var v = Var::X) { return constant(1, v); }

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<long long, Rat>& raw_terms() const { return terms_; }

    Rat coeff(HalfInt e) const;
    void set_coeff(HalfInt e, const Rat& c);
    std::optional<HalfInt> min_exp() const;
    std::optional<HalfInt> max_exp() const;

    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }
    HalfLaurent operator-() const;
    bool operator==(const HalfLaurent& o) const = default;

    void scale(const Rat& c);
    void shift(HalfInt e);  // multiply by var^e
    HalfLaurent scaled(const Rat& c) const;
    HalfLaurent shifted(HalfInt e) const;

    // var -> var^-1 (an involution)
    HalfLaurent substitute_inverse() const;

    // Rename the variable; exponents and coefficients are untouched.
    HalfLaurent retagged(Var v) const;

    // Exact value at var = p. Half-integer exponents require p to be a
    // perfect square (precision_error otherwise).
    Rat eval_exact(const Int& p) const;

    bool integer_coeffs() const;
    bool nonneg_coeffs() const;

    // Quotient of exact division; nullopt when the division has a remainder.
    std::optional<HalfLaurent> divide_exact(const HalfLaurent& d) const;

    std::string str() const;    // canonical text form, ascending exponents
    std::string latex() const;  // same ordering, TeX superscripts

  private:
    Var var_;
    std::map<long long, Rat> terms_;  // doubled exponent -> coefficient
};

}  // namespace latzeta
