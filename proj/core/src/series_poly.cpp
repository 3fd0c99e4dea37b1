#include "latzeta/series_poly.hpp"

#include <sstream>

#include "latzeta/errors.hpp"

namespace latzeta {

SeriesPoly SeriesPoly::one(Var outer, Var inner) {
    SeriesPoly r(outer, inner);
    r.add_term(0, HalfLaurent::one(inner));
    return r;
}

const HalfLaurent& SeriesPoly::coeff(int d) const {
    static const HalfLaurent zeroX(Var::X);
    static const HalfLaurent zeroq(Var::q);
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return inner_ == Var::q ? zeroq : zeroX;
    return coeffs_[d];
}

void SeriesPoly::add_term(int d, const HalfLaurent& c) {
    if (d < 0) throw usage_error("negative outer degree");
    if (c.is_zero()) return;
    if (d >= static_cast<int>(coeffs_.size())) coeffs_.resize(d + 1, HalfLaurent(inner_));
    coeffs_[d] += c;
    trim();
}

void SeriesPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o) {
    for (int d = 0; d <= o.degree(); ++d) add_term(d, o.coeffs_[d]);
    return *this;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly r(a.outer_, a.inner_);
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) r.add_term(i + j, a.coeffs_[i] * b.coeffs_[j]);
    return r;
}

bool SeriesPoly::operator==(const SeriesPoly& o) const {
    if (degree() != o.degree()) return false;
    for (int d = 0; d <= degree(); ++d)
        if (coeffs_[d] != o.coeffs_[d]) return false;
    return true;
}

SeriesPoly SeriesPoly::stretched(int k, Var new_outer) const {
    if (k < 1) throw usage_error("stretch factor must be positive");
    SeriesPoly r(new_outer, inner_);
    for (int d = 0; d <= degree(); ++d) r.add_term(d * k, coeffs_[d]);
    return r;
}

SeriesPoly SeriesPoly::outer_shifted(int k) const {
    SeriesPoly r(outer_, inner_);
    for (int d = 0; d <= degree(); ++d) r.add_term(d + k, coeffs_[d]);
    return r;
}

Rat SeriesPoly::eval_exact(const Int& p, const Rat& t) const {
    Rat sum(0), tp(1);
    for (int d = 0; d <= degree(); ++d) {
        sum += coeffs_[d].eval_exact(p) * tp;
        tp *= t;
    }
    return sum;
}

bool SeriesPoly::integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.integer_coeffs()) return false;
    return true;
}

bool SeriesPoly::nonneg_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.nonneg_coeffs()) return false;
    return true;
}

std::string SeriesPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const bool unit = coeffs_[d].is_one();
        const bool simple = coeffs_[d].term_count() == 1;
        if (d == 0 || !unit) {
            if (simple || d == 0)
                out << coeffs_[d].str();
            else
                out << "(" << coeffs_[d].str() << ")";
        }
        if (d > 0) {
            if (!unit) out << "*";
            out << var_name(outer_);
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

std::string SeriesPoly::latex() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const bool unit = coeffs_[d].is_one();
        if (d == 0 || !unit) {
            if (coeffs_[d].term_count() == 1 || d == 0)
                out << coeffs_[d].latex();
            else
                out << "(" << coeffs_[d].latex() << ")";
        }
        if (d > 0) {
            out << var_name(outer_);
            if (d > 1) out << "^{" << d << "}";
        }
    }
    return out.str();
}

bool check_two_variable_fe(const SeriesPoly& f, HalfInt inner_exp, int outer_exp) {
    // Matching powers of the outer variable, the identity is equivalent to
    // coeff(D-d)(x^-1) == x^a coeff(d) for all d, and forces b == -D.
    const int D = f.degree();
    if (outer_exp != -D) return false;
    for (int d = 0; d <= D; ++d) {
        HalfLaurent lhs = f.coeff(D - d).substitute_inverse();
        HalfLaurent rhs = f.coeff(d).shifted(inner_exp);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace latzeta
