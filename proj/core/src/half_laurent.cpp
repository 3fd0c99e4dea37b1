#include "latzeta/half_laurent.hpp"

#include <sstream>

#include "latzeta/errors.hpp"

namespace latzeta {

const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "X";
        case Var::q: return "q";
        case Var::u: return "u";
        case Var::T: return "T";
        case Var::Y: return "Y";
    }
    return "?";
}

long long HalfInt::floor_int() const {
    long long t = twice;
    if (t >= 0) return t / 2;
    return -((-t + 1) / 2);
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

HalfLaurent HalfLaurent::constant(const Rat& c, Var v) {
    HalfLaurent r(v);
    if (c != 0) r.terms_[0] = c;
    return r;
}

HalfLaurent HalfLaurent::monomial(const Rat& c, HalfInt e, Var v) {
    HalfLaurent r(v);
    if (c != 0) r.terms_[e.twice] = c;
    return r;
}

bool HalfLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rat HalfLaurent::coeff(HalfInt e) const {
    auto it = terms_.find(e.twice);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HalfLaurent::set_coeff(HalfInt e, const Rat& c) {
    if (c == 0)
        terms_.erase(e.twice);
    else
        terms_[e.twice] = c;
}

std::optional<HalfInt> HalfLaurent::min_exp() const {
    if (terms_.empty()) return std::nullopt;
    return HalfInt(terms_.begin()->first);
}

std::optional<HalfInt> HalfLaurent::max_exp() const {
    if (terms_.empty()) return std::nullopt;
    return HalfInt(terms_.rbegin()->first);
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    if (var_ != o.var_ && !is_zero() && !o.is_zero())
        throw usage_error(std::string("variable mismatch: ") + var_name(var_) + " vs " + var_name(o.var_));
    for (const auto& [e, c] : o.terms_) {
        Rat& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    return *this += o.operator-();
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.var_ != b.var_ && !a.is_zero() && !b.is_zero())
        throw usage_error(std::string("variable mismatch: ") + var_name(a.var_) + " vs " + var_name(b.var_));
    HalfLaurent r(a.var_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Rat& slot = r.terms_[ea + eb];
            slot += ca * cb;
            if (slot == 0) r.terms_.erase(ea + eb);
        }
    return r;
}

void HalfLaurent::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [e, v] : terms_) v *= c;
}

void HalfLaurent::shift(HalfInt e) {
    if (e.twice == 0) return;
    std::map<long long, Rat> shifted;
    for (auto& [k, v] : terms_) shifted.emplace(k + e.twice, std::move(v));
    terms_ = std::move(shifted);
}

HalfLaurent HalfLaurent::scaled(const Rat& c) const {
    HalfLaurent r = *this;
    r.scale(c);
    return r;
}

HalfLaurent HalfLaurent::shifted(HalfInt e) const {
    HalfLaurent r = *this;
    r.shift(e);
    return r;
}

HalfLaurent HalfLaurent::substitute_inverse() const {
    HalfLaurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

HalfLaurent HalfLaurent::retagged(Var v) const {
    HalfLaurent r = *this;
    r.var_ = v;
    return r;
}

Rat HalfLaurent::eval_exact(const Int& p) const {
    Rat sum(0);
    for (const auto& [e, c] : terms_) sum += c * prime_half_pow(p, e);
    return sum;
}

bool HalfLaurent::integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool HalfLaurent::nonneg_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::optional<HalfLaurent> HalfLaurent::divide_exact(const HalfLaurent& d) const {
    if (d.is_zero()) throw usage_error("division by zero polynomial");
    if (is_zero()) return HalfLaurent(var_);
    // Shift both operands to honest polynomials, divide, shift back.
    const long long slo = terms_.begin()->first;
    const long long dlo = d.terms_.begin()->first;
    HalfLaurent rem = shifted(HalfInt(-slo));
    HalfLaurent den = d.shifted(HalfInt(-dlo));
    const long long dtop = den.terms_.rbegin()->first;
    const Rat dlead = den.terms_.rbegin()->second;
    HalfLaurent quot(var_);
    while (!rem.is_zero() && rem.terms_.rbegin()->first >= dtop) {
        HalfLaurent t =
            HalfLaurent::monomial(rem.terms_.rbegin()->second / dlead, HalfInt(rem.terms_.rbegin()->first - dtop), var_);
        quot += t;
        rem -= t * den;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(HalfInt(slo - dlo));
}

namespace {

void append_term(std::ostringstream& out, bool& first, const Rat& c, HalfInt e, const char* vn, bool tex) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
        if (c < 0) out << "-";
        first = false;
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1) && e.twice != 0;
    if (!unit) out << a.get_str();
    if (e.twice != 0) {
        if (!unit) out << "*";
        out << vn;
        if (e.twice != 2) {
            if (tex)
                out << "^{" << e.str() << "}";
            else
                out << "^" << (e.is_integer() ? e.str() : "(" + e.str() + ")");
        }
    }
}

}  // namespace

std::string HalfLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) append_term(out, first, c, HalfInt(e), var_name(var_), false);
    return out.str();
}

std::string HalfLaurent::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) append_term(out, first, c, HalfInt(e), var_name(var_), true);
    return out.str();
}

}  // namespace latzeta
