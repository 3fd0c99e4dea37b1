#include "latzeta/term_table.hpp"

#include <sstream>

#include "latzeta/errors.hpp"

namespace latzeta {

void TermTable::add(TableTerm t) {
    if (t.weight.is_zero()) return;
    if (t.weight.var() != var_) throw usage_error("table term weight variable mismatch");
    terms_.push_back(std::move(t));
}

std::map<TermTable::Key, HalfLaurent> TermTable::collect() const {
    std::map<Key, HalfLaurent> merged;
    for (const auto& t : terms_) {
        Key k{t.uExp, t.bCoef, t.tDeg};
        auto [it, fresh] = merged.try_emplace(k, HalfLaurent(var_));
        it->second += t.weight.shifted(t.xExp);
    }
    for (auto it = merged.begin(); it != merged.end();)
        it = it->second.is_zero() ? merged.erase(it) : std::next(it);
    return merged;
}

bool TermTable::equivalent(const TermTable& o) const {
    return var_ == o.var_ && collect() == o.collect();
}

TermTable operator+(const TermTable& a, const TermTable& b) {
    TermTable r(a.var_);
    r.terms_ = a.terms_;
    for (const auto& t : b.terms_) r.add(t);
    return r;
}

TermTable TermTable::invert_weight_var(Var new_var) const {
    TermTable r(new_var);
    for (const auto& t : terms_)
        r.add({t.weight.substitute_inverse().retagged(new_var), -t.xExp, t.uExp, t.bCoef, t.tDeg});
    return r;
}

TermTable TermTable::invert_all() const {
    TermTable r(var_);
    for (const auto& t : terms_)
        r.add({t.weight.substitute_inverse(), -t.xExp, -t.uExp, -t.bCoef, -t.tDeg});
    return r;
}

TermTable TermTable::shifted(HalfInt dx, int du, int db, int dt) const {
    TermTable r(var_);
    for (const auto& t : terms_) r.add({t.weight, t.xExp + dx, t.uExp + du, t.bCoef + db, t.tDeg + dt});
    return r;
}

SeriesPoly TermTable::specialize(HalfInt uSlope, HalfInt tSlope, HalfInt bValue) const {
    SeriesPoly out(Var::T, var_);
    for (const auto& t : terms_) {
        if (t.tDeg < 0) throw usage_error("cannot specialize a table with negative T-degrees");
        HalfInt e = t.xExp + static_cast<long long>(t.uExp) * uSlope + static_cast<long long>(t.tDeg) * tSlope +
                    static_cast<long long>(t.bCoef) * bValue;
        out.add_term(t.tDeg, t.weight.shifted(e));
    }
    return out;
}

TermTable TermTable::parity_part(int parity) const {
    TermTable r(var_);
    for (const auto& t : terms_)
        if (((t.tDeg % 2) + 2) % 2 == parity) r.add(t);
    return r;
}

int TermTable::max_t_deg() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.tDeg);
    return m;
}

std::string TermTable::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, w] : collect()) {
        const auto [ue, bc, td] = k;
        if (!first) out << " + ";
        first = false;
        out << "(" << w.str() << ")";
        if (ue != 0) out << "*u^" << ue;
        if (bc != 0) out << "*" << var_name(var_) << "^(" << bc << "B)";
        if (td != 0) out << "*T^" << td;
    }
    return first ? "0" : out.str();
}

}  // namespace latzeta
