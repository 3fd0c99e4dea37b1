#include "latzeta/rational.hpp"

#include "latzeta/errors.hpp"

namespace latzeta {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw usage_error("rat_pow: zero base with negative exponent");
        return Rat(0);
    }
    unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r(int_pow(base.get_num(), a), int_pow(base.get_den(), a));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

Rat prime_half_pow(const Int& p, long long k2) {
    if (p < 1) throw usage_error("prime_half_pow: base must be >= 1");
    if (k2 % 2 == 0) return rat_pow(Rat(p), static_cast<long>(k2 / 2));
    Int root;
    mpz_sqrt(root.get_mpz_t(), p.get_mpz_t());
    if (root * root != p)
        throw precision_error("half-integer exponent at a non-square base; use floating evaluation");
    return rat_pow(Rat(root), static_cast<long>(k2));
}

std::string rat_to_string(const Rat& v) {
    return v.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat v;
    if (v.set_str(s, 10) != 0) throw usage_error("bad rational literal: " + s);
    v.canonicalize();
    return v;
}

}  // namespace latzeta
