#include "latzeta/local_zeta.hpp"

#include "latzeta/errors.hpp"

namespace latzeta {
namespace localzeta {

int LocalInvariants::n() const {
    switch (kind) {
        case FormKind::Orthogonal: return 2 * ell + n0;
        case FormKind::Symplectic: return 2 * ell;
        case FormKind::GeneralLinear: return ell;  // dimension stored in ell
    }
    return 0;
}

void LocalInvariants::validate() const {
    if (p < 2) throw usage_error("p must be at least 2");
    if (ell < 0) throw usage_error("negative Witt index");
    if (f != 1 && f != 2) throw usage_error("f must be 1 or 2");
    switch (kind) {
        case FormKind::GeneralLinear:
            if (ell < 1) throw usage_error("dimension must be positive");
            return;
        case FormKind::Symplectic:
            if (n0 != 0 || A.twice != 0 || B.twice != 0 || f != 1)
                throw usage_error("symplectic invariants are (n0, A, B, f) = (0, 0, 0, 1)");
            if (ell < 1) throw usage_error("symplectic rank must be positive");
            return;
        case FormKind::Orthogonal:
            if (n0 < 0 || n0 > 4) throw usage_error("anisotropic dimension must lie in [0,4]");
            if (A.twice != n0 - 2) throw usage_error("A must equal n0/2 - 1");
            if (f == 1 && B.twice != 0) throw usage_error("f = 1 forces B = 0");
            if (f == 2) {
                if (ell < 1) throw usage_error("the odd-class construction needs ell >= 1 when f = 2");
                const bool known = (n0 == 1 && (B.twice == 1 || B.twice == -1)) ||
                                   (n0 == 2 && (B.twice == 2 || B.twice == -2)) ||
                                   (n0 == 3 && (B.twice == 1 || B.twice == -1));
                if (!known) throw usage_error("no (A,B) row for these f = 2 invariants");
            }
            return;
    }
}

LocalInvariants classify_unramified(const Int& p, int n, DiscClass disc) {
    if (n < 2) throw usage_error("dimension must be at least 2");
    LocalInvariants inv;
    inv.p = p;
    inv.kind = FormKind::Orthogonal;
    if (disc == DiscClass::OddDim) {
        if (n % 2 == 0) throw usage_error("odd-dimension classification needs odd n");
        inv.ell = (n - 1) / 2;
        inv.n0 = 1;
        inv.A = HalfInt(-1);
        inv.B = HalfInt(-1);
        inv.f = 2;
    } else if (disc == DiscClass::Square) {
        if (n % 2 != 0) throw usage_error("square/non-square classification needs even n");
        inv.ell = n / 2;
        inv.n0 = 0;
        inv.A = HalfInt::whole(-1);
        inv.B = HalfInt(0);
        inv.f = 1;
    } else {
        if (n % 2 != 0) throw usage_error("square/non-square classification needs even n");
        inv.ell = n / 2 - 1;
        inv.n0 = 2;
        inv.A = HalfInt(0);
        inv.B = HalfInt::whole(-1);
        inv.f = 2;
    }
    inv.validate();
    return inv;
}

std::vector<long long> denominator_exponents(const LocalInvariants& inv) {
    inv.validate();
    std::vector<long long> e;
    if (inv.kind == FormKind::GeneralLinear) {
        for (int r = 0; r < inv.ell; ++r) e.push_back(r);
        return e;
    }
    // e_r = f * r * (A + ell - (r-1)/2); the symplectic case is the A = 0
    // instance, which yields r(2 ell + 1 - r)/2.
    const long long shift = inv.kind == FormKind::Symplectic ? 0 : inv.A.twice;
    for (long long r = 0; r <= inv.ell; ++r) {
        const long long doubled = inv.f * r * (shift + 2LL * inv.ell - (r - 1));
        if (doubled % 2 != 0) throw usage_error("non-integral denominator exponent");
        e.push_back(doubled / 2);
    }
    return e;
}

namespace {

std::vector<Rat> eval_series(const SeriesPoly& s, const Int& p) {
    std::vector<Rat> out(s.degree() + 1, Rat(0));
    for (int d = 0; d <= s.degree(); ++d) out[d] = s.coeff(d).eval_exact(p);
    return out;
}

}  // namespace

LocalFactor local_factor(const LocalInvariants& inv) {
    inv.validate();
    LocalFactor lf;
    lf.p = inv.p;
    lf.denomExponents = denominator_exponents(inv);

    switch (inv.kind) {
        case FormKind::GeneralLinear: {
            lf.denomStep = 2;  // T = p^-s = Y^2
            lf.numerator = {Rat(1)};
            lf.numeratorText = "1";
            return lf;
        }
        case FormKind::Symplectic: {
            lf.denomStep = 2 * inv.ell;  // T = p^(-ell s) = Y^n
            SeriesPoly w = ash::w_eps(inv.ell, -1);
            SeriesPoly wy = w.stretched(lf.denomStep, Var::Y);
            lf.numerator = eval_series(wy, inv.p);
            lf.numeratorText = w.str();
            return lf;
        }
        case FormKind::Orthogonal: {
            const int n = inv.n();
            lf.denomStep = inv.f * n;
            if (inv.ell == 0) {
                // anisotropic space: single geometric factor, numerator 1
                lf.numerator = {Rat(1)};
                lf.numeratorText = "1";
                return lf;
            }
            if (inv.f == 1) {
                SeriesPoly w = ash::p_total(inv.ell).invert_weight_var(Var::X).specialize(inv.A, inv.A, HalfInt(0));
                SeriesPoly wy = w.stretched(n, Var::Y);
                lf.numerator = eval_series(wy, inv.p);
                lf.numeratorText = w.str();
            } else {
                totalash::TotalAshSpec spec{inv.ell, inv.A, inv.B};
                SeriesPoly wt = totalash::w_total(spec);
                lf.numerator = eval_series(wt, inv.p);
                lf.numeratorText = wt.str();
            }
            return lf;
        }
    }
    throw usage_error("unreachable");
}

std::vector<Int> local_series_coeffs(const LocalInvariants& inv, int M) {
    if (M < 0) throw usage_error("series length must be non-negative");
    LocalFactor lf = local_factor(inv);
    std::vector<Rat> acc(M + 1, Rat(0));
    for (std::size_t d = 0; d < lf.numerator.size() && d <= static_cast<std::size_t>(M); ++d)
        acc[d] = lf.numerator[d];
    for (long long e : lf.denomExponents) {
        // multiply by 1 / (1 - p^e Y^step): cumulative geometric sums
        const Rat pe = rat_pow(Rat(lf.p), static_cast<long>(e));
        for (int d = lf.denomStep; d <= M; ++d) acc[d] += pe * acc[d - lf.denomStep];
    }
    std::vector<Int> out(M + 1);
    for (int d = 0; d <= M; ++d) {
        if (acc[d].get_den() != 1) throw usage_error("non-integral series coefficient");
        out[d] = acc[d].get_num();
    }
    return out;
}

std::vector<Int> local_index_coeffs(const LocalInvariants& inv, int maxIndexExp) {
    std::vector<Int> byY = local_series_coeffs(inv, 2 * maxIndexExp);
    std::vector<Int> out(maxIndexExp + 1, Int(0));
    for (int k = 0; k <= maxIndexExp; ++k) out[k] = byY[2 * k];
    for (std::size_t d = 1; d < byY.size(); d += 2)
        if (byY[d] != 0) throw usage_error("odd half-power coefficient should vanish");
    return out;
}

}  // namespace localzeta
}  // namespace latzeta
