#include "latzeta/total_ash.hpp"

#include "latzeta/errors.hpp"

namespace latzeta {
namespace totalash {

using descent::Ground;
using descent::SubsetMask;

int TotalAshSpec::n() const {
    return static_cast<int>(2 * ell + 2 + A.twice);
}

void TotalAshSpec::validate() const {
    if (ell < 1) throw usage_error("ell must be positive");
    if (n() <= 0) throw usage_error("dimension 2(ell + A + 1) must be positive");
    if (n() - B.twice <= 0) throw usage_error("need n - 2B > 0 for the combined polynomial");
}

TermTable script_u(int ell, const SubsetMask& J) {
    if (J.ground != Ground::Shifted || J.ell != ell) throw usage_error("script_u wants J inside [0,ell-1]");
    TermTable out(Var::X);
    // Split [1, ell-1] into the part inside J and the rest.
    std::vector<int> inJ, outJ;
    for (int i = 1; i <= ell - 1; ++i) (J.contains(i) ? inJ : outJ).push_back(i);
    const long long aJ = descent::stat_a(ell, J, -1);
    const long long bJ = descent::stat_b(ell, J);

    const int r0 = static_cast<int>(inJ.size()), r1 = static_cast<int>(outJ.size());
    for (std::uint64_t s0 = 0; s0 < (1ull << r0); ++s0) {
        std::vector<int> e0;
        for (int i = 0; i < r0; ++i)
            if ((s0 >> i) & 1u) e0.push_back(inJ[i]);
        for (std::uint64_t s1 = 0; s1 < (1ull << r1); ++s1) {
            std::vector<int> e1 = e0;
            for (int i = 0; i < r1; ++i)
                if ((s1 >> i) & 1u) e1.push_back(outJ[i]);
            SubsetMask unionK = descent::subset_from(e1, ell, Ground::Inner);
            SubsetMask I1 = descent::make_subset(unionK.bits & ~J.bits, ell, Ground::Inner);

            TableTerm t;
            t.weight = descent::w_poly_by_permutations(ell, unionK).substitute_inverse().retagged(Var::X);
            t.xExp = HalfInt::whole(aJ + 2 * descent::stat_a(ell, I1, -1));
            t.uExp = static_cast<int>(bJ + 2 * descent::stat_b(ell, I1));
            t.tDeg = 2 * I1.count();
            out.add(std::move(t));
        }
    }
    return out;
}

TermTable u_parity(int ell, Parity parity) {
    TermTable out(Var::X);
    const int want = parity == Parity::Even ? 0 : 1;
    for (std::uint64_t s = 0; s < (1ull << ell); ++s) {
        SubsetMask J = descent::make_subset(s, ell, Ground::Shifted);
        if (J.count() % 2 != want) continue;
        TermTable inner = script_u(ell, J).shifted(HalfInt(0), 0, static_cast<int>(descent::bracket(J)), J.count());
        out = out + inner;
    }
    return out;
}

TermTable p_ell_i(int ell, const SubsetMask& I) {
    if (I.ground != Ground::Full || I.ell != ell) throw usage_error("p_ell_i wants I inside [1,ell]");
    TermTable out(Var::q);
    for (std::uint64_t h = 0; h < (1ull << ell); ++h) {
        SubsetMask H = descent::make_subset(h, ell, Ground::Shifted);
        const int m = std::max(0, ell - 1);
        for (std::uint64_t k = 0; k < (1ull << m); ++k) {
            SubsetMask K = descent::make_subset(k << 1, ell, Ground::Inner);
            if (descent::delta_set(H, K) != I) continue;
            TableTerm t;
            t.weight = descent::w_poly_by_permutations(ell, K);
            t.xExp = HalfInt::whole(-descent::stat_a(ell, K, -1) - descent::stat_a(ell, H, -1));
            t.uExp = static_cast<int>(descent::stat_b(ell, H) + descent::stat_b(ell, K));
            t.tDeg = H.count() + K.count();
            out.add(std::move(t));
        }
    }
    return out;
}

TermTable u_parity_via_pli(int ell, Parity parity) {
    TermTable sum(Var::X);
    for (std::uint64_t s = 0; s < (1ull << ell); ++s) {
        SubsetMask I = descent::make_subset(s << 1, ell, Ground::Full);
        TermTable contrib = p_ell_i(ell, I).invert_weight_var(Var::X).shifted(HalfInt(0), 0, I.count(), 0);
        sum = sum + contrib;
    }
    return sum.parity_part(parity == Parity::Even ? 0 : 1);
}

std::pair<SeriesPoly, SeriesPoly> w0_w1(const TotalAshSpec& spec) {
    spec.validate();
    TermTable even = u_parity(spec.ell, Parity::Even);
    TermTable odd = u_parity(spec.ell, Parity::Odd);
    SeriesPoly w0 = even.specialize(spec.A, spec.A, spec.B);
    w0 += odd.specialize(spec.A, spec.A, spec.B).outer_shifted(1);
    SeriesPoly w1 = even.specialize(spec.A, spec.A, -spec.B).outer_shifted(1);
    w1 += odd.specialize(spec.A, spec.A, -spec.B);
    return {w0, w1};
}

SeriesPoly w_total(const TotalAshSpec& spec) {
    spec.validate();
    auto [w0, w1] = w0_w1(spec);
    const int n = spec.n();
    SeriesPoly total = w0.stretched(n, Var::Y);
    total += w1.stretched(n, Var::Y).outer_shifted(static_cast<int>(-spec.B.twice));
    return total;
}

bool check_fe_total(int ell) {
    const long long L = ell;
    TermTable lhs = u_parity(ell, Parity::Even).invert_all();
    const long long dx = -(2 * L * (L * L - 1)) / 3 - L;
    TermTable rhs = u_parity(ell, Parity::Odd)
                        .shifted(HalfInt::whole(dx), static_cast<int>(-(L - 1) * (L - 1)), static_cast<int>(-L),
                                 static_cast<int>(1 - 2 * L));
    return lhs.equivalent(rhs);
}

bool check_b0_degeneration(int ell, HalfInt A) {
    TotalAshSpec spec{ell, A, HalfInt(0)};
    SeriesPoly lhs = w_total(spec);
    const int n = spec.n();

    SeriesPoly rhs = ash::p_total(ell).invert_weight_var(Var::X).specialize(A, A, HalfInt(0)).stretched(n, Var::Y);
    for (int r = 0; r <= ell; ++r) {
        HalfInt e = HalfInt::whole(static_cast<long long>(ell) * (ell + 1) / 2 - static_cast<long long>(r) * (r + 1) / 2) +
                    (ell - r) * A;
        SeriesPoly factor(Var::Y, Var::X);
        factor.add_term(0, HalfLaurent::one(Var::X));
        factor.add_term(n, HalfLaurent::monomial(1, e, Var::X));
        rhs = rhs * factor;
    }
    return lhs == rhs;
}

}  // namespace totalash
}  // namespace latzeta
