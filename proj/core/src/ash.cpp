#include "latzeta/ash.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "latzeta/errors.hpp"

namespace latzeta {
namespace ash {

using descent::Ground;
using descent::SubsetMask;

namespace {

void for_each_inner_subset(int ell, const std::function<void(const SubsetMask&)>& fn) {
    const int m = std::max(0, ell - 1);
    for (std::uint64_t s = 0; s < (1ull << m); ++s) fn(descent::make_subset(s << 1, ell, Ground::Inner));
}

}  // namespace

TermTable p_total(int ell) {
    if (ell < 1) throw usage_error("ell must be positive");
    TermTable table(Var::q);
    for_each_inner_subset(ell, [&](const SubsetMask& K) {
        TableTerm t;
        t.weight = descent::w_poly_by_permutations(ell, K);
        t.xExp = HalfInt::whole(-descent::stat_a(ell, K, -1));
        t.uExp = static_cast<int>(descent::stat_b(ell, K));
        t.tDeg = K.count();
        table.add(std::move(t));
    });
    return table;
}

SeriesPoly w_eps(int ell, int eps) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, SeriesPoly> cache;
    if (ell < 1) throw usage_error("ell must be positive");
    if (eps != 1 && eps != -1) throw usage_error("eps must be +1 or -1");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({ell, eps});
    if (it != cache.end()) return it->second;

    SeriesPoly out(Var::T, Var::X);
    for_each_inner_subset(ell, [&](const SubsetMask& K) {
        HalfLaurent w = descent::w_poly_by_permutations(ell, K).substitute_inverse().retagged(Var::X);
        w.shift(HalfInt::whole(descent::stat_a(ell, K, eps)));
        out.add_term(K.count(), w);
    });
    cache.emplace(std::pair{ell, eps}, out);
    return out;
}

long long gamma_coeff(int ell, int d, int eps, long long j) {
    if (d < 1 || d > ell - 1) throw usage_error("d must lie in [1, ell-1]");
    if (eps != 1 && eps != -1) throw usage_error("eps must be +1 or -1");
    long long count = 0;
    descent::Permutation pi = descent::identity_perm(ell);
    do {
        const SubsetMask D = descent_set(pi);
        if (D.count() != d) continue;
        long long val = static_cast<long long>(ell) * (ell - eps) / 2 * d - inversions(pi);
        for (int nu : D.elements()) val -= static_cast<long long>(nu) * (nu - eps) / 2;
        if (val == j) ++count;
    } while (std::next_permutation(pi.images.begin(), pi.images.end()));
    return count;
}

std::pair<Rat, Rat> alpha_beta(int ell, int d, int eps) {
    if (d < 1 || d > ell - 1) throw usage_error("d must lie in [1, ell-1]");
    if (eps != 1 && eps != -1) throw usage_error("eps must be +1 or -1");
    // alpha = ell(d-1)/2 - (d+1)(2d + 3 eps - 5)/12
    // beta  = ell(ell-eps)/2 - (d+1)(2d - 3 eps + 7)/12
    Rat alpha = Rat(ell) * (d - 1) / 2 - Rat((d + 1) * (2 * d + 3 * eps - 5)) / 12;
    Rat beta = Rat(ell) * (ell - eps) / 2 - Rat((d + 1) * (2 * d - 3 * eps + 7)) / 12;
    alpha.canonicalize();
    beta.canonicalize();
    return {alpha, beta};
}

HalfInt fe_x_exponent(int ell, int eps) {
    // ell(ell-1)/2 - ell(ell-1)(4 ell + 1 - 3 eps)/12, stored doubled.
    const long long L = ell;
    const long long doubled = L * (L - 1) - L * (L - 1) * (4 * L + 1 - 3 * eps) / 6;
    return HalfInt(doubled);
}

bool check_functional_eq(int ell, int eps) {
    SeriesPoly w = w_eps(ell, eps);
    if (ell == 1) return w == SeriesPoly::one(Var::T, Var::X);
    return check_two_variable_fe(w, fe_x_exponent(ell, eps), 1 - ell);
}

}  // namespace ash
}  // namespace latzeta
