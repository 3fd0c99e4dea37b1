#include "latzeta/descent.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "latzeta/errors.hpp"

namespace latzeta {
namespace descent {

int SubsetMask::count() const {
    return std::popcount(bits);
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = lo(); i <= hi(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

SubsetMask SubsetMask::complement() const {
    SubsetMask r = *this;
    r.bits = 0;
    for (int i = lo(); i <= hi(); ++i)
        if (!contains(i)) r.bits |= 1ull << i;
    return r;
}

SubsetMask make_subset(std::uint64_t bits, int ell, Ground g) {
    if (ell < 1 || ell > kMaxEll) throw usage_error("ell out of range [1,60]");
    SubsetMask m{bits, ell, g};
    std::uint64_t valid = 0;
    for (int i = m.lo(); i <= m.hi(); ++i) valid |= 1ull << i;
    if (bits & ~valid) throw usage_error("subset exceeds its ground interval");
    return m;
}

SubsetMask subset_from(const std::vector<int>& elems, int ell, Ground g) {
    std::uint64_t bits = 0;
    for (int e : elems) {
        if (e < 0 || e > 63) throw usage_error("subset element out of range");
        bits |= 1ull << e;
    }
    return make_subset(bits, ell, g);
}

Permutation identity_perm(int ell) {
    Permutation p;
    p.images.resize(ell);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

SubsetMask descent_set(const Permutation& pi) {
    const int ell = pi.size();
    std::uint64_t bits = 0;
    for (int i = 1; i < ell; ++i)
        if (pi.images[i - 1] > pi.images[i]) bits |= 1ull << i;
    return make_subset(bits, ell, Ground::Inner);
}

long inversions(const Permutation& pi) {
    const int ell = pi.size();
    long inv = 0;
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            if (pi.images[i] > pi.images[j]) ++inv;
    return inv;
}

namespace {

// One sweep of S_ell fills the polynomial for every descent class.
std::map<std::uint64_t, HalfLaurent> sweep_descent_classes(int ell) {
    std::map<std::uint64_t, HalfLaurent> table;
    Permutation pi = identity_perm(ell);
    do {
        const std::uint64_t k = descent_set(pi).bits;
        const long inv = inversions(pi);
        auto [it, fresh] = table.try_emplace(k, HalfLaurent(Var::q));
        it->second += HalfLaurent::monomial(1, HalfInt::whole(inv), Var::q);
    } while (std::next_permutation(pi.images.begin(), pi.images.end()));
    return table;
}

std::mutex g_sweep_mutex;
std::map<int, std::map<std::uint64_t, HalfLaurent>> g_sweep_cache;

}  // namespace

HalfLaurent w_poly_by_permutations(int ell, const SubsetMask& K, int enum_cap) {
    if (K.ell != ell || K.ground != Ground::Inner) throw usage_error("descent class wants a subset of [1,ell-1]");
    if (ell > enum_cap) throw resource_error("S_ell sweep beyond the enumeration cap");
    std::lock_guard<std::mutex> lock(g_sweep_mutex);
    auto it = g_sweep_cache.find(ell);
    if (it == g_sweep_cache.end()) it = g_sweep_cache.emplace(ell, sweep_descent_classes(ell)).first;
    auto jt = it->second.find(K.bits);
    return jt == it->second.end() ? HalfLaurent(Var::q) : jt->second;
}

HalfLaurent q_integer(int k) {
    HalfLaurent r(Var::q);
    for (int j = 0; j < k; ++j) r += HalfLaurent::monomial(1, HalfInt::whole(j), Var::q);
    return r;
}

HalfLaurent q_factorial(int k) {
    HalfLaurent r = HalfLaurent::one(Var::q);
    for (int j = 1; j <= k; ++j) r *= q_integer(j);
    return r;
}

HalfLaurent q_multinomial(int ell, const SubsetMask& cuts) {
    if (cuts.ell != ell || cuts.ground != Ground::Inner) throw usage_error("multinomial cuts live in [1,ell-1]");
    HalfLaurent den = HalfLaurent::one(Var::q);
    int prev = 0;
    for (int c : cuts.elements()) {
        den *= q_factorial(c - prev);
        prev = c;
    }
    den *= q_factorial(ell - prev);
    auto quot = q_factorial(ell).divide_exact(den);
    if (!quot || !quot->integer_coeffs())
        throw usage_error("q-multinomial division failed to be exact");
    return *quot;
}

HalfLaurent w_poly_by_multinomials(int ell, const SubsetMask& K) {
    if (K.ell != ell || K.ground != Ground::Inner) throw usage_error("descent class wants a subset of [1,ell-1]");
    // Alternating sum of multinomials over the subsets of K.
    HalfLaurent sum(Var::q);
    const auto elems = K.elements();
    const int r = static_cast<int>(elems.size());
    for (std::uint64_t sub = 0; sub < (1ull << r); ++sub) {
        std::vector<int> cut;
        for (int i = 0; i < r; ++i)
            if ((sub >> i) & 1u) cut.push_back(elems[i]);
        HalfLaurent m = q_multinomial(ell, subset_from(cut, ell, Ground::Inner));
        if ((r - std::popcount(sub)) % 2 == 1) m = -m;
        sum += m;
    }
    return sum;
}

long long stat_a(int ell, const SubsetMask& K, int eps) {
    if (eps != 1 && eps != -1) throw usage_error("eps must be +1 or -1");
    long long s = 0;
    for (int i : K.elements()) s += -(static_cast<long long>(i) * (i - eps)) / 2 + static_cast<long long>(ell) * (ell - eps) / 2;
    return s;
}

long long stat_b(int ell, const SubsetMask& K) {
    long long s = 0;
    for (int i : K.elements()) s += ell - 1 - i;
    return s;
}

long long stat_n(const SubsetMask& K) {
    long long s = 0;
    int run = 0;
    for (int i = K.lo(); i <= K.hi() + 1; ++i) {
        if (i <= K.hi() && K.contains(i)) {
            ++run;
        } else if (run > 0) {
            s += static_cast<long long>(run) * (run + 1) / 2;
            run = 0;
        }
    }
    return s;
}

long long stat_mu(int ell, const SubsetMask& K, int eps) {
    long long s = stat_n(K);
    for (int k : K.elements()) s += static_cast<long long>(k) * (k - eps) / 2;
    (void)ell;
    return s;
}

long long min_mu(int ell, int d, int eps) {
    if (d < 1 || d > ell - 1) throw usage_error("d must lie in [1, ell-1]");
    if (eps != 1 && eps != -1) throw usage_error("eps must be +1 or -1");
    // d(d+1)(d + (7-3eps)/2)/6, an integer for both signs.
    const long long dd = d;
    return dd * (dd + 1) * (2 * dd + 7 - 3 * eps) / 12;
}

SubsetMask flat(const SubsetMask& I) {
    if (I.ground != Ground::Full) throw usage_error("flat expects a subset of [1,ell]");
    std::uint64_t out = 0;
    int i = 1;
    while (i <= I.ell) {
        if (!I.contains(i)) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 <= I.ell && I.contains(j + 1)) ++j;
        // maximal interval [i, j]: record i-1 and j, clipped to [0, ell-1]
        out |= 1ull << (i - 1);
        if (j <= I.ell - 1) out |= 1ull << j;
        i = j + 1;
    }
    return make_subset(out, I.ell, Ground::Shifted);
}

SubsetMask natural(const SubsetMask& H) {
    if (H.ground != Ground::Shifted) throw usage_error("natural expects a subset of [0,ell-1]");
    auto h = H.elements();
    std::uint64_t out = 0;
    const int t = static_cast<int>(h.size());
    for (int v = 0; v < t; v += 2) {
        const int from = h[v] + 1;
        const int to = (v + 1 < t) ? h[v + 1] : H.ell;
        for (int x = from; x <= to; ++x) out |= 1ull << x;
    }
    return make_subset(out, H.ell, Ground::Full);
}

SubsetMask delta_set(const SubsetMask& H, const SubsetMask& K) {
    if (H.ground != Ground::Shifted || K.ground != Ground::Inner || H.ell != K.ell)
        throw usage_error("delta_set expects H in [0,ell-1] and K in [1,ell-1]");
    SubsetMask sym = make_subset(H.bits ^ K.bits, H.ell, Ground::Shifted);
    return natural(sym);
}

long long bracket(const SubsetMask& J) {
    if (J.ground != Ground::Shifted) throw usage_error("bracket expects a subset of [0,ell-1]");
    long long s = 0;
    int nu = 0;
    for (int j : J.elements()) {
        ++nu;
        const long long val = static_cast<long long>(j) - J.ell;
        s += (nu % 2 == 1) ? -val : val;
    }
    return s;
}

}  // namespace descent
}  // namespace latzeta
