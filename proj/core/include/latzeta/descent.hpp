#pragma once

#include <cstdint>
#include <vector>

#include "latzeta/half_laurent.hpp"

namespace latzeta {
namespace descent {

// Which interval of Z a subset lives in. Subsets are 64-bit masks with
// bit i standing for the element i itself, so ell is capped at 60.
enum class Ground : std::uint8_t {
    Inner,    // [1, ell-1]
    Shifted,  // [0, ell-1]
    Full,     // [1, ell]
};

struct SubsetMask {
    std::uint64_t bits = 0;
    int ell = 1;
    Ground ground = Ground::Inner;

    int lo() const { return ground == Ground::Shifted ? 0 : 1; }
    int hi() const { return ground == Ground::Full ? ell : ell - 1; }
    int count() const;
    bool contains(int i) const { return (bits >> i) & 1u; }
    std::vector<int> elements() const;  // ascending
    SubsetMask complement() const;      // within the ground interval
    bool operator==(const SubsetMask&) const = default;
};

SubsetMask make_subset(std::uint64_t bits, int ell, Ground g);
SubsetMask subset_from(const std::vector<int>& elems, int ell, Ground g);

constexpr int kMaxEll = 60;           // structural cap from the 64-bit masks
constexpr int kDefaultEnumCap = 9;    // S_ell sweeps beyond this are refused

struct Permutation {
    std::vector<int> images;  // images[i] = pi(i+1), a bijection on [1, ell]
    int size() const { return static_cast<int>(images.size()); }
};

Permutation identity_perm(int ell);

SubsetMask descent_set(const Permutation& pi);
long inversions(const Permutation& pi);

// Descent polynomial sum of q^inv(pi) over pi with D(pi) == K, computed by
// a full sweep of S_ell (memoized per ell, all K at once).
HalfLaurent w_poly_by_permutations(int ell, const SubsetMask& K, int enum_cap = kDefaultEnumCap);

// Same polynomial through the signed q-multinomial expansion; the two
// routes are kept independent on purpose.
HalfLaurent w_poly_by_multinomials(int ell, const SubsetMask& K);

// q-integer [k], q-factorial, and the multinomial for the composition
// determined by cut points I inside [1, ell-1]. The multinomial is
// produced by exact division of q-factorials and verified to be exact.
HalfLaurent q_integer(int k);
HalfLaurent q_factorial(int k);
HalfLaurent q_multinomial(int ell, const SubsetMask& cuts);

// Exponent statistics. stat_a and stat_b accept subsets of [1,ell-1] or
// [0,ell-1]; the defining sums make sense for both.
long long stat_a(int ell, const SubsetMask& K, int eps);
long long stat_b(int ell, const SubsetMask& K);
long long stat_n(const SubsetMask& K);              // interval statistic N(K)
long long stat_mu(int ell, const SubsetMask& K, int eps);
long long min_mu(int ell, int d, int eps);          // min of stat_mu over #K = d

// Interval boundary maps between subsets of [1, ell] and [0, ell-1];
// mutually inverse bijections.
SubsetMask flat(const SubsetMask& I);
SubsetMask natural(const SubsetMask& H);

// d(H, K): the subset of [1, ell] cut out by the symmetric difference.
SubsetMask delta_set(const SubsetMask& H, const SubsetMask& K);

// Alternating boundary sum <J> for J inside [0, ell-1]; lands in [0, ell].
long long bracket(const SubsetMask& J);

}  // namespace descent
}  // namespace latzeta
