#ifndef HYPERVIS_EXACT_COUNT_HPP
#define HYPERVIS_EXACT_COUNT_HPP

#include <cstdint>
#include <vector>

#include "hypervis/bigint.hpp"
#include "hypervis/lattice.hpp"

namespace hypervis {

/// Moebius function values mu(1..limit).
struct MobiusTable {
    std::int64_t limit = 0;
    std::vector<std::int8_t> values; // values[m-1] = mu(m)

    std::int8_t mu(std::int64_t m) const { return values[static_cast<std::size_t>(m - 1)]; }
};

/// Exact visibility statistics of [0,N]^d: ordered-pair count, mean squared
/// distance and its second moment, all in unbounded integer / rational form.
struct ExactCountReport {
    LatticeParams params;
    BigInt omega_count;
    BigInt sum_sq;      // sum of distance_sq over visible ordered pairs
    BigInt sum_quartic; // sum of distance_sq^2 over visible ordered pairs
    BigRat a_vis;
    BigRat m2_vis;
};

MobiusTable mobius_table(std::int64_t limit);

/// Closed-form inner sums of the Moebius expansion, per modulus b:
/// order 0 is H(b) = sum over residue classes of count^2, order 2 is
/// sum of (v-w)^2 over pairs with b | v-w, order 4 the quartic analogue.
BigInt pair_moment_mod(std::int64_t n, std::int64_t b, int order);

/// Exact number of ordered visible pairs in [0,N]^d.
BigInt count_visible_exact(const LatticeParams& params);

/// Exact mean and second moment of squared distances over visible pairs.
/// Requires d >= 2.
ExactCountReport visible_distance_moments(const LatticeParams& params);

/// Exhaustive enumeration oracle for self-visible ordered K-tuples.
struct BruteForceResult {
    BigInt tuple_count;
    BigInt total_tuples; // (N+1)^(d*K)
    // Moment sums, filled for K = 2 only.
    BigInt sum_sq;
    BigInt sum_quartic;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 200'000'000;

BruteForceResult brute_force_reference(const LatticeParams& params, int k,
                                       std::uint64_t enum_budget = kDefaultEnumBudget);

} // namespace hypervis

#endif
