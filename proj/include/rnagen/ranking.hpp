#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rnagen/codec.hpp"
#include "rnagen/count.hpp"
#include "rnagen/counting.hpp"

namespace rnagen {

/// Source of uniform big-integer draws. Implementations are single-owner;
/// use one per thread when sampling in parallel.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform draw from [0, bound); bound must be positive. Deterministic
    /// for a fixed seed.
    virtual Count next_below(const Count& bound) = 0;
};

/// Mersenne-twister backed source: draws the minimal number of 64-bit words
/// covering the bound and rejects overshoots, so draws are exactly uniform.
class Mt19937Source final : public RandomSource {
public:
    explicit Mt19937Source(std::uint64_t seed) : gen_(seed) {}

    Count next_below(const Count& bound) override;

private:
    std::mt19937_64 gen_;
};

// Rank/unrank between variant trees (or whole structures) and 0-based
// positions in [0, S(length, pairs)). The order is the one induced by the
// layout below, which is not lexicographic on the symbols:
//   - all words starting '*' come first, ordered recursively at
//     (length-1, pairs);
//   - then bracket-led words grouped by (tail_pairs, tail_len) blocks in
//     lexicographic block order, each block ordered by right-subtree rank
//     as the high digit and left-subtree rank as the low digit.
//
// Overloads taking a CountTable require it to cover (length, pairs) and
// never read outside that rectangle; overloads without a table recompute
// every count on the fly via count_explicit (no preprocessing at all).

Count rank_variant(const VariantTree& variant, int length, int pairs, const CountTable& table);
Count rank_variant(const VariantTree& variant, int length, int pairs);

VariantTree unrank_variant(const Count& rank, int length, int pairs, const CountTable& table);
VariantTree unrank_variant(const Count& rank, int length, int pairs);

Count rank_structure(const MotzkinWord& word, const CountTable& table);
Count rank_structure(const MotzkinWord& word);

MotzkinWord unrank_structure(const Count& rank, int length, int pairs, const CountTable& table);
MotzkinWord unrank_structure(const Count& rank, int length, int pairs);

/// Calls the sink with unrank_structure(r) for r in [from, to), in
/// increasing rank order. Requires 0 <= from <= to <= S(length, pairs).
void enumerate_structures(int length, int pairs, const Count& from, const Count& to,
                          const CountTable& table,
                          const std::function<void(const MotzkinWord&)>& sink);

/// Convenience form collecting the range into a vector.
std::vector<MotzkinWord> enumerate_range(int length, int pairs, const Count& from,
                                         const Count& to, const CountTable& table);

/// draws independent uniform structures by unranking uniform ranks; exact
/// uniformity over the set, no rejection at the structure level. Throws
/// Errc::empty_set when S(length, pairs) == 0.
std::vector<MotzkinWord> sample_structures(int length, int pairs, int draws,
                                           RandomSource& rng, const CountTable& table);

} // namespace rnagen
