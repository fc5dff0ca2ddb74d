#pragma once

#include <vector>

#include "rnagen/count.hpp"
#include "rnagen/error.hpp"

namespace rnagen {

/// Parameters of the combinatorial set: chain length and number of base
/// pairs. The set is nonempty iff pairs == 0 or 2*pairs + 1 <= length.
struct StructureParams {
    int length = 0;
    int pairs = 0;
};

/// Throws Errc::bad_argument unless both fields are non-negative.
void validate_params(StructureParams params);

/// Exact binomial coefficient C(n, k), multiplicative running product with
/// interleaved exact divisions: O(k) big-integer operations.
Count binomial(int n, int k);

/// Number of secondary structures of the given length with the given number
/// of pairs, by the closed formula C(d, m) * C(d, m+1) / d with d = n - m.
/// Returns 1 for (0, 0) and 0 whenever 2*pairs >= length > 0.
Count count_explicit(StructureParams params);

/// Same quantity by the two-parameter recurrence
///   S(n, m) = S(n-1, m) + sum_{i=0}^{m-1} sum_{j=2i}^{n-2(m-i)-1} S(n-2-j, m-1-i) * S(j, i)
/// with S(n, 0) = 1 and S(n, m) = 0 for 2m >= n. Evaluated bottom-up over
/// the whole (length, pairs) rectangle; used as an independent cross-check
/// of count_explicit.
Count count_recurrence(StructureParams params);

/// The full DP rectangle behind count_recurrence: result[n][m] = S(n, m)
/// for all 0 <= n <= max_length, 0 <= m <= max_pairs.
std::vector<std::vector<Count>> recurrence_table(int max_length, int max_pairs);

/// Narayana number (1/n) * C(n, m-1) * C(n, m); requires n >= m >= 1.
/// Satisfies count_explicit({n, m}) == narayana(n - m, m + 1) for m < n/2.
Count narayana(int n, int m);

/// Immutable rectangle of structure counts, built eagerly up to the given
/// bounds. Safe for unlimited concurrent readers once constructed.
class CountTable {
public:
    CountTable(int max_length, int max_pairs);

    int max_length() const noexcept { return max_length_; }
    int max_pairs() const noexcept { return max_pairs_; }

    /// S(length, pairs); throws Errc::table_too_small outside the bounds.
    const Count& at(int length, int pairs) const;

    /// Unchecked lookup for callers that have already verified coverage.
    /// Storage is column-contiguous in length: the ranking walks scan
    /// constant-pairs runs, so consecutive lookups stay adjacent in memory.
    const Count& cell(int length, int pairs) const noexcept {
        return cells_[static_cast<std::size_t>(pairs) * (max_length_ + 1) + length];
    }

private:
    int max_length_;
    int max_pairs_;
    std::vector<Count> cells_;
};

inline CountTable build_table(int max_length, int max_pairs) {
    return CountTable(max_length, max_pairs);
}

} // namespace rnagen
