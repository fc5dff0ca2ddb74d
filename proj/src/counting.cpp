#include "rnagen/counting.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rnagen {

std::string to_decimal(const Count& value) { return value.get_str(); }

Count parse_decimal(std::string_view text) {
    if (text.empty())
        throw Error(Errc::bad_argument, "expected a decimal number, got an empty string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw Error(Errc::bad_argument,
                        "invalid decimal digit '" + std::string(1, text[i]) + "'", i);
    }
    return Count(std::string(text), 10);
}

void validate_params(StructureParams params) {
    if (params.length < 0 || params.pairs < 0)
        throw Error(Errc::bad_argument, "length and pair count must be non-negative");
}

namespace {

// Exact quotient; a remainder here means a broken invariant, not bad input.
void exact_divide_ui(Count& numerator, unsigned long divisor) {
    if (!mpz_divisible_ui_p(numerator.get_mpz_t(), divisor))
        throw std::logic_error("internal error: inexact division in count arithmetic");
    mpz_divexact_ui(numerator.get_mpz_t(), numerator.get_mpz_t(), divisor);
}

} // namespace

Count binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        exact_divide_ui(result, static_cast<unsigned long>(i));  // running value is C(n-k+i, i)
    }
    return result;
}

Count count_explicit(StructureParams params) {
    validate_params(params);
    const int n = params.length, m = params.pairs;
    if (n == 0 && m == 0) return 1;
    if (2 * m >= n) return 0;
    const int d = n - m;  // here d >= m + 1 >= 1
    Count result = binomial(d, m) * binomial(d, m + 1);
    exact_divide_ui(result, static_cast<unsigned long>(d));
    return result;
}

std::vector<std::vector<Count>> recurrence_table(int max_length, int max_pairs) {
    validate_params({max_length, max_pairs});
    std::vector<std::vector<Count>> s(max_length + 1, std::vector<Count>(max_pairs + 1));
    for (int n = 0; n <= max_length; ++n) {
        s[n][0] = 1;
        for (int m = 1; m <= max_pairs; ++m) {
            if (2 * m >= n) continue;  // stays zero
            Count acc = s[n - 1][m];
            for (int i = 0; i < m; ++i) {
                // Empty j-ranges contribute nothing.
                for (int j = 2 * i; j <= n - 2 * (m - i) - 1; ++j)
                    acc += s[n - 2 - j][m - 1 - i] * s[j][i];
            }
            s[n][m] = std::move(acc);
        }
    }
    return s;
}

Count count_recurrence(StructureParams params) {
    validate_params(params);
    auto table = recurrence_table(params.length, params.pairs);
    return std::move(table[params.length][params.pairs]);
}

Count narayana(int n, int m) {
    if (m < 1 || m > n)
        throw Error(Errc::bad_argument, "narayana requires n >= m >= 1");
    Count result = binomial(n, m - 1) * binomial(n, m);
    exact_divide_ui(result, static_cast<unsigned long>(n));
    return result;
}

CountTable::CountTable(int max_length, int max_pairs)
    : max_length_(max_length), max_pairs_(max_pairs) {
    validate_params({max_length, max_pairs});
    cells_.resize(static_cast<std::size_t>(max_length + 1) * (max_pairs + 1));

    // Fill column by column, keeping two adjacent columns of the Pascal
    // triangle: S(d + m, m) = C(d, m) * C(d, m + 1) / d. Each cell costs one
    // multiplication and one exact division, and the ranking walks later
    // scan columns in the order the values are allocated here.
    std::vector<Count> prev(max_length + 1), cur(max_length + 1);
    auto entry = [&](int n, int m) -> Count& {
        return cells_[static_cast<std::size_t>(m) * (max_length_ + 1) + n];
    };
    for (int d = 0; d <= max_length; ++d) cur[d] = 1;  // C(d, 0)
    for (int k = 1; k <= max_pairs + 1; ++k) {
        prev.swap(cur);
        cur[0] = 0;  // C(0, k)
        for (int d = 1; d <= max_length; ++d) cur[d] = cur[d - 1] + prev[d - 1];

        const int m = k - 1;
        if (m == 0) entry(0, 0) = 1;
        for (int d = 1; d + m <= max_length; ++d) {
            const int n = d + m;
            if (2 * m >= n) continue;  // stays zero
            Count& cell = entry(n, m);
            cell = prev[d] * cur[d];
            if (!mpz_divisible_ui_p(cell.get_mpz_t(), static_cast<unsigned long>(d)))
                throw std::logic_error("internal error: inexact division in table build");
            mpz_divexact_ui(cell.get_mpz_t(), cell.get_mpz_t(), static_cast<unsigned long>(d));
        }
    }
}

const Count& CountTable::at(int length, int pairs) const {
    if (length < 0 || pairs < 0)
        throw Error(Errc::bad_argument, "length and pair count must be non-negative");
    if (length > max_length_ || pairs > max_pairs_)
        throw Error(Errc::table_too_small,
                    "count table covers lengths up to " + std::to_string(max_length_) +
                        " and pair counts up to " + std::to_string(max_pairs_));
    return cell(length, pairs);
}

} // namespace rnagen
