#include "rnagen/oracle.hpp"

#include <algorithm>
#include <set>

#include "rnagen/codec.hpp"
#include "rnagen/counting.hpp"
#include "rnagen/error.hpp"
#include "rnagen/ranking.hpp"

namespace rnagen {

namespace {

void extend(std::string& word, int balance, int pairs_used, int length, int pairs,
            std::vector<std::string>& out) {
    const int left = length - static_cast<int>(word.size());
    if (left == 0) {
        if (balance == 0 && pairs_used == pairs) out.push_back(word);
        return;
    }
    if (balance > left) return;                          // cannot close everything
    if (pairs_used + (left - balance) / 2 < pairs) return;  // cannot open enough

    word.push_back('*');
    extend(word, balance, pairs_used, length, pairs, out);
    word.back() = '(';
    if (pairs_used < pairs)
        extend(word, balance + 1, pairs_used + 1, length, pairs, out);
    word.back() = ')';
    if (balance > 0 && word[word.size() - 2] != '(')     // "()" never occurs
        extend(word, balance - 1, pairs_used, length, pairs, out);
    word.pop_back();
}

} // namespace

std::vector<std::string> brute_force_enumerate(int length, int pairs, int cap) {
    if (length < 0 || pairs < 0)
        throw Error(Errc::bad_argument, "length and pair count must be non-negative");
    if (length > cap)
        throw Error(Errc::cap_exceeded, "length " + std::to_string(length) +
                                            " exceeds the exhaustive cap " + std::to_string(cap));
    std::vector<std::string> out;
    std::string word;
    word.reserve(static_cast<std::size_t>(length));
    extend(word, 0, 0, length, pairs, out);
    return out;
}

BijectionReport verify_bijection(int length, int pairs, int cap) {
    BijectionReport report;
    report.length = length;
    report.pairs = pairs;

    std::vector<std::string> reference = brute_force_enumerate(length, pairs, cap);
    report.set_size = reference.size();

    const Count total = count_explicit({length, pairs});
    if (Count(reference.size()) != total) {
        report.detail = "brute-force size " + std::to_string(reference.size()) +
                        " != count " + to_decimal(total);
        return report;
    }

    CountTable table(length, pairs);
    std::set<std::string> seen;
    for (Count r = 0; r < total; ++r) {
        MotzkinWord word = unrank_structure(r, length, pairs, table);
        if (word.length() != length || word.pairs() != pairs) {
            report.detail = "rank " + to_decimal(r) + " produced parameters (" +
                            std::to_string(word.length()) + ", " +
                            std::to_string(word.pairs()) + ")";
            return report;
        }
        if (!seen.insert(word.str()).second) {
            report.detail = "duplicate structure " + word.str() + " at rank " + to_decimal(r);
            return report;
        }
        if (rank_structure(word, table) != r) {
            report.detail = "rank(unrank(" + to_decimal(r) + ")) != " + to_decimal(r) +
                            " for " + word.str();
            return report;
        }
    }

    std::sort(reference.begin(), reference.end());
    if (!std::equal(reference.begin(), reference.end(), seen.begin(), seen.end())) {
        report.detail = "unranked set differs from the brute-force set";
        return report;
    }

    report.pass = true;
    return report;
}

} // namespace rnagen
