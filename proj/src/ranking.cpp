#include "rnagen/ranking.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace rnagen {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(Errc::malformed_variant, what);
}

// Count providers backing the rank/unrank walks. The table provider hands
// out references into the prebuilt rectangle; the direct provider computes
// every value on demand so the algorithms run with no preprocessing at all.
struct TableCounts {
    const CountTable* table;
    const Count& operator()(int length, int pairs) const {
        assert(length <= table->max_length() && pairs <= table->max_pairs());
        return table->cell(length, pairs);
    }
};

struct DirectCounts {
    Count operator()(int length, int pairs) const {
        return count_explicit({length, pairs});
    }
};

// Fixed-capacity accumulator over raw limbs for the table-mode row walks.
// Every accumulated sum is bounded by S(length, pairs) of the enclosing
// walk, so a capacity taken from that value never overflows. Works on
// non-negative values only, which is all the count table holds.
class LimbAccumulator {
public:
    void reset(mp_size_t capacity) {
        buf_.assign(static_cast<std::size_t>(capacity) + 4, 0);
        used_ = 0;
    }

    void add(mpz_srcptr v) {
        const mp_size_t n = mpz_size(v);
        if (n == 0) return;
        add_limbs(mpz_limbs_read(v), n);
    }

    // acc += a * b; both factors positive. Small-by-large products run as
    // one addmul_1 pass per limb of the small factor, straight into the
    // accumulator; only balanced products fall back to a full multiply.
    void add_mul(mpz_srcptr a, mpz_srcptr b) {
        mp_size_t an = mpz_size(a), bn = mpz_size(b);
        assert(an > 0 && bn > 0);
        mp_srcptr ap = mpz_limbs_read(a), bp = mpz_limbs_read(b);
        if (an > bn) {
            std::swap(an, bn);
            std::swap(ap, bp);
        }
        if (an <= 4) {
            for (mp_size_t i = 0; i < an; ++i) {
                mp_limb_t carry = mpn_addmul_1(buf_.data() + i, bp, bn, ap[i]);
                bump(bn + i, carry);
            }
            return;
        }
        tmp_.resize(static_cast<std::size_t>(an + bn));
        mpn_mul(tmp_.data(), bp, bn, ap, an);
        mp_size_t tn = an + bn;
        if (tmp_[tn - 1] == 0) --tn;
        add_limbs(tmp_.data(), tn);
    }

    void add_acc(const LimbAccumulator& other) {
        if (other.used_ > 0) add_limbs(other.buf_.data(), other.used_);
    }

    bool less_than(const Count& v) {
        trim();
        const mp_size_t vn = mpz_size(v.get_mpz_t());
        if (used_ != vn) return used_ < vn;
        if (used_ == 0) return false;
        return mpn_cmp(buf_.data(), mpz_limbs_read(v.get_mpz_t()), used_) < 0;
    }

    void to_mpz(Count& out) {
        trim();
        mp_ptr p = mpz_limbs_write(out.get_mpz_t(), used_ > 0 ? used_ : 1);
        for (mp_size_t i = 0; i < used_; ++i) p[i] = buf_[i];
        mpz_limbs_finish(out.get_mpz_t(), used_);
    }

private:
    void add_limbs(mp_srcptr p, mp_size_t n) {
        const mp_size_t span = std::max(used_, n);
        assert(span + 1 < static_cast<mp_size_t>(buf_.size()));
        mp_limb_t carry = mpn_add(buf_.data(), buf_.data(), span, p, n);
        buf_[span] = carry;  // slack limb; bounded by construction
        used_ = span + (carry ? 1 : 0);
    }

    void bump(mp_size_t from, mp_limb_t carry) {
        mp_size_t pos = from;
        while (carry) {
            assert(pos + 1 < static_cast<mp_size_t>(buf_.size()));
            carry = mpn_add_1(buf_.data() + pos, buf_.data() + pos, 1, carry);
            ++pos;
        }
        used_ = std::max(used_, pos);
    }

    void trim() {
        while (used_ > 0 && buf_[used_ - 1] == 0) --used_;
    }

    std::vector<mp_limb_t> buf_;
    std::vector<mp_limb_t> tmp_;
    mp_size_t used_ = 0;
};

// Sum of the block sizes S(len-2-j, pairs-1-i) * S(j, i) over the whole row
// i = tail_pairs, j in [2i, len - 2(pairs - i) - 1]. The top row (i =
// pairs-1) has unit left factors, so it reduces to plain additions. gmpxx
// turns `sum += a * b` into a fused multiply-accumulate with no temporary.
// Used by ranking and by the table-free walks; the table-mode unrank walk
// has a raw-limb version of this loop in locate_row below.
template <class Counts>
Count pair_row_sum(int len, int pairs, int tail_pairs, const Counts& counts) {
    const int j_lo = 2 * tail_pairs;
    const int j_hi = len - 2 * (pairs - tail_pairs) - 1;
    Count sum = 0;
    if (tail_pairs == pairs - 1) {
        for (int j = j_lo; j <= j_hi; ++j) sum += counts(j, tail_pairs);
    } else {
        for (int j = j_lo; j <= j_hi; ++j) {
            auto&& right = counts(j, tail_pairs);
            if (right == 0) continue;
            sum += counts(len - 2 - j, pairs - 1 - tail_pairs) * right;
        }
    }
    return sum;
}

// Total rank mass of blocks strictly before (tail_pairs, tail_len) in block
// order. Accumulated from whichever end of the row range is closer; the two
// routes agree because the rows sum to S(len, pairs) - S(len-1, pairs).
template <class Counts>
Count blocks_before(int len, int pairs, int tail_pairs, int tail_len, const Counts& counts) {
    Count cum;
    if (tail_pairs <= pairs - 1 - tail_pairs) {
        cum = 0;
        for (int i = 0; i < tail_pairs; ++i) cum += pair_row_sum(len, pairs, i, counts);
    } else {
        cum = counts(len, pairs) - counts(len - 1, pairs);
        for (int i = pairs - 1; i >= tail_pairs; --i)
            cum -= pair_row_sum(len, pairs, i, counts);
    }
    for (int j = 2 * tail_pairs; j < tail_len; ++j) {
        auto&& right = counts(j, tail_pairs);
        if (right == 0) continue;
        cum += counts(len - 2 - j, pairs - 1 - tail_pairs) * right;
    }
    return cum;
}

template <class Counts>
Count rank_impl(const VariantTree* v, int len, int pairs, const Counts& counts) {
    // The star spine is walked in place; only pair nodes recurse, so the
    // call depth is bounded by the pair count.
    for (;;) {
        if (pairs == 0) {
            if (v->kind() != VariantTree::Kind::leaf)
                malformed("non-leaf variant in a zero-pair context");
            return 0;
        }
        if (v->kind() != VariantTree::Kind::star) break;
        --len;
        v = &v->child();
    }
    if (v->kind() == VariantTree::Kind::leaf)
        malformed("leaf variant with " + std::to_string(pairs) + " pairs remaining");
    const int tp = v->tail_pairs(), tl = v->tail_len();
    if (tp < 0 || tp > pairs - 1 || tl < 2 * tp || tl > len - 2 * (pairs - tp) - 1)
        malformed("tail (" + std::to_string(tp) + ", " + std::to_string(tl) +
                  ") out of range for context (" + std::to_string(len) + ", " +
                  std::to_string(pairs) + ")");
    Count left_rank = rank_impl(&v->left(), len - 2 - tl, pairs - 1 - tp, counts);
    Count right_rank = rank_impl(&v->right(), tl, tp, counts);
    Count r = std::move(left_rank);
    r += counts(len - 2 - tl, pairs - 1 - tp) * right_rank;
    r += counts(len - 1, pairs);
    r += blocks_before(len, pairs, tp, tl, counts);
    return r;
}

// Walks tail_pairs downward from pairs - 1 accumulating whole-row sums
// until the running suffix reaches row_target. Most of the rank mass sits
// at large tail_pairs, so for a uniform random rank this stops early.
template <class Counts>
int locate_row(int len, int pairs, const Count& row_target, const Counts& counts,
               Count& row, Count& suffix) {
    suffix = 0;
    int tp = pairs;
    do {
        --tp;
        assert(tp >= 0);
        row = pair_row_sum(len, pairs, tp, counts);
        suffix += row;
    } while (suffix < row_target);
    return tp;
}

// Table-mode overload on raw limbs: the per-cell multiply-accumulate into a
// fixed buffer is what bounds rank/unrank throughput at large parameters.
int locate_row(int len, int pairs, const Count& row_target, const TableCounts& counts,
               Count& row, Count& suffix) {
    const mp_size_t cap = mpz_size(counts(len, pairs).get_mpz_t()) + 2;
    LimbAccumulator suffix_acc, row_acc;
    suffix_acc.reset(cap);
    int tp = pairs;
    do {
        --tp;
        assert(tp >= 0);
        row_acc.reset(cap);
        // S(j, tp) vanishes only at j = 2 tp within the range.
        const int j_lo = 2 * tp + (tp > 0 ? 1 : 0);
        const int j_hi = len - 2 * (pairs - tp) - 1;
        const Count* right_col = &counts(0, tp);
        if (tp == pairs - 1) {
            for (int j = j_lo; j <= j_hi; ++j) row_acc.add(right_col[j].get_mpz_t());
        } else {
            const Count* left_col = &counts(0, pairs - 1 - tp);
            for (int j = j_lo; j <= j_hi; ++j)
                row_acc.add_mul(left_col[len - 2 - j].get_mpz_t(), right_col[j].get_mpz_t());
        }
        suffix_acc.add_acc(row_acc);
    } while (suffix_acc.less_than(row_target));
    row_acc.to_mpz(row);
    suffix_acc.to_mpz(suffix);
    return tp;
}

template <class Counts>
VariantTree unrank_impl(Count r, int len, int pairs, const Counts& counts) {
    // Caller guarantees 0 <= r < S(len, pairs).
    int stars = 0;
    while (pairs > 0 && r < counts(len - 1, pairs)) {
        ++stars;
        --len;
    }
    VariantTree v;
    if (pairs == 0) {
        v = VariantTree::leaf();
    } else {
        r -= counts(len - 1, pairs);
        const Count pair_total = counts(len, pairs) - counts(len - 1, pairs);

        const Count row_target = pair_total - r;
        Count suffix, row;
        const int tp = locate_row(len, pairs, row_target, counts, row, suffix);

        // Offset of r inside the located row.
        Count in_row = r - (pair_total - suffix);

        // Locate the block inside the row the same way, from the top end.
        const Count cell_target = row - in_row;
        const int j_lo = 2 * tp;
        Count cell_suffix = 0, block = 0;
        int tl = len - 2 * (pairs - tp);  // one past the last valid tail_len
        do {
            --tl;
            assert(tl >= j_lo);
            auto&& right = counts(tl, tp);
            if (right == 0) continue;
            block = counts(len - 2 - tl, pairs - 1 - tp) * right;
            cell_suffix += block;
        } while (cell_suffix < cell_target);

        Count offset = in_row - (row - cell_suffix);
        auto&& left_count = counts(len - 2 - tl, pairs - 1 - tp);
        Count right_rank, left_rank;
        mpz_fdiv_qr(right_rank.get_mpz_t(), left_rank.get_mpz_t(), offset.get_mpz_t(),
                    left_count.get_mpz_t());
        VariantTree left = unrank_impl(std::move(left_rank), len - 2 - tl, pairs - 1 - tp, counts);
        VariantTree right = unrank_impl(std::move(right_rank), tl, tp, counts);
        v = VariantTree::pair(tp, tl, std::move(left), std::move(right));
    }
    while (stars-- > 0) v = VariantTree::star(std::move(v));
    return v;
}

void check_table_covers(const CountTable& table, int length, int pairs) {
    if (table.max_length() < length || table.max_pairs() < pairs)
        throw Error(Errc::table_too_small,
                    "count table covers (" + std::to_string(table.max_length()) + ", " +
                        std::to_string(table.max_pairs()) + ") but (" +
                        std::to_string(length) + ", " + std::to_string(pairs) +
                        ") is required");
}

template <class Counts>
VariantTree unrank_checked(const Count& rank, int length, int pairs, const Counts& counts) {
    validate_params({length, pairs});
    const Count total = counts(length, pairs);
    if (total == 0)
        throw Error(Errc::empty_set, "no structure of length " + std::to_string(length) +
                                         " has " + std::to_string(pairs) + " pairs");
    if (rank < 0 || rank >= total)
        throw Error(Errc::rank_out_of_range,
                    "rank " + to_decimal(rank) + " outside [0, " + to_decimal(total) + ")");
    return unrank_impl(rank, length, pairs, counts);
}

} // namespace

Count rank_variant(const VariantTree& variant, int length, int pairs, const CountTable& table) {
    validate_params({length, pairs});
    check_table_covers(table, length, pairs);
    return rank_impl(&variant, length, pairs, TableCounts{&table});
}

Count rank_variant(const VariantTree& variant, int length, int pairs) {
    validate_params({length, pairs});
    return rank_impl(&variant, length, pairs, DirectCounts{});
}

VariantTree unrank_variant(const Count& rank, int length, int pairs, const CountTable& table) {
    check_table_covers(table, length, pairs);
    return unrank_checked(rank, length, pairs, TableCounts{&table});
}

VariantTree unrank_variant(const Count& rank, int length, int pairs) {
    return unrank_checked(rank, length, pairs, DirectCounts{});
}

Count rank_structure(const MotzkinWord& word, const CountTable& table) {
    return rank_variant(structure_to_variant(word), word.length(), word.pairs(), table);
}

Count rank_structure(const MotzkinWord& word) {
    return rank_variant(structure_to_variant(word), word.length(), word.pairs());
}

MotzkinWord unrank_structure(const Count& rank, int length, int pairs, const CountTable& table) {
    return variant_to_structure(unrank_variant(rank, length, pairs, table), length, pairs);
}

MotzkinWord unrank_structure(const Count& rank, int length, int pairs) {
    return variant_to_structure(unrank_variant(rank, length, pairs), length, pairs);
}

void enumerate_structures(int length, int pairs, const Count& from, const Count& to,
                          const CountTable& table,
                          const std::function<void(const MotzkinWord&)>& sink) {
    validate_params({length, pairs});
    check_table_covers(table, length, pairs);
    const Count& total = table.cell(length, pairs);
    if (from < 0 || from > to || to > total)
        throw Error(Errc::rank_out_of_range,
                    "range [" + to_decimal(from) + ", " + to_decimal(to) +
                        ") outside [0, " + to_decimal(total) + "]");
    for (Count r = from; r < to; ++r)
        sink(unrank_structure(r, length, pairs, table));
}

std::vector<MotzkinWord> enumerate_range(int length, int pairs, const Count& from,
                                         const Count& to, const CountTable& table) {
    std::vector<MotzkinWord> out;
    enumerate_structures(length, pairs, from, to, table,
                         [&](const MotzkinWord& w) { out.push_back(w); });
    return out;
}

std::vector<MotzkinWord> sample_structures(int length, int pairs, int draws,
                                           RandomSource& rng, const CountTable& table) {
    validate_params({length, pairs});
    if (draws < 0) throw Error(Errc::bad_argument, "draw count must be non-negative");
    check_table_covers(table, length, pairs);
    const Count& total = table.cell(length, pairs);
    if (total == 0)
        throw Error(Errc::empty_set, "no structure of length " + std::to_string(length) +
                                         " has " + std::to_string(pairs) + " pairs");
    std::vector<MotzkinWord> out;
    out.reserve(static_cast<std::size_t>(draws));
    for (int i = 0; i < draws; ++i)
        out.push_back(unrank_structure(rng.next_below(total), length, pairs, table));
    return out;
}

Count Mt19937Source::next_below(const Count& bound) {
    if (bound <= 0)
        throw Error(Errc::bad_argument, "next_below requires a positive bound");
    if (bound == 1) return 0;
    const Count top = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const std::uint64_t top_mask =
        (bits % 64) ? ((std::uint64_t(1) << (bits % 64)) - 1) : ~std::uint64_t(0);
    for (;;) {
        Count x = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t chunk = gen_();
            if (w == 0) chunk &= top_mask;
            x <<= 64;
            x += chunk;
        }
        if (x < bound) return x;
    }
}

} // namespace rnagen
