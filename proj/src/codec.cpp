#include "rnagen/codec.hpp"

#include <cassert>
#include <limits>
#include <utility>

namespace rnagen {

MotzkinWord MotzkinWord::parse(std::string_view text, bool accept_dot) {
    std::string symbols;
    symbols.reserve(text.size());
    int balance = 0;
    int pairs = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.' && accept_dot) c = '*';
        switch (c) {
        case '*':
            symbols.push_back('*');
            break;
        case '(':
            ++balance;
            ++pairs;
            symbols.push_back('(');
            break;
        case ')':
            if (!symbols.empty() && symbols.back() == '(')
                throw Error(Errc::empty_hairpin,
                            "pair encloses no symbol at offset " + std::to_string(i), i);
            if (balance == 0)
                throw Error(Errc::unbalanced_brackets,
                            "unmatched ')' at offset " + std::to_string(i), i);
            --balance;
            symbols.push_back(')');
            break;
        default:
            throw Error(Errc::illegal_character,
                        "illegal character at offset " + std::to_string(i), i);
        }
    }
    if (balance != 0)
        throw Error(Errc::unbalanced_brackets,
                    std::to_string(balance) + " unmatched '(' at end of input", text.size());
    return MotzkinWord(std::move(symbols), pairs);
}

std::string MotzkinWord::str(bool use_dot) const {
    std::string out = symbols_;
    if (use_dot)
        for (char& c : out)
            if (c == '*') c = '.';
    return out;
}

VariantTree VariantTree::leaf() { return VariantTree(); }

VariantTree VariantTree::star(VariantTree sub) {
    VariantTree v;
    v.kind_ = Kind::star;
    v.kids_.push_back(std::move(sub));
    return v;
}

VariantTree VariantTree::pair(int tail_pairs, int tail_len, VariantTree left, VariantTree right) {
    VariantTree v;
    v.kind_ = Kind::pair;
    v.tail_pairs_ = tail_pairs;
    v.tail_len_ = tail_len;
    v.kids_.reserve(2);
    v.kids_.push_back(std::move(left));
    v.kids_.push_back(std::move(right));
    return v;
}

VariantTree::~VariantTree() {
    // Star chains can be proportional to the word length; dismantle
    // iteratively so destruction depth stays constant.
    if (kids_.empty()) return;
    std::vector<VariantTree> pending;
    pending.swap(kids_);
    while (!pending.empty()) {
        VariantTree node = std::move(pending.back());
        pending.pop_back();
        for (auto& kid : node.kids_) pending.push_back(std::move(kid));
        node.kids_.clear();
    }
}

bool operator==(const VariantTree& a, const VariantTree& b) {
    const VariantTree* pa = &a;
    const VariantTree* pb = &b;
    // Walk shared star runs iteratively, compare the rest structurally.
    for (;;) {
        if (pa->kind_ != pb->kind_) return false;
        if (pa->kind_ == VariantTree::Kind::star) {
            pa = &pa->child();
            pb = &pb->child();
            continue;
        }
        if (pa->kind_ == VariantTree::Kind::leaf) return true;
        return pa->tail_pairs_ == pb->tail_pairs_ && pa->tail_len_ == pb->tail_len_ &&
               pa->left() == pb->left() && pa->right() == pb->right();
    }
}

namespace {

class VariantParser {
public:
    explicit VariantParser(std::string_view text) : text_(text) {}

    VariantTree run() {
        VariantTree v = parse_variant();
        if (pos_ != text_.size())
            fail("trailing input after variant");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::variant_syntax, what + " at offset " + std::to_string(pos_), pos_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
            fail("expected a digit");
        long value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) fail("integer out of range");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    VariantTree parse_variant() {
        // Consume the star prefix "(0," in a loop; the matching ')' runs
        // close the whole chain after the core variant.
        int stars = 0;
        for (;;) {
            expect('(');
            char c = peek();
            if (c == ')') {
                ++pos_;
                break;  // leaf "()"
            }
            if (c == '0') {
                ++pos_;
                expect(',');
                ++stars;
                continue;
            }
            if (c == '1') {
                ++pos_;
                expect(',');
                expect('(');
                int tail_pairs = parse_int();
                expect(',');
                int tail_len = parse_int();
                expect(',');
                VariantTree left = parse_variant();
                expect(',');
                VariantTree right = parse_variant();
                expect(')');
                expect(')');
                VariantTree v = VariantTree::pair(tail_pairs, tail_len,
                                                  std::move(left), std::move(right));
                return close_stars(std::move(v), stars);
            }
            fail("expected ')', '0' or '1'");
        }
        return close_stars(VariantTree::leaf(), stars);
    }

    VariantTree close_stars(VariantTree v, int stars) {
        while (stars-- > 0) {
            expect(')');
            v = VariantTree::star(std::move(v));
        }
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void print_variant_to(const VariantTree& root, std::string& out) {
    const VariantTree* v = &root;
    int stars = 0;
    while (v->kind() == VariantTree::Kind::star) {
        out += "(0,";
        v = &v->child();
        ++stars;
    }
    if (v->kind() == VariantTree::Kind::leaf) {
        out += "()";
    } else {
        out += "(1,(";
        out += std::to_string(v->tail_pairs());
        out += ',';
        out += std::to_string(v->tail_len());
        out += ',';
        print_variant_to(v->left(), out);
        out += ',';
        print_variant_to(v->right(), out);
        out += "))";
    }
    out.append(stars, ')');
}

} // namespace

VariantTree VariantTree::parse(std::string_view text) { return VariantParser(text).run(); }

std::string VariantTree::str() const {
    std::string out;
    print_variant_to(*this, out);
    return out;
}

namespace {

// Decomposition of word[lo, hi) holding `pairs` bracket pairs. Works on
// index ranges over the original symbols; nothing is copied.
VariantTree to_variant_range(std::string_view w, std::size_t lo, std::size_t hi, int pairs) {
    int stars = 0;
    while (pairs > 0 && w[lo] == '*') {
        ++lo;
        ++stars;
    }
    VariantTree v;
    if (pairs == 0) {
        v = VariantTree::leaf();
    } else {
        // w[lo] == '(': find the first position where the running bracket
        // counts balance. With p the 0-based index of that ')', the 1-based
        // scan index is p - lo + 1, so the tail length is (hi - lo) - (p - lo + 1).
        int opens = 0, closes = 0;
        std::size_t p = lo;
        for (;; ++p) {
            assert(p < hi);
            if (w[p] == '(') ++opens;
            else if (w[p] == ')') ++closes;
            if (opens == closes) break;
        }
        const int tail_len = static_cast<int>(hi - 1 - p);
        const int tail_pairs = pairs - opens;
        VariantTree left = to_variant_range(w, lo + 1, p, opens - 1);
        VariantTree right = to_variant_range(w, p + 1, hi, tail_pairs);
        v = VariantTree::pair(tail_pairs, tail_len, std::move(left), std::move(right));
    }
    while (stars-- > 0) v = VariantTree::star(std::move(v));
    return v;
}

[[noreturn]] void malformed(const std::string& what) {
    throw Error(Errc::malformed_variant, what);
}

void emit_structure(const VariantTree* v, int length, int pairs, std::string& out) {
    for (;;) {
        if (pairs == 0) {
            if (v->kind() != VariantTree::Kind::leaf)
                malformed("non-leaf variant in a zero-pair context");
            if (length < 0) malformed("negative length context");
            out.append(static_cast<std::size_t>(length), '*');
            return;
        }
        if (v->kind() != VariantTree::Kind::star) break;
        out += '*';
        --length;
        v = &v->child();
    }
    if (v->kind() == VariantTree::Kind::leaf)
        malformed("leaf variant with " + std::to_string(pairs) + " pairs remaining");
    const int tp = v->tail_pairs(), tl = v->tail_len();
    if (tp < 0 || tp > pairs - 1 || tl < 2 * tp || tl > length - 2 * (pairs - tp) - 1)
        malformed("tail (" + std::to_string(tp) + ", " + std::to_string(tl) +
                  ") out of range for context (" + std::to_string(length) + ", " +
                  std::to_string(pairs) + ")");
    out += '(';
    emit_structure(&v->left(), length - 2 - tl, pairs - 1 - tp, out);
    out += ')';
    emit_structure(&v->right(), tl, tp, out);
}

} // namespace

VariantTree structure_to_variant(const MotzkinWord& word) {
    return to_variant_range(word.symbols(), 0, word.symbols().size(), word.pairs());
}

MotzkinWord variant_to_structure(const VariantTree& variant, int length, int pairs) {
    if (length < 0 || pairs < 0)
        throw Error(Errc::bad_argument, "length and pair count must be non-negative");
    std::string out;
    out.reserve(static_cast<std::size_t>(length));
    emit_structure(&variant, length, pairs, out);
    assert(static_cast<int>(out.size()) == length);
    return MotzkinWord::parse(out, /*accept_dot=*/false);
}

} // namespace rnagen
