#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rnagen/error.hpp"

namespace rnagen {

/// A validated secondary-structure word over {'(', ')', '*'}: brackets are
/// balanced with non-negative prefixes and no pair encloses zero symbols
/// (the substring "()" never occurs).
class MotzkinWord {
public:
    /// Parses and validates. '.' is accepted as an alias for '*' when
    /// accept_dot is set. Throws Error with code illegal_character,
    /// unbalanced_brackets or empty_hairpin, carrying the byte offset.
    static MotzkinWord parse(std::string_view text, bool accept_dot = true);

    int length() const noexcept { return static_cast<int>(symbols_.size()); }
    int pairs() const noexcept { return pairs_; }

    /// Canonical '*' form, or the '.' form when use_dot is set.
    std::string str(bool use_dot = false) const;

    std::string_view symbols() const noexcept { return symbols_; }

    friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;

private:
    MotzkinWord(std::string symbols, int pairs)
        : symbols_(std::move(symbols)), pairs_(pairs) {}

    std::string symbols_;
    int pairs_ = 0;
};

inline MotzkinWord parse_structure(std::string_view text, bool accept_dot = true) {
    return MotzkinWord::parse(text, accept_dot);
}

inline std::string print_structure(const MotzkinWord& word, bool use_dot = false) {
    return word.str(use_dot);
}

/// A decision tree selecting one structure out of the set for some context
/// (length, pairs):
///   - a leaf covers a context with zero pairs (all unpaired),
///   - a star node prepends one unpaired symbol,
///   - a pair node wraps its left subtree in a bracket pair and appends the
///     right subtree; tail_pairs and tail_len describe the right part.
/// The tree itself is context-free; whether it fits a given (length, pairs)
/// is checked by the conversions below.
class VariantTree {
public:
    enum class Kind { leaf, star, pair };

    VariantTree() = default;

    static VariantTree leaf();
    static VariantTree star(VariantTree sub);
    static VariantTree pair(int tail_pairs, int tail_len, VariantTree left, VariantTree right);

    ~VariantTree();
    VariantTree(VariantTree&&) noexcept = default;
    VariantTree& operator=(VariantTree&&) noexcept = default;
    VariantTree(const VariantTree&) = default;
    VariantTree& operator=(const VariantTree&) = default;

    Kind kind() const noexcept { return kind_; }
    int tail_pairs() const noexcept { return tail_pairs_; }
    int tail_len() const noexcept { return tail_len_; }

    const VariantTree& child() const { return kids_[0]; }  // star
    const VariantTree& left() const { return kids_[0]; }   // pair
    const VariantTree& right() const { return kids_[1]; }  // pair

    friend bool operator==(const VariantTree&, const VariantTree&);

    /// Grammar: V ::= "()" | "(0," V ")" | "(1,(" INT "," INT "," V "," V "))"
    /// No whitespace. Throws Errc::variant_syntax with the byte offset.
    static VariantTree parse(std::string_view text);

    /// Canonical serialization per the grammar above.
    std::string str() const;

private:
    Kind kind_ = Kind::leaf;
    int tail_pairs_ = 0;
    int tail_len_ = 0;
    std::vector<VariantTree> kids_;
};

inline VariantTree parse_variant(std::string_view text) { return VariantTree::parse(text); }
inline std::string print_variant(const VariantTree& variant) { return variant.str(); }

/// Decomposes a word into its variant tree. For a word starting with '(',
/// the split point is the first position (1-based index i within the
/// current subword) where the running counts of '(' and ')' are equal and
/// nonzero; the tail after it has length tail_len = n - i.
VariantTree structure_to_variant(const MotzkinWord& word);

/// Rebuilds the word from a variant tree under the given context; the
/// inverse of structure_to_variant. Throws Errc::malformed_variant if the
/// tree does not fit the context.
MotzkinWord variant_to_structure(const VariantTree& variant, int length, int pairs);

} // namespace rnagen
