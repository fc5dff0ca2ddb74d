#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "golden.hpp"
#include "rnagen/codec.hpp"
#include "rnagen/oracle.hpp"

using rnagen::Errc;
using rnagen::MotzkinWord;
using rnagen::VariantTree;

namespace {

Errc parse_error_code(const std::string& text) {
    try {
        (void)MotzkinWord::parse(text);
    } catch (const rnagen::Error& e) {
        return e.code();
    }
    FAIL("expected a parse error for: ", text);
    return Errc::bad_argument;
}

} // namespace

TEST_CASE("structure parsing") {
    MotzkinWord w = MotzkinWord::parse("*((*))");
    CHECK(w.length() == 6);
    CHECK(w.pairs() == 2);

    CHECK(MotzkinWord::parse(".((.))") == w);
    CHECK(MotzkinWord::parse("") .length() == 0);

    CHECK(parse_error_code("()") == Errc::empty_hairpin);
    CHECK(parse_error_code(")(") == Errc::unbalanced_brackets);
    CHECK(parse_error_code("((*)") == Errc::unbalanced_brackets);
    CHECK(parse_error_code("(a)") == Errc::illegal_character);
    CHECK(parse_error_code("*(*()") == Errc::empty_hairpin);

    try {
        (void)MotzkinWord::parse("**x");
    } catch (const rnagen::Error& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("dot alias only applies when enabled") {
    CHECK_THROWS_AS(MotzkinWord::parse(".(.)", /*accept_dot=*/false), rnagen::Error);
}

TEST_CASE("structure printing") {
    MotzkinWord w = MotzkinWord::parse("(*)(*)");
    CHECK(w.str() == "(*)(*)");
    CHECK(w.str(/*use_dot=*/true) == "(.)(.)");
    CHECK(MotzkinWord::parse("").str() == "");
    for (const auto& row : kGolden8x3)
        CHECK(MotzkinWord::parse(row.structure).str() == row.structure);
}

TEST_CASE("variant grammar round trips on the golden rows") {
    for (const auto& row : kGolden6x2) {
        VariantTree v = VariantTree::parse(row.variant);
        CHECK(v.str() == row.variant);
    }
    for (const auto& row : kGolden8x3) {
        VariantTree v = VariantTree::parse(row.variant);
        CHECK(v.str() == row.variant);
    }
}

TEST_CASE("variant grammar basics") {
    CHECK(VariantTree::parse("()").kind() == VariantTree::Kind::leaf);
    CHECK(VariantTree::leaf().str() == "()");

    VariantTree nested = VariantTree::parse("(0,(1,(0,0,(1,(0,0,(),())),())))");
    CHECK(nested.kind() == VariantTree::Kind::star);
    const VariantTree& p = nested.child();
    CHECK(p.kind() == VariantTree::Kind::pair);
    CHECK(p.tail_pairs() == 0);
    CHECK(p.tail_len() == 0);
    CHECK(p.left().kind() == VariantTree::Kind::pair);
    CHECK(p.right().kind() == VariantTree::Kind::leaf);
}

TEST_CASE("variant syntax errors carry a position") {
    for (const char* bad : {"(2,())", "", "(", "(0,()", "()junk", "(1,(0,0,(),())", "(0,x)"}) {
        try {
            (void)VariantTree::parse(bad);
            FAIL("expected a syntax error for: ", bad);
        } catch (const rnagen::Error& e) {
            CHECK(e.code() == Errc::variant_syntax);
            CHECK(e.position() != rnagen::Error::no_position);
        }
    }
}

TEST_CASE("structure to variant on golden rows") {
    for (const auto& row : kGolden6x2)
        CHECK(rnagen::structure_to_variant(MotzkinWord::parse(row.structure)).str() ==
              row.variant);
    for (const auto& row : kGolden8x3)
        CHECK(rnagen::structure_to_variant(MotzkinWord::parse(row.structure)).str() ==
              row.variant);
    CHECK(rnagen::structure_to_variant(MotzkinWord::parse("***")).kind() ==
          VariantTree::Kind::leaf);
}

TEST_CASE("variant to structure on golden rows") {
    for (const auto& row : kGolden6x2)
        CHECK(rnagen::variant_to_structure(VariantTree::parse(row.variant), 6, 2).str() ==
              row.structure);
    for (const auto& row : kGolden8x3)
        CHECK(rnagen::variant_to_structure(VariantTree::parse(row.variant), 8, 3).str() ==
              row.structure);
    CHECK(rnagen::variant_to_structure(VariantTree::leaf(), 4, 0).str() == "****");
    CHECK(rnagen::variant_to_structure(VariantTree::leaf(), 0, 0).str() == "");
}

TEST_CASE("context checking rejects trees that do not fit") {
    VariantTree leaf = VariantTree::leaf();
    CHECK_THROWS_AS(rnagen::variant_to_structure(leaf, 5, 1), rnagen::Error);

    VariantTree star_of_leaf = VariantTree::star(VariantTree::leaf());
    CHECK_THROWS_AS(rnagen::variant_to_structure(star_of_leaf, 3, 0), rnagen::Error);

    // tail length 2 needs at least one pair in the tail or two spare symbols
    VariantTree bad_tail =
        VariantTree::pair(0, 2, VariantTree::leaf(), VariantTree::leaf());
    try {
        (void)rnagen::variant_to_structure(bad_tail, 4, 1);
        FAIL("expected malformed variant");
    } catch (const rnagen::Error& e) {
        CHECK(e.code() == Errc::malformed_variant);
    }

    // the golden tree for length 8 cannot be reinterpreted at length 6
    VariantTree v = VariantTree::parse(kGolden8x3[3].variant);
    CHECK_THROWS_AS(rnagen::variant_to_structure(v, 6, 2), rnagen::Error);
}

TEST_CASE("conversion round trips exhaustively for short lengths") {
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; 2 * m <= n; ++m) {
            for (const std::string& text : rnagen::brute_force_enumerate(n, m)) {
                MotzkinWord w = MotzkinWord::parse(text);
                VariantTree v = rnagen::structure_to_variant(w);
                CHECK(rnagen::variant_to_structure(v, n, m) == w);
                CHECK(VariantTree::parse(v.str()) == v);
            }
        }
    }
}

TEST_CASE("variant parser survives arbitrary input") {
    std::mt19937_64 gen(7070);
    std::uniform_int_distribution<int> len_dist(0, 48);
    const std::string alphabet = "()01,x";
    std::uniform_int_distribution<int> sym_dist(0, static_cast<int>(alphabet.size()) - 1);
    int parsed = 0;
    for (int iter = 0; iter < 20000; ++iter) {
        std::string text;
        int len = len_dist(gen);
        for (int i = 0; i < len; ++i) text += alphabet[sym_dist(gen)];
        try {
            VariantTree v = VariantTree::parse(text);
            ++parsed;
            CHECK(VariantTree::parse(v.str()) == v);
        } catch (const rnagen::Error& e) {
            CHECK(e.code() == Errc::variant_syntax);
        }
    }
    CHECK(parsed > 0);  // "()" and friends do appear
}

TEST_CASE("deep star chains survive construction and teardown") {
    std::string text(20000, '*');
    text += "(*)";
    MotzkinWord w = MotzkinWord::parse(text);
    VariantTree v = rnagen::structure_to_variant(w);
    CHECK(rnagen::variant_to_structure(v, w.length(), w.pairs()) == w);
    CHECK(VariantTree::parse(v.str()) == v);
}
