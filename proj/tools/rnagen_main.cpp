// rnagen: count, rank, unrank, enumerate, sample and convert RNA secondary
// structures written as bracket words with unpaired positions.
//
// Exit codes: 0 success, 2 invalid input, 1 internal error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rnagen/codec.hpp"
#include "rnagen/count.hpp"
#include "rnagen/counting.hpp"
#include "rnagen/error.hpp"
#include "rnagen/oracle.hpp"
#include "rnagen/ranking.hpp"

namespace {

using rnagen::Count;

struct Options {
    bool dot = false;
    std::vector<int> table_bounds;  // optional (max_length, max_pairs)
};

rnagen::CountTable make_table(const Options& opt, int length, int pairs) {
    int max_length = length, max_pairs = pairs;
    if (!opt.table_bounds.empty()) {
        max_length = std::max(max_length, opt.table_bounds[0]);
        max_pairs = std::max(max_pairs, opt.table_bounds[1]);
    }
    return rnagen::CountTable(max_length, max_pairs);
}

std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return line;
}

// Applies fn to the positional argument when given, otherwise to each line
// of standard input in order.
template <class Fn>
void for_each_input(const std::optional<std::string>& arg, Fn fn) {
    if (arg) {
        fn(*arg);
        return;
    }
    std::string line;
    while (std::getline(std::cin, line)) fn(chomp(line));
}

void run_count(int n, int m) {
    std::cout << rnagen::to_decimal(rnagen::count_explicit({n, m})) << "\n";
}

void run_rank(const Options& opt, const std::optional<std::string>& arg) {
    std::optional<rnagen::CountTable> table;
    for_each_input(arg, [&](const std::string& text) {
        rnagen::MotzkinWord word = rnagen::parse_structure(text);
        if (!table || table->max_length() < word.length() || table->max_pairs() < word.pairs())
            table = make_table(opt, word.length(), word.pairs());
        Count r = rnagen::rank_structure(word, *table);
        std::cout << rnagen::to_decimal(r) << " n=" << word.length() << " m=" << word.pairs()
                  << "\n";
    });
}

void run_unrank(const Options& opt, int n, int m, const std::string& rank_text) {
    Count r = rnagen::parse_decimal(rank_text);
    rnagen::CountTable table = make_table(opt, n, m);
    std::cout << rnagen::unrank_structure(r, n, m, table).str(opt.dot) << "\n";
}

void run_enumerate(const Options& opt, int n, int m, const std::optional<std::string>& from_text,
                   const std::optional<std::string>& to_text) {
    rnagen::CountTable table = make_table(opt, n, m);
    Count from = from_text ? rnagen::parse_decimal(*from_text) : Count(0);
    Count to = to_text ? rnagen::parse_decimal(*to_text) : table.at(n, m);
    rnagen::enumerate_structures(n, m, from, to, table, [&](const rnagen::MotzkinWord& w) {
        std::cout << w.str(opt.dot) << "\n";
    });
}

void run_sample(const Options& opt, int n, int m, int draws, std::uint64_t seed) {
    rnagen::CountTable table = make_table(opt, n, m);
    rnagen::Mt19937Source rng(seed);
    for (const auto& w : rnagen::sample_structures(n, m, draws, rng, table))
        std::cout << w.str(opt.dot) << "\n";
}

void run_convert_to_variant(const std::optional<std::string>& arg) {
    for_each_input(arg, [&](const std::string& text) {
        std::cout << rnagen::structure_to_variant(rnagen::parse_structure(text)).str() << "\n";
    });
}

void run_convert_to_structure(const Options& opt, int n, int m,
                              const std::optional<std::string>& arg) {
    for_each_input(arg, [&](const std::string& text) {
        rnagen::VariantTree v = rnagen::parse_variant(text);
        std::cout << rnagen::variant_to_structure(v, n, m).str(opt.dot) << "\n";
    });
}

int run_selftest(int cap) {
    int cells = 0, failures = 0;
    for (int n = 0; n <= cap; ++n) {
        for (int m = 0; m <= n / 2; ++m) {
            rnagen::BijectionReport report = rnagen::verify_bijection(n, m, cap);
            ++cells;
            if (!report.pass) ++failures;
            std::cout << "n=" << n << " m=" << m << " count=" << report.set_size << " "
                      << (report.pass ? "PASS" : "FAIL " + report.detail) << "\n";
        }
    }
    std::cout << "cells=" << cells << " failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generation toolkit for RNA secondary structures"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--dot", opt.dot, "print '.' instead of '*' for unpaired positions");
    app.add_option("--table", opt.table_bounds,
                   "pre-size the count table as MAX_LENGTH MAX_PAIRS")
        ->expected(2);

    int n = 0, m = 0, draws = 0, cap = 12;
    std::uint64_t seed = 1;
    std::string rank_text;
    std::optional<std::string> text, from_text, to_text;
    bool to_structure = false;

    auto* count_cmd = app.add_subcommand("count", "print the number of structures");
    count_cmd->add_option("n", n, "chain length")->required();
    count_cmd->add_option("m", m, "number of base pairs")->required();
    count_cmd->callback([&] { run_count(n, m); });

    auto* rank_cmd =
        app.add_subcommand("rank", "print the rank of a structure (argument or stdin lines)");
    rank_cmd->add_option("structure", text, "structure text; reads stdin when omitted");
    rank_cmd->callback([&] { run_rank(opt, text); });

    auto* unrank_cmd = app.add_subcommand("unrank", "print the structure at a rank");
    unrank_cmd->add_option("n", n, "chain length")->required();
    unrank_cmd->add_option("m", m, "number of base pairs")->required();
    unrank_cmd->add_option("rank", rank_text, "0-based rank, decimal")->required();
    unrank_cmd->callback([&] { run_unrank(opt, n, m, rank_text); });

    auto* enum_cmd = app.add_subcommand("enumerate", "list structures in rank order");
    enum_cmd->add_option("n", n, "chain length")->required();
    enum_cmd->add_option("m", m, "number of base pairs")->required();
    enum_cmd->add_option("--from", from_text, "first rank (default 0)");
    enum_cmd->add_option("--to", to_text, "one past the last rank (default all)");
    enum_cmd->callback([&] { run_enumerate(opt, n, m, from_text, to_text); });

    auto* sample_cmd = app.add_subcommand("sample", "draw uniform random structures");
    sample_cmd->add_option("n", n, "chain length")->required();
    sample_cmd->add_option("m", m, "number of base pairs")->required();
    sample_cmd->add_option("k", draws, "number of draws")->required();
    sample_cmd->add_option("--seed", seed, "random seed (default 1)");
    sample_cmd->callback([&] { run_sample(opt, n, m, draws, seed); });

    auto* convert_cmd = app.add_subcommand(
        "convert", "convert structure text to variant text (default) or back");
    convert_cmd->add_option("text", text, "input text; reads stdin when omitted");
    auto* dir_flag = convert_cmd->add_flag("--to-structure", to_structure,
                                           "treat input as variant text, emit the structure");
    auto* opt_n = convert_cmd->add_option("-n,--length", n, "context length (variant input)");
    auto* opt_m = convert_cmd->add_option("-m,--pairs", m, "context pair count (variant input)");
    opt_n->needs(dir_flag);
    opt_m->needs(dir_flag);
    convert_cmd->callback([&] {
        if (to_structure) {
            if (opt_n->count() == 0 || opt_m->count() == 0)
                throw rnagen::Error(rnagen::Errc::bad_argument,
                                    "--to-structure requires -n and -m");
            run_convert_to_structure(opt, n, m, text);
        } else {
            run_convert_to_variant(text);
        }
    });

    auto* selftest_cmd = app.add_subcommand(
        "selftest", "exhaustively cross-check against brute-force enumeration");
    selftest_cmd->add_option("cap", cap, "largest chain length to check (default 12)")
        ->check(CLI::Range(0, 18));
    int selftest_rc = 0;
    selftest_cmd->callback([&] { selftest_rc = run_selftest(cap); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rnagen::Error& e) {
        std::cerr << "error: " << e.what() << " [" << rnagen::errc_name(e.code()) << "]\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return selftest_rc;
}
