#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rnagen/count.hpp"

namespace rnagen {

/// Every valid word of the given length and pair count, generated by plain
/// backtracking over the three symbols with balance/pair pruning. The
/// generator shares no logic with the codec or ranking modules, so its
/// output can serve as an independent reference. Order of the result is the
/// generation order, not rank order. Throws Errc::cap_exceeded when length
/// exceeds the cap.
std::vector<std::string> brute_force_enumerate(int length, int pairs, int cap = 16);

struct BijectionReport {
    int length = 0;
    int pairs = 0;
    std::size_t set_size = 0;
    bool pass = false;
    std::string detail;  // first counterexample, empty when pass
};

/// Cross-checks one (length, pairs) cell: the brute-force set size equals
/// count_explicit, unranking [0, S) reproduces exactly that set with no
/// duplicates, and ranking inverts unranking everywhere.
BijectionReport verify_bijection(int length, int pairs, int cap = 16);

} // namespace rnagen
