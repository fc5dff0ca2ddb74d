#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "golden.hpp"

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is dropped.
CmdResult run(const std::string& args, const std::string& pipe_prefix = "") {
    std::string cmd = pipe_prefix + std::string(RNAGEN_CLI) + " " + args + " 2>/dev/null";
    CmdResult result;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) result.out.append(buf, got);
    int rc = pclose(p);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("count") {
    CHECK(run("count 9 3").out == "50\n");
    CHECK(run("count 7 0").out == "1\n");
    CHECK(run("count 12 5").out == "21\n");
    CHECK(run("count 4 2").out == "0\n");
    CHECK(run("count -- -3 1").status == 2);
}

TEST_CASE("rank") {
    auto r = run("rank '((*)(*))'");
    CHECK(r.status == 0);
    CHECK(r.out == "6 n=8 m=3\n");
    CHECK(run("rank '****'").out == "0 n=4 m=0\n");
    CHECK(run("rank '()'").status == 2);
    CHECK(run("rank '=('").status == 2);
}

TEST_CASE("rank reads stdin in order") {
    auto r = run("rank", "printf '((*)(*))\\n*((*))\\n.((.))\\n' | ");
    CHECK(r.status == 0);
    auto got = lines(r.out);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == "6 n=8 m=3");
    CHECK(got[1] == "0 n=6 m=2");
    CHECK(got[2] == "0 n=6 m=2");
}

TEST_CASE("unrank") {
    CHECK(run("unrank 8 3 9").out == "(*)((*))\n");
    CHECK(run("unrank 5 0 0").out == "*****\n");
    CHECK(run("unrank 6 2 6").status == 2);
    CHECK(run("unrank 4 2 0").status == 2);
    CHECK(run("--dot unrank 8 3 9").out == "(.)((.))\n");
}

TEST_CASE("enumerate") {
    auto all = run("enumerate 6 2");
    CHECK(all.status == 0);
    auto got = lines(all.out);
    REQUIRE(got.size() == kGolden6x2.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == kGolden6x2[i].structure);

    auto head = run("enumerate 8 3 --from 0 --to 3");
    auto head_lines = lines(head.out);
    REQUIRE(head_lines.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(head_lines[i] == kGolden8x3[i].structure);

    auto empty = run("enumerate 4 2");
    CHECK(empty.status == 0);
    CHECK(empty.out.empty());

    auto presized = run("--table 12 4 enumerate 6 2");
    CHECK(presized.out == all.out);

    CHECK(run("enumerate 6 2 --to 7").status == 2);
}

TEST_CASE("sample is deterministic under a fixed seed") {
    auto a = run("sample 8 3 20 --seed 11");
    auto b = run("sample 8 3 20 --seed 11");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto got = lines(a.out);
    REQUIRE(got.size() == 20);
    for (const auto& line : got) {
        bool known = false;
        for (const auto& row : kGolden8x3)
            if (line == row.structure) known = true;
        CHECK(known);
    }
    CHECK(run("sample 4 2 1").status == 2);
}

TEST_CASE("convert in both directions") {
    CHECK(run("convert '*((*))'").out == "(0,(1,(0,0,(1,(0,0,(),())),())))\n");
    CHECK(run("convert --to-structure -n 6 -m 2 '(0,(1,(0,0,(1,(0,0,(),())),())))'").out ==
          "*((*))\n");
    CHECK(run("convert --to-structure -n 3 -m 0 '()'").out == "***\n");
    CHECK(run("convert --to-structure '()'").status == 2);       // missing context
    CHECK(run("convert --to-structure -n 5 -m 1 '()'").status == 2);  // does not fit
    CHECK(run("convert '(2,())'").status == 2);

    auto batch = run("convert", "printf '(*)(*)\\n((**))\\n' | ");
    auto got = lines(batch.out);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == kGolden6x2[5].variant);
    CHECK(got[1] == kGolden6x2[2].variant);
}

TEST_CASE("selftest") {
    auto small = run("selftest 8");
    CHECK(small.status == 0);
    auto got = lines(small.out);
    REQUIRE(!got.empty());
    CHECK(got.back() == "cells=25 failures=0");
    bool found = false;
    for (const auto& line : got)
        if (line == "n=8 m=3 count=10 PASS") found = true;
    CHECK(found);

    auto trivial = run("selftest 0");
    CHECK(trivial.status == 0);
    CHECK(lines(trivial.out).front() == "n=0 m=0 count=1 PASS");
}

TEST_CASE("unknown arguments exit with code 2") {
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("count 5").status == 2);
}
