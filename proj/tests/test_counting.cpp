#include <doctest.h>

#include <numeric>
#include <vector>

#include "crewlab/counting.hpp"
#include "crewlab/error.hpp"
#include "crewlab/orbits.hpp"

using namespace crewlab;

namespace {

// independent partition-count oracle: classic restricted-partition DP
unsigned long long partition_count_oracle(unsigned n) {
    std::vector<unsigned long long> table(n + 1, 0);
    table[0] = 1;
    for (unsigned part = 1; part <= n; ++part)
        for (unsigned total = part; total <= n; ++total) table[total] += table[total - part];
    return table[n];
}

// independent Euler-graph oracle: enumerate graphs with all degrees even and
// count them up to isomorphism by a lex-minimality predicate
unsigned long long euler_isomorphism_oracle(unsigned n) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<std::uint32_t>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    unsigned long long count = 0;
    enumerate_all(2, n, [&](const SeidelMatrix& s) {
        // edges are exponent-1 entries; all degrees must be even
        std::vector<unsigned> degree(n, 0);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (s.at(i, j) == 1) {
                    ++degree[i];
                    ++degree[j];
                }
        for (unsigned d : degree)
            if (d % 2) return;
        for (const auto& pi : perms) {
            SeidelMatrix image = s;
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = a + 1; b < n; ++b)
                    image.upper[image.idx(a, b)] =
                        static_cast<std::uint8_t>(s.entry_exp(pi[a], pi[b]));
            if (image.upper < s.upper) return; // not the orbit minimum
        }
        ++count;
    });
    return count;
}

} // namespace

TEST_CASE("partition streams are complete, ordered, and well-formed") {
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(10).size() == 42);
    for (unsigned j = 0; j <= 14; ++j)
        CHECK(partitions(j).size() == partition_count_oracle(j));

    auto p4 = partitions(4);
    CHECK(p4.front().parts == std::vector<unsigned>{4});
    CHECK(p4.back().parts == std::vector<unsigned>{1, 1, 1, 1});
    // reverse-lexicographic order of the descending part lists
    for (std::size_t i = 1; i < p4.size(); ++i) CHECK(p4[i - 1].parts > p4[i].parts);

    for (const auto& p : partitions(9)) {
        unsigned total = 0;
        for (unsigned k = 1; k <= 9; ++k) total += k * p.mult(k);
        CHECK(total == 9);
        CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    }
}

TEST_CASE("Euler-graph counts reproduce the real-case table") {
    const long long expected[] = {1, 1, 2, 3, 7, 16, 54, 243, 2038, 33120};
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(euler_graph_count(n) == BigInt(expected[n - 1]));
    CHECK_THROWS_AS(euler_graph_count(0), Error);
}

TEST_CASE("complete-digraph counts reproduce the cube-root table") {
    const long long expected[] = {1, 2, 7, 42, 582, 21480, 2142288};
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(complete_digraph_count(n) == BigInt(expected[n - 1]));
}

TEST_CASE("the formulas stay exact well past the table range") {
    // totals are exact integers; n! division must leave no remainder
    CHECK_NOTHROW(euler_graph_count(16));
    CHECK_NOTHROW(complete_digraph_count(12));
}

TEST_CASE("direct even-degree enumeration matches the closed form") {
    for (unsigned n = 3; n <= 7; ++n) {
        CHECK(BigInt(static_cast<long long>(euler_isomorphism_oracle(n))) ==
              euler_graph_count(n));
    }
}

TEST_CASE("table report carries the known rows") {
    auto cells = table_report(6);
    auto find = [&](const std::string& family, unsigned n, const std::string& quantity) {
        for (const auto& c : cells)
            if (c.family == family && c.n == n && c.quantity == quantity) return c;
        FAIL("missing row ", family, " ", n, " ", quantity);
        return cells.front();
    };
    CHECK(find("real", 6, "nonisomorphic").value == BigInt(156));
    CHECK(find("real", 6, "nonisomorphic").method == "brute-force");
    CHECK(find("real", 6, "switching").value == BigInt(1024));
    CHECK(find("real", 6, "equivalence").value == BigInt(16));
    CHECK(find("real", 6, "equivalence").method == "formula");
    CHECK(find("cube", 5, "nonisomorphic").value == BigInt(582));
    CHECK(find("cube", 5, "switching").value == BigInt(729));
    CHECK(find("cube", 5, "equivalence").value == BigInt(14));
    CHECK(find("cube", 5, "equivalence").method == "brute-force");
    CHECK(find("real", 3, "equivalence").value == BigInt(2));
    CHECK_THROWS_AS(table_report(2), Error);
}

TEST_CASE("table report falls back to formulas when the budget bars brute force") {
    auto cells = table_report(9, 1, 1000);
    for (const auto& c : cells) {
        if (c.family == "real" && c.quantity == "equivalence") {
            CHECK(c.method == "formula");
            if (c.n == 9) CHECK(c.value == BigInt(2038));
        }
        if (c.family == "real" && c.quantity == "nonisomorphic" && c.n >= 5)
            CHECK(c.method == "skipped");
    }
}
