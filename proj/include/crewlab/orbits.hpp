#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "crewlab/seidel.hpp"

namespace crewlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 20'000'000;

// Upper-exponent sequence of a canonical representative; equal keys identify
// equal classes under the relation that produced them.
struct CanonicalKey {
    std::uint32_t m = 2;
    std::uint32_t n = 0;
    std::vector<std::uint8_t> upper;

    auto operator<=>(const CanonicalKey& rhs) const = default;
};

// m^C(n,2), checked against the budget; throws Error("budget-exceeded")
// carrying the required count.
std::uint64_t enumeration_count(std::uint32_t m, std::uint32_t n,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// Every matrix exactly once, in lexicographic upper-exponent order.
void enumerate_all(std::uint32_t m, std::uint32_t n,
                   const std::function<void(const SeidelMatrix&)>& visit,
                   std::uint64_t budget = kDefaultEnumerationBudget);

// P s P^T: vertex i of s moves to position perm[i].
SeidelMatrix permuted(const SeidelMatrix& s, const std::vector<std::uint32_t>& perm);

// Lexicographic minimum of standard_form(P s P^T) over all vertex
// permutations; exact scan, n <= 10.
CanonicalKey canonical_form(const SeidelMatrix& s);

// Number of distinct standard-form images over the full enumeration
// (= m^{(n-1)(n-2)/2}).
std::uint64_t count_switching_classes(std::uint32_t m, std::uint32_t n, int jobs = 1,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

// Number of distinct canonical_form keys over the full enumeration; n <= 7.
std::uint64_t count_equivalence_classes(std::uint32_t m, std::uint32_t n, int jobs = 1,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

// Orbits under vertex permutation alone (no switching).
std::uint64_t count_isomorphism_classes(std::uint32_t m, std::uint32_t n, int jobs = 1,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

// One standard-form representative per switching class, in lexicographic
// order of the free entries.
std::vector<SeidelMatrix> switching_class_representatives(std::uint32_t m, std::uint32_t n);

} // namespace crewlab
