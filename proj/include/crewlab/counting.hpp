#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crewlab/bigint.hpp"
#include "crewlab/orbits.hpp"

namespace crewlab {

// Partition of j with part multiplicities; parts listed descending.
struct IntegerPartition {
    unsigned j = 0;
    std::vector<unsigned> parts;            // descending
    std::vector<unsigned> multiplicity;     // index = part size, [0..j]

    unsigned mult(unsigned k) const {
        return k < multiplicity.size() ? multiplicity[k] : 0;
    }
};

// Every partition of j exactly once, descending parts in reverse
// lexicographic order ([j], [j-1,1], ..., [1,...,1]).
void for_each_partition(unsigned j, const std::function<void(const IntegerPartition&)>& visit);
std::vector<IntegerPartition> partitions(unsigned j);

// Number of Euler graphs on n vertices (equals the number of two-graph
// equivalence classes). Exact; throws Error("formula-convention") if an
// intermediate fails integrality.
BigInt euler_graph_count(unsigned n);

// Number of complete directed graphs on n vertices (equals the number of
// non-isomorphic CREW graphs).
BigInt complete_digraph_count(unsigned n);

struct TableCell {
    std::string family;    // "real" | "cube"
    unsigned n = 0;
    std::string quantity;  // "nonisomorphic" | "switching" | "equivalence"
    std::string method;    // "formula" | "brute-force" | "skipped"
    std::optional<BigInt> value;
};

// Per-n class-size table: for the real case brute-force non-isomorphic
// counts (budget permitting), the closed-form switching count, and the Euler
// formula; for the cube-root case the digraph formula, the closed-form
// switching count, and brute-force equivalence counts (budget permitting).
std::vector<TableCell> table_report(unsigned n_max, int jobs = 1,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace crewlab
