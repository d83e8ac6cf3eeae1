#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "crewlab/seidel.hpp"

namespace crewlab {

// Assignment of a root-of-unity class to every ascending 3-subset of the
// vertex set, stored in lexicographic triple order.
struct TwoGraphData {
    std::uint32_t m = 2;
    std::uint32_t n = 0;
    std::vector<std::uint8_t> classes; // size C(n,3)

    static std::size_t triple_count(std::uint32_t n) {
        return static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
    }
    std::size_t rank(std::uint32_t i, std::uint32_t j, std::uint32_t k) const; // i<j<k
    std::uint8_t at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
        return classes[rank(i, j, k)];
    }

    bool operator==(const TwoGraphData& rhs) const = default;
};

struct FourSetWitness {
    bool ok = true;
    std::optional<std::array<std::uint32_t, 4>> witness; // lex-least violating 4-set
    std::optional<std::uint32_t> weight;                 // set by the parity check
};

// Triple class = exponent of the switching-invariant cycle product
// s_ij s_jk conj(s_ik).
TwoGraphData twograph_from_seidel(const SeidelMatrix& s);

// Member of the realizing switching class whose row `pivot` is all ones;
// for pivot 0 this is the standard-form representative. Requires the
// cocycle condition; throws Error("not-realizable") carrying the witness
// in the message otherwise.
SeidelMatrix seidel_from_twograph(const TwoGraphData& t, std::uint32_t pivot = 0);

// Realizability: t(ijk) + t(ikl) = t(ijl) + t(jkl) mod m on every 4-set.
FourSetWitness validate_cocycle(const TwoGraphData& t);

// Literal reading of the m-th-root definition: every 4-subset contains an
// even number of triples of each class.
FourSetWitness validate_paper_axiom(const TwoGraphData& t);

// For every 4-subset and weight w, the number of its triangles with an odd
// count of w-weighted edges is even. A theorem for all inputs; kept as a
// regression surface.
FourSetWitness weight_parity_check(const SeidelMatrix& s);

} // namespace crewlab
