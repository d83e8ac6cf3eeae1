#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crewlab/cyclotomic.hpp"

namespace crewlab {

// Hermitian matrix with zero diagonal and m-th-root-of-unity off-diagonal
// entries, stored as the row-major upper-triangle exponent sequence. The
// lower triangle is the implicit conjugate. Vertex indices are 0-based in
// the library; the JSON layer speaks 1-based.
struct SeidelMatrix {
    std::uint32_t m = 2;
    std::uint32_t n = 0;
    std::vector<std::uint8_t> upper; // n(n-1)/2 exponents in 0..m-1

    static std::size_t upper_size(std::uint32_t n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }
    std::size_t idx(std::uint32_t i, std::uint32_t j) const { // i < j
        return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
    }
    std::uint8_t at(std::uint32_t i, std::uint32_t j) const { return upper[idx(i, j)]; }

    // full-matrix entry as a root exponent; DIAG on the diagonal
    RootExponent entry(std::uint32_t i, std::uint32_t j) const {
        if (i == j) return RootExponent::diag();
        if (i < j) return RootExponent{at(i, j)};
        return RootExponent{static_cast<std::uint32_t>((m - at(j, i)) % m)};
    }
    std::uint32_t entry_exp(std::uint32_t i, std::uint32_t j) const { // i != j
        return i < j ? at(i, j) : (m - at(j, i)) % m;
    }

    bool operator==(const SeidelMatrix& rhs) const = default;
};

struct SimpleGraph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // i < j, sorted

    bool adjacent(std::uint32_t a, std::uint32_t b) const;

    bool operator==(const SimpleGraph& rhs) const = default;
};

// Complete-digraph semantics: both (u,v) and (v,u) may be present, no loops.
struct Digraph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs; // sorted

    bool has_arc(std::uint32_t from, std::uint32_t to) const;

    bool operator==(const Digraph& rhs) const = default;
};

// Diagonal switching matrix D with D_ii = zeta^diag[i].
struct SwitchVector {
    std::uint32_t m = 2;
    std::vector<std::uint8_t> diag;

    SwitchVector inverse() const;

    bool operator==(const SwitchVector& rhs) const = default;
};

SimpleGraph make_graph(std::uint32_t n,
                       std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
Digraph make_digraph(std::uint32_t n,
                     std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs);

// S_X = J - I - 2A: exponent 1 (-1) on edges, exponent 0 (+1) otherwise.
SeidelMatrix seidel_from_graph(const SimpleGraph& g);
// inverse reading at m = 2
SimpleGraph graph_from_seidel(const SeidelMatrix& s);

// D S D*: entry (i,j) picks up zeta^{diag[i]} * zeta^{-diag[j]}.
SeidelMatrix apply_switch(const SeidelMatrix& s, const SwitchVector& d);

struct StandardForm {
    SeidelMatrix matrix;   // first row and column all ones
    SwitchVector witness;  // the switch carrying s there
};
// Unique switching-class member whose first row/column are all ones.
StandardForm standard_form(const SeidelMatrix& s);

// Arc i->j alone gives omega, j->i alone omega^2, none or both give 1.
SeidelMatrix seidel_from_digraph(const Digraph& g);
// Inverse with weight-1 pairs emitted as double arcs; requires m = 3.
Digraph digraph_from_seidel(const SeidelMatrix& s);

// Border with a new first vertex joined to everything by ones.
SeidelMatrix cone(const SeidelMatrix& s);
// Switch vertex v to all-ones and delete it.
SeidelMatrix neighborhood(const SeidelMatrix& s, std::uint32_t v);

// Switching-invariant class of the triangle i<j<k: exponent of
// s_ij * s_jk * conj(s_ik).
std::uint32_t triangle_class(const SeidelMatrix& s, std::uint32_t i,
                             std::uint32_t j, std::uint32_t k);

struct ComplexMatrixView {
    std::uint32_t n = 0;
    std::vector<std::complex<double>> a; // row-major

    const std::complex<double>& at(std::uint32_t i, std::uint32_t j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }
    std::complex<double>& at(std::uint32_t i, std::uint32_t j) {
        return a[static_cast<std::size_t>(i) * n + j];
    }
};

struct ValidateResult {
    bool ok = false;
    SeidelMatrix matrix;   // valid when ok
    std::string code;      // "non-hermitian", "nonzero-diagonal", "bad-modulus", "not-a-root"
    std::uint32_t i = 0, j = 0;
};

// Accepts a raw complex matrix as a Seidel matrix of declared order m when it
// is Hermitian within tol, has zero diagonal within tol, and every
// off-diagonal entry lies within tol of some zeta_m^e.
ValidateResult validate_seidel(const ComplexMatrixView& raw, std::uint32_t m,
                               double tol = 1e-9);

// Embedding into doubles for the numeric layers.
ComplexMatrixView embed_seidel(const SeidelMatrix& s);

} // namespace crewlab
