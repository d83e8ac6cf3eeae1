#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "crewlab/cyclotomic.hpp"
#include "crewlab/linalg.hpp"
#include "crewlab/seidel.hpp"

namespace crewlab {

// Exact witness that a Seidel matrix has precisely two distinct eigenvalues:
// S^2 = mu S + (n-1) I in Z[zeta], lambda(s) the roots of x^2 - mu x - (n-1).
struct SpectralCertificate {
    Cyclotomic mu;          // real element of Z[zeta]
    double mu_value = 0.0;  // embedded
    double lambda1 = 0.0;   // ascending
    double lambda2 = 0.0;
    bool exact = false;     // integer mu with square discriminant
    long long lambda1_int = 0, lambda2_int = 0; // set when exact
    unsigned mult1 = 0, mult2 = 0;
};

struct CertificateRefusal {
    std::uint32_t i = 0, j = 0; // first entry where S^2 != mu S + (n-1) I
};

using CertificateResult = std::variant<SpectralCertificate, CertificateRefusal>;

// Exact test via S^2 in Z[zeta]; refusal carries the first inconsistent
// off-diagonal position.
CertificateResult two_eigenvalue_certificate(const SeidelMatrix& s);

struct ClusterCount {
    double value = 0.0;
    unsigned multiplicity = 0;
};

struct NeighborhoodReport {
    bool row_sums_constant = false;
    Cyclotomic mu;                // common row sum when constant
    bool mu_real = false;
    double mu_value = 0.0;
    double lambda1 = 0.0, lambda2 = 0.0; // roots of x^2 - mu x - (n-1)
    bool spectrum_matches = false;       // spec(A) = {mu x1} + clusters at lambda1/lambda2
    unsigned mult_lambda1 = 0, mult_lambda2 = 0;
    std::vector<ClusterCount> clusters;  // numeric spectrum of A, clustered
    bool regular = false;                // overall verdict
    bool certificate_regular = false;    // two_eigenvalue_certificate verdict
    bool agrees_with_certificate = false;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> certificate_witness;
    double eigen_residual = 0.0;
};

// The neighborhood-regularity theorem at matrix level: standard form,
// neighborhood at the first vertex, exact row sums, numeric spectrum
// {mu, lambda1, lambda2} with mu simple.
NeighborhoodReport regular_neighborhood_test(const SeidelMatrix& s);

struct SrgParameters {
    std::uint32_t n = 0, k = 0, a = 0, c = 0;
};

// (n,k,a,c) when g is a nontrivial strongly regular graph, none otherwise.
std::optional<SrgParameters> srg_parameters(const SimpleGraph& g);

// True iff g is strongly regular with k = 2c, certifying the regular
// two-graph on n+1 vertices with neighborhood g.
bool regular_two_graph_via_srg(const SimpleGraph& g);

} // namespace crewlab
