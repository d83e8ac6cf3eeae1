#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crewlab/linalg.hpp"
#include "crewlab/seidel.hpp"
#include "crewlab/spectra.hpp"

namespace crewlab {

// G = I + S/alpha with alpha = -lambda_min(S); positive semi-definite with
// unit diagonal and constant off-diagonal modulus 1/alpha.
struct GramMatrix {
    std::uint32_t n = 0;
    ComplexMatrixView entries;
    double scale = 0.0;       // -lambda_min(S), the Gram normalization
    double coherence = 0.0;   // 1/scale, the off-diagonal modulus
    double rank_tol = 1e-8;
    int rank = 0;
    std::vector<double> eigenvalues; // of G, ascending
    ComplexMatrixView eigenvectors;
    double eigen_residual = 0.0;
};

struct FrameSystem {
    int k = 0;             // ambient dimension
    int n = 0;             // vector count
    double alpha = 0.0;    // coherence
    std::vector<std::vector<std::complex<double>>> vectors; // n vectors of length k
};

struct EtfReport {
    bool unit_norms = false;
    bool equiangular = false;
    bool tight = false;
    bool welch_equality = false;
    bool etf = false;
    double alpha = 0.0;          // common coherence used for the checks
    double welch = 0.0;          // Welch bound (NaN when n < k)
    double frame_constant = 0.0; // n/k
    double max_norm_dev = 0.0;
    double max_angle_dev = 0.0;
    double max_tight_dev = 0.0;
    double welch_dev = 0.0;
    double tol = 0.0;
};

struct BoundReport {
    int n = 0, k = 0;
    double alpha = 0.0;
    bool absolute_holds = false;
    long long absolute_limit = 0; // k^2
    long long absolute_slack = 0; // k^2 - n
    bool relative_applicable = false; // alpha^{-2} > k
    double relative_value = 0.0;      // (k - k a^2) / (1 - k a^2)
    bool relative_equality = false;   // |n - value| <= 1e-9
    bool spectrum_predicted = false;
    double predicted_low = 0.0;   // -1/alpha
    int predicted_low_mult = 0;   // n - k
    double predicted_high = 0.0;  // (n-k)/(k alpha)
    int predicted_high_mult = 0;  // k
};

GramMatrix gram_from_seidel(const SeidelMatrix& s, double rank_tol = 1e-8);

// Factor G = U*U over the nonzero eigenpairs; columns of U are the frame
// vectors, each phased so its first nonvanishing coordinate is real
// nonnegative.
FrameSystem frame_vectors(const GramMatrix& g);

EtfReport verify_etf(const FrameSystem& f, double tol = 1e-8);

// sqrt((n-k)/(k(n-1))); requires n >= k >= 1 and n >= 2.
double welch_bound(int n, int k);

BoundReport bound_report(int n, int k, double alpha);

// The full worked pipeline: embedded 8-vertex digraph -> Seidel -> cone ->
// certificate -> Gram -> frame -> ETF verification.
struct DemoReport {
    Digraph digraph;
    SeidelMatrix seidel8;
    SeidelMatrix cone9;
    bool canonical_match = false; // cone vs the known (9,6) matrix
    SpectralCertificate certificate;
    GramMatrix gram;
    FrameSystem frame;
    EtfReport etf;
    BoundReport bounds;
};

DemoReport demo_etf96();

// The known (9,6) regular cube-root Seidel matrix the demo checks against.
SeidelMatrix known_etf96_matrix();
// The 8-vertex directed-strongly-regular digraph the demo starts from.
Digraph known_etf96_digraph();

} // namespace crewlab
