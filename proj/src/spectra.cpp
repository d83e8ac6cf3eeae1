#include "crewlab/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "crewlab/error.hpp"

namespace crewlab {

namespace {

// (S^2)_{ij} as exponent counts folded into Z[zeta]
Cyclotomic s_squared_entry(const SeidelMatrix& s, std::uint32_t i, std::uint32_t j) {
    std::vector<long long> counts(s.m, 0);
    for (std::uint32_t k = 0; k < s.n; ++k) {
        if (k == i || k == j) continue;
        ++counts[(s.entry_exp(i, k) + s.entry_exp(k, j)) % s.m];
    }
    return cyc_reduce(s.m, counts);
}

long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

} // namespace

CertificateResult two_eigenvalue_certificate(const SeidelMatrix& s) {
    if (s.n < 2) throw Error("dimension-mismatch", "certificate needs n >= 2");
    const unsigned m = s.m;
    const long long nm1 = static_cast<long long>(s.n) - 1;

    // candidate mu from the first off-diagonal entry
    Cyclotomic s2_01 = s_squared_entry(s, 0, 1);
    Cyclotomic mu = cyc_mul(s2_01, cyc_root(m, (m - s.at(0, 1)) % m));
    if (!cyc_is_real(mu)) return CertificateRefusal{0, 1};

    for (std::uint32_t i = 0; i < s.n; ++i) {
        for (std::uint32_t j = i + 1; j < s.n; ++j) {
            Cyclotomic lhs = s_squared_entry(s, i, j);
            Cyclotomic rhs = cyc_mul(mu, cyc_root(m, s.at(i, j)));
            if (!(lhs == rhs)) return CertificateRefusal{i, j};
        }
    }

    SpectralCertificate cert;
    cert.mu = mu;
    cert.mu_value = cyc_embed(mu).real();

    bool exact = false;
    long long mu_int = 0;
    if (cyc_is_rational_integer(mu)) {
        BigInt rational = cyc_rational_part(mu);
        if (rational.fits_int64()) {
            mu_int = rational.to_int64();
            long long disc = mu_int * mu_int + 4 * nm1;
            long long root = isqrt_ll(disc);
            if (root >= 0 && root * root == disc) {
                exact = true;
                cert.exact = true;
                cert.lambda1_int = (mu_int - root) / 2;
                cert.lambda2_int = (mu_int + root) / 2;
                cert.lambda1 = static_cast<double>(cert.lambda1_int);
                cert.lambda2 = static_cast<double>(cert.lambda2_int);
                // multiplicities from the exact trace equations
                long long span = cert.lambda2_int - cert.lambda1_int;
                long long num = static_cast<long long>(s.n) * cert.lambda2_int;
                if (span == 0 || num % span != 0)
                    throw Error("internal-inconsistency",
                                "matched identity without integral multiplicities");
                long long m1 = num / span;
                if (m1 <= 0 || m1 >= static_cast<long long>(s.n))
                    throw Error("internal-inconsistency", "multiplicity out of range");
                cert.mult1 = static_cast<unsigned>(m1);
                cert.mult2 = s.n - cert.mult1;
            }
        }
    }
    if (!exact) {
        double disc = cert.mu_value * cert.mu_value + 4.0 * static_cast<double>(nm1);
        double root = std::sqrt(disc);
        cert.lambda1 = (cert.mu_value - root) / 2.0;
        cert.lambda2 = (cert.mu_value + root) / 2.0;
        double m1 = static_cast<double>(s.n) * cert.lambda2 / (cert.lambda2 - cert.lambda1);
        double rounded = std::round(m1);
        if (std::abs(m1 - rounded) > 1e-6 || rounded < 1.0 ||
            rounded > static_cast<double>(s.n) - 1.0)
            throw Error("internal-inconsistency", "non-integral multiplicity");
        cert.mult1 = static_cast<unsigned>(rounded);
        cert.mult2 = s.n - cert.mult1;
    }
    return cert;
}

NeighborhoodReport regular_neighborhood_test(const SeidelMatrix& s) {
    if (s.n < 3) throw Error("dimension-mismatch", "neighborhood test needs n >= 3");
    NeighborhoodReport report;

    SeidelMatrix std_matrix = standard_form(s).matrix;
    SeidelMatrix a = neighborhood(std_matrix, 0);

    // exact row sums of A
    report.row_sums_constant = true;
    Cyclotomic row0 = cyc_zero(a.m);
    for (std::uint32_t r = 0; r < a.n; ++r) {
        std::vector<long long> counts(a.m, 0);
        for (std::uint32_t k = 0; k < a.n; ++k)
            if (k != r) ++counts[a.entry_exp(r, k)];
        Cyclotomic sum = cyc_reduce(a.m, counts);
        if (r == 0) {
            row0 = sum;
        } else if (!(sum == row0)) {
            report.row_sums_constant = false;
            break;
        }
    }
    report.mu = row0;
    report.mu_real = cyc_is_real(row0);
    report.mu_value = cyc_embed(row0).real();

    double mu = report.mu_value;
    double disc = mu * mu + 4.0 * static_cast<double>(s.n - 1);
    double root = std::sqrt(disc);
    report.lambda1 = (mu - root) / 2.0;
    report.lambda2 = (mu + root) / 2.0;

    // numeric spectrum of A
    ComplexMatrixView embedded = embed_seidel(a);
    EigenResult eig = hermitian_eigen(embedded);
    report.eigen_residual = eigen_residual(embedded, eig);

    const double tol = 1e-8;
    for (double v : eig.values) {
        if (!report.clusters.empty() && std::abs(v - report.clusters.back().value) <= tol) {
            ++report.clusters.back().multiplicity;
        } else {
            report.clusters.push_back(ClusterCount{v, 1});
        }
    }

    if (report.row_sums_constant && report.mu_real) {
        unsigned mu_count = 0, l1 = 0, l2 = 0;
        bool stray = false;
        for (double v : eig.values) {
            double dmu = std::abs(v - mu);
            double d1 = std::abs(v - report.lambda1);
            double d2 = std::abs(v - report.lambda2);
            if (dmu <= tol && dmu <= d1 && dmu <= d2) ++mu_count;
            else if (d1 <= tol && d1 <= d2) ++l1;
            else if (d2 <= tol) ++l2;
            else stray = true;
        }
        report.mult_lambda1 = l1;
        report.mult_lambda2 = l2;
        report.spectrum_matches = !stray && mu_count == 1;
    }
    report.regular = report.row_sums_constant && report.mu_real && report.spectrum_matches;

    CertificateResult cert = two_eigenvalue_certificate(s);
    report.certificate_regular = std::holds_alternative<SpectralCertificate>(cert);
    if (const auto* refusal = std::get_if<CertificateRefusal>(&cert))
        report.certificate_witness = std::make_pair(refusal->i, refusal->j);
    report.agrees_with_certificate = report.regular == report.certificate_regular;
    return report;
}

std::optional<SrgParameters> srg_parameters(const SimpleGraph& g) {
    const std::uint32_t n = g.n;
    if (n < 2) return std::nullopt;
    std::vector<std::uint32_t> degree(n, 0);
    for (const auto& [a, b] : g.edges) {
        ++degree[a];
        ++degree[b];
    }
    std::uint32_t k = degree[0];
    for (std::uint32_t v = 1; v < n; ++v)
        if (degree[v] != k) return std::nullopt;
    if (k == 0 || k == n - 1) return std::nullopt; // empty / complete excluded

    std::optional<std::uint32_t> a_common, c_common;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            std::uint32_t shared = 0;
            for (std::uint32_t w = 0; w < n; ++w)
                if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) ++shared;
            if (g.adjacent(u, v)) {
                if (!a_common) a_common = shared;
                else if (*a_common != shared) return std::nullopt;
            } else {
                if (!c_common) c_common = shared;
                else if (*c_common != shared) return std::nullopt;
            }
        }
    }
    if (!a_common || !c_common) return std::nullopt;
    return SrgParameters{n, k, *a_common, *c_common};
}

bool regular_two_graph_via_srg(const SimpleGraph& g) {
    auto params = srg_parameters(g);
    return params && params->k == 2 * params->c;
}

} // namespace crewlab
