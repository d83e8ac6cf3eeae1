#include "crewlab/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crewlab/error.hpp"
#include "crewlab/orbits.hpp"

namespace crewlab {

GramMatrix gram_from_seidel(const SeidelMatrix& s, double rank_tol) {
    if (s.n < 2) throw Error("dimension-mismatch", "Gram construction needs n >= 2");
    GramMatrix g;
    g.n = s.n;
    g.rank_tol = rank_tol;

    ComplexMatrixView embedded = embed_seidel(s);
    EigenResult seig = hermitian_eigen(embedded);
    double lambda_min = seig.values.front();
    if (lambda_min >= 0.0)
        throw Error("internal-inconsistency", "Seidel matrix with nonnegative least eigenvalue");
    g.scale = -lambda_min;
    g.coherence = 1.0 / g.scale;

    g.entries.n = s.n;
    g.entries.a.assign(static_cast<std::size_t>(s.n) * s.n, {0.0, 0.0});
    for (std::uint32_t i = 0; i < s.n; ++i) {
        for (std::uint32_t j = 0; j < s.n; ++j) {
            g.entries.at(i, j) = (i == j) ? std::complex<double>(1.0, 0.0)
                                          : embedded.at(i, j) / g.scale;
        }
    }
    EigenResult geig = hermitian_eigen(g.entries);
    g.eigen_residual = eigen_residual(g.entries, geig);
    g.eigenvalues = geig.values;
    g.eigenvectors = geig.vectors;
    double lambda_max = g.eigenvalues.back();
    double threshold = rank_tol * static_cast<double>(g.n) * std::max(1.0, lambda_max);
    g.rank = static_cast<int>(
        std::count_if(g.eigenvalues.begin(), g.eigenvalues.end(),
                      [&](double v) { return v > threshold; }));
    return g;
}

FrameSystem frame_vectors(const GramMatrix& g) {
    double lambda_max = g.eigenvalues.back();
    double threshold = g.rank_tol * static_cast<double>(g.n) * std::max(1.0, lambda_max);
    for (double v : g.eigenvalues)
        if (v < -threshold)
            throw Error("indefinite-gram", "Gram matrix is indefinite beyond tolerance");
    if (g.rank < 1) throw Error("indefinite-gram", "Gram matrix has rank zero");

    FrameSystem f;
    f.k = g.rank;
    f.n = static_cast<int>(g.n);
    f.alpha = g.coherence;
    f.vectors.assign(f.n, std::vector<std::complex<double>>(f.k, {0.0, 0.0}));

    // U = Lambda_+^{1/2} V_+^*; column i is vector z_i. The eigensolver
    // already fixes eigenvector phases, so the factorization is reproducible
    // and U*U reconstructs G exactly (to rounding).
    std::vector<std::uint32_t> kept;
    for (std::uint32_t e = 0; e < g.n; ++e)
        if (g.eigenvalues[e] > threshold) kept.push_back(e);
    for (int i = 0; i < f.n; ++i) {
        for (int r = 0; r < f.k; ++r) {
            std::uint32_t e = kept[r];
            f.vectors[i][r] = std::sqrt(g.eigenvalues[e]) *
                              std::conj(g.eigenvectors.at(static_cast<std::uint32_t>(i), e));
        }
    }
    return f;
}

EtfReport verify_etf(const FrameSystem& f, double tol) {
    EtfReport report;
    report.tol = tol;
    report.alpha = f.alpha;
    report.frame_constant = f.k > 0 ? static_cast<double>(f.n) / f.k : 0.0;

    double norm_dev = 0.0;
    for (const auto& z : f.vectors) {
        double norm = 0.0;
        for (const auto& c : z) norm += std::norm(c);
        norm_dev = std::max(norm_dev, std::abs(std::sqrt(norm) - 1.0));
    }
    report.max_norm_dev = norm_dev;
    report.unit_norms = norm_dev <= tol;

    double angle_dev = 0.0;
    for (int i = 0; i < f.n; ++i) {
        for (int j = i + 1; j < f.n; ++j) {
            std::complex<double> ip(0.0, 0.0);
            for (int t = 0; t < f.k; ++t) ip += std::conj(f.vectors[i][t]) * f.vectors[j][t];
            angle_dev = std::max(angle_dev, std::abs(std::abs(ip) - f.alpha));
        }
    }
    report.max_angle_dev = angle_dev;
    report.equiangular = angle_dev <= tol;

    // frame operator sum z_i z_i^* against (n/k) I
    double tight_dev = 0.0;
    for (int r = 0; r < f.k; ++r) {
        for (int c = 0; c < f.k; ++c) {
            std::complex<double> acc(0.0, 0.0);
            for (int i = 0; i < f.n; ++i)
                acc += f.vectors[i][r] * std::conj(f.vectors[i][c]);
            if (r == c) acc -= report.frame_constant;
            tight_dev = std::max(tight_dev, std::abs(acc));
        }
    }
    report.max_tight_dev = tight_dev;
    report.tight = tight_dev <= tol;

    if (f.n >= f.k && f.n >= 2 && f.k >= 1) {
        report.welch = welch_bound(f.n, f.k);
        report.welch_dev = std::abs(f.alpha - report.welch);
        report.welch_equality = report.welch_dev <= tol;
    } else {
        report.welch = std::numeric_limits<double>::quiet_NaN();
        report.welch_dev = std::numeric_limits<double>::quiet_NaN();
        report.welch_equality = false;
    }

    report.etf = report.unit_norms && report.equiangular && report.tight &&
                 report.welch_equality;
    return report;
}

double welch_bound(int n, int k) {
    if (k < 1 || n < k)
        throw Error("domain-error", "Welch bound needs n >= k >= 1");
    if (n < 2) throw Error("domain-error", "Welch bound needs n >= 2");
    return std::sqrt(static_cast<double>(n - k) /
                     (static_cast<double>(k) * static_cast<double>(n - 1)));
}

BoundReport bound_report(int n, int k, double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw Error("domain-error", "coherence must lie in [0, 1)");
    if (n < 1 || k < 1) throw Error("domain-error", "n and k must be positive");
    BoundReport report;
    report.n = n;
    report.k = k;
    report.alpha = alpha;
    report.absolute_limit = static_cast<long long>(k) * k;
    report.absolute_slack = report.absolute_limit - n;
    report.absolute_holds = n <= report.absolute_limit;

    double ka2 = static_cast<double>(k) * alpha * alpha;
    report.relative_applicable = alpha > 0.0 ? (1.0 / (alpha * alpha) > k) : true;
    if (report.relative_applicable && ka2 < 1.0) {
        report.relative_value = (static_cast<double>(k) - ka2) / (1.0 - ka2);
        report.relative_equality = std::abs(report.relative_value - n) <= 1e-9;
        if (report.relative_equality && alpha > 0.0) {
            report.spectrum_predicted = true;
            report.predicted_low = -1.0 / alpha;
            report.predicted_low_mult = n - k;
            report.predicted_high = static_cast<double>(n - k) / (k * alpha);
            report.predicted_high_mult = k;
        }
    }
    return report;
}

Digraph known_etf96_digraph() {
    // arcs of the 8-vertex directed strongly regular graph, 1-based source
    static const std::pair<std::uint32_t, std::uint32_t> arcs_1based[] = {
        {1, 3}, {3, 2}, {2, 6}, {6, 1}, {1, 4}, {4, 2}, {2, 7}, {7, 1},
        {1, 5}, {5, 2}, {2, 8}, {8, 1}, {3, 4}, {4, 5}, {5, 3}, {3, 7},
        {7, 4}, {4, 6}, {6, 5}, {5, 8}, {8, 3}, {6, 8}, {8, 7}, {7, 6},
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    arcs.reserve(std::size(arcs_1based));
    for (const auto& [a, b] : arcs_1based) arcs.emplace_back(a - 1, b - 1);
    return make_digraph(8, std::move(arcs));
}

SeidelMatrix known_etf96_matrix() {
    // the known (9,6) regular cube-root matrix, upper-triangle exponents
    static const std::uint8_t upper[] = {
        0, 0, 0, 0, 0, 0, 0, 0,  // row 1
        0, 1, 1, 1, 2, 2, 2,     // row 2
        2, 2, 2, 1, 1, 1,        // row 3
        1, 2, 0, 1, 2,           // row 4
        1, 1, 2, 0,              // row 5
        2, 0, 1,                 // row 6
        2, 1,                    // row 7
        2,                       // row 8
    };
    SeidelMatrix s;
    s.m = 3;
    s.n = 9;
    s.upper.assign(std::begin(upper), std::end(upper));
    return s;
}

DemoReport demo_etf96() {
    DemoReport demo;
    demo.digraph = known_etf96_digraph();
    demo.seidel8 = seidel_from_digraph(demo.digraph);
    demo.cone9 = cone(demo.seidel8);

    demo.canonical_match =
        canonical_form(demo.cone9) == canonical_form(known_etf96_matrix());
    if (!demo.canonical_match)
        throw Error("demo-stage", "canonical-form check failed at stage cone");

    CertificateResult cert = two_eigenvalue_certificate(demo.cone9);
    if (!std::holds_alternative<SpectralCertificate>(cert))
        throw Error("demo-stage", "certificate refused at stage certificate");
    demo.certificate = std::get<SpectralCertificate>(cert);

    demo.gram = gram_from_seidel(demo.cone9);
    demo.frame = frame_vectors(demo.gram);
    demo.etf = verify_etf(demo.frame, 1e-8);
    if (!demo.etf.etf) throw Error("demo-stage", "verification failed at stage etf");
    demo.bounds = bound_report(demo.frame.n, demo.frame.k, demo.frame.alpha);
    return demo;
}

} // namespace crewlab
