#include "crewlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "crewlab/error.hpp"

namespace crewlab {

double frobenius_norm(const ComplexMatrixView& mat) {
    double sum = 0.0;
    for (const auto& z : mat.a) sum += std::norm(z);
    return std::sqrt(sum);
}

namespace {

double offdiag_norm(const ComplexMatrixView& a) {
    double sum = 0.0;
    for (std::uint32_t i = 0; i < a.n; ++i)
        for (std::uint32_t j = 0; j < a.n; ++j)
            if (i != j) sum += std::norm(a.at(i, j));
    return std::sqrt(sum);
}

} // namespace

EigenResult hermitian_eigen(const ComplexMatrixView& mat) {
    const std::uint32_t n = mat.n;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (std::abs(mat.at(i, i).imag()) > 1e-9)
            throw Error("not-self-adjoint", "diagonal entry has imaginary part");
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (std::abs(mat.at(j, i) - std::conj(mat.at(i, j))) > 1e-9)
                throw Error("not-self-adjoint", "matrix is not self-adjoint within 1e-9");
    }

    ComplexMatrixView a = mat;
    ComplexMatrixView v;
    v.n = n;
    v.a.assign(static_cast<std::size_t>(n) * n, {0.0, 0.0});
    for (std::uint32_t i = 0; i < n; ++i) v.at(i, i) = 1.0;

    const double scale = std::max(1.0, frobenius_norm(mat));
    const double stop = 1e-14 * scale;

    for (int sweep = 0; sweep < 100 && offdiag_norm(a) > stop; ++sweep) {
        for (std::uint32_t p = 0; p < n; ++p) {
            for (std::uint32_t q = p + 1; q < n; ++q) {
                std::complex<double> apq = a.at(p, q);
                double h = std::abs(apq);
                if (h <= 1e-300) continue;
                std::complex<double> u = apq / h; // phase
                double app = a.at(p, p).real();
                double aqq = a.at(q, q).real();
                double tau = (aqq - app) / (2.0 * h);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                // columns: col_p' = c*col_p - s*conj(u)*col_q,
                //          col_q' = s*u*col_p + c*col_q, then matching rows
                for (std::uint32_t i = 0; i < n; ++i) {
                    std::complex<double> aip = a.at(i, p);
                    std::complex<double> aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * std::conj(u) * aiq;
                    a.at(i, q) = s * u * aip + c * aiq;
                }
                for (std::uint32_t j = 0; j < n; ++j) {
                    std::complex<double> apj = a.at(p, j);
                    std::complex<double> aqj = a.at(q, j);
                    a.at(p, j) = c * apj - s * u * aqj;
                    a.at(q, j) = s * std::conj(u) * apj + c * aqj;
                }
                for (std::uint32_t i = 0; i < n; ++i) {
                    std::complex<double> vip = v.at(i, p);
                    std::complex<double> viq = v.at(i, q);
                    v.at(i, p) = c * vip - s * std::conj(u) * viq;
                    v.at(i, q) = s * u * vip + c * viq;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = std::complex<double>(a.at(p, p).real(), 0.0);
                a.at(q, q) = std::complex<double>(a.at(q, q).real(), 0.0);
            }
        }
    }

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::vector<double> diag(n);
    for (std::uint32_t i = 0; i < n; ++i) diag[i] = a.at(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return diag[x] < diag[y]; });

    EigenResult out;
    out.values.resize(n);
    out.vectors.n = n;
    out.vectors.a.assign(static_cast<std::size_t>(n) * n, {0.0, 0.0});
    for (std::uint32_t k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (std::uint32_t i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
        // fix the free eigenvector phase: first nonvanishing component real
        // nonnegative, for reproducible output
        for (std::uint32_t i = 0; i < n; ++i) {
            double mag = std::abs(out.vectors.at(i, k));
            if (mag > 1e-8) {
                std::complex<double> phase = std::conj(out.vectors.at(i, k)) / mag;
                for (std::uint32_t t = 0; t < n; ++t) out.vectors.at(t, k) *= phase;
                break;
            }
        }
    }
    return out;
}

double eigen_residual(const ComplexMatrixView& mat, const EigenResult& eig) {
    const std::uint32_t n = mat.n;
    double worst = 0.0;
    for (std::uint32_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            std::complex<double> acc(0.0, 0.0);
            for (std::uint32_t j = 0; j < n; ++j) acc += mat.at(i, j) * eig.vectors.at(j, k);
            acc -= eig.values[k] * eig.vectors.at(i, k);
            sum += std::norm(acc);
        }
        worst = std::max(worst, std::sqrt(sum));
    }
    return worst;
}

} // namespace crewlab
