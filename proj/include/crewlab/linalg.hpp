#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "crewlab/seidel.hpp"

namespace crewlab {

struct EigenResult {
    std::vector<double> values;   // ascending
    ComplexMatrixView vectors;    // orthonormal columns, vectors.at(i, k) = v_k[i]
};

// Dense self-adjoint eigensolver, cyclic Jacobi with complex rotations.
// Requires the input to be self-adjoint within 1e-9; per-pair residual
// ||M v - lambda v|| stays below 1e-12 * ||M||_F on desk-scale matrices.
EigenResult hermitian_eigen(const ComplexMatrixView& mat);

double frobenius_norm(const ComplexMatrixView& mat);

// max_k || M v_k - lambda_k v_k ||_2
double eigen_residual(const ComplexMatrixView& mat, const EigenResult& eig);

} // namespace crewlab
