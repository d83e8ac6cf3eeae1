#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "crewlab/bigint.hpp"

namespace crewlab {

// Exponent of a root of unity, or the structural-zero marker used on matrix
// diagonals. The marker never enters ring arithmetic.
struct RootExponent {
    static constexpr std::uint32_t DIAG = 0xffffffffu;
    std::uint32_t value = 0;

    bool is_diag() const { return value == DIAG; }
    static RootExponent diag() { return RootExponent{DIAG}; }
};

// Element of Z[zeta_m], zeta_m a primitive m-th root of unity, in the power
// basis 1, zeta, ..., zeta^{phi(m)-1} of Z[x]/(Phi_m). The representation is
// canonical: equal elements have identical coefficient vectors.
struct Cyclotomic {
    std::uint32_t order = 0;     // m
    std::vector<BigInt> coeffs;  // size phi(m)

    bool operator==(const Cyclotomic& rhs) const = default;
};

unsigned totient(unsigned m);

// Phi_m as a dense monic coefficient vector (degree phi(m)), computed by
// exact division of x^m - 1 by the Phi_d of the proper divisors; memoized.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned m);

// Canonical representative of sum raw[i] * zeta^i modulo Phi_m.
Cyclotomic cyc_reduce(unsigned m, const std::vector<BigInt>& raw);
Cyclotomic cyc_reduce(unsigned m, const std::vector<long long>& raw);

Cyclotomic cyc_zero(unsigned m);
Cyclotomic cyc_one(unsigned m);
Cyclotomic cyc_from_int(unsigned m, long long v);
Cyclotomic cyc_root(unsigned m, unsigned exponent); // zeta^exponent

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_sub(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_neg(const Cyclotomic& a);
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b);

// Complex conjugation, the automorphism zeta -> zeta^{-1}.
Cyclotomic cyc_conj(const Cyclotomic& a);
bool cyc_is_real(const Cyclotomic& a);
bool cyc_is_zero(const Cyclotomic& a);

// True when a lies in Z, i.e. every basis coefficient above the constant
// vanishes.
bool cyc_is_rational_integer(const Cyclotomic& a);
BigInt cyc_rational_part(const Cyclotomic& a);

// Evaluation at zeta = exp(2*pi*i/m) in double precision.
std::complex<double> cyc_embed(const Cyclotomic& a);

std::string cyc_str(const Cyclotomic& a);

} // namespace crewlab
