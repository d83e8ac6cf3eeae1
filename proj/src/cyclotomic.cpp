#include "crewlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "crewlab/error.hpp"

namespace crewlab {

unsigned totient(unsigned m) {
    unsigned result = m;
    unsigned x = m;
    for (unsigned p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            result -= result / p;
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

namespace {

// Exact long division of integer polynomials; the divisor is monic so the
// quotient stays integral. Throws if a nonzero remainder appears.
std::vector<BigInt> divide_exact(std::vector<BigInt> num,
                                 const std::vector<BigInt>& den) {
    const std::size_t dn = den.size() - 1; // degree of monic divisor
    if (num.size() < den.size())
        throw Error("polynomial-division", "degree underflow in exact division");
    std::vector<BigInt> quot(num.size() - dn, BigInt(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt c = num[k + dn];
        if (c.is_zero()) continue;
        quot[k] = c;
        for (std::size_t t = 0; t <= dn; ++t) {
            num[k + t] -= c * den[t];
        }
    }
    for (const auto& c : num)
        if (!c.is_zero())
            throw Error("polynomial-division", "nonzero remainder in exact division");
    return quot;
}

std::vector<BigInt> compute_cyclotomic(unsigned m) {
    if (m == 1) {
        return {BigInt(-1), BigInt(1)}; // x - 1
    }
    // x^m - 1
    std::vector<BigInt> num(m + 1, BigInt(0));
    num[0] = BigInt(-1);
    num[m] = BigInt(1);
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

std::mutex g_phi_mutex;
std::map<unsigned, std::vector<BigInt>> g_phi_cache;

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw Error("invalid-order", "root order must be positive");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(m);
        if (it != g_phi_cache.end()) return it->second;
    }
    // compute outside the lock; divisors are filled recursively
    std::vector<BigInt> phi = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto [it, inserted] = g_phi_cache.emplace(m, std::move(phi));
    return it->second;
}

Cyclotomic cyc_reduce(unsigned m, const std::vector<BigInt>& raw) {
    if (m == 0) throw Error("invalid-order", "root order must be positive");
    const auto& phi = cyclotomic_polynomial(m);
    const unsigned deg = static_cast<unsigned>(phi.size()) - 1;

    // zeta^m = 1, so indices fold mod m before the division step
    std::vector<BigInt> acc(m, BigInt(0));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        acc[i % m] += raw[i];
    }
    for (std::size_t d = m; d-- > deg;) {
        BigInt c = acc[d];
        if (c.is_zero()) continue;
        acc[d] = BigInt(0);
        for (unsigned t = 0; t < deg; ++t) {
            acc[d - deg + t] -= c * phi[t];
        }
    }
    Cyclotomic out;
    out.order = m;
    out.coeffs.assign(acc.begin(), acc.begin() + deg);
    return out;
}

Cyclotomic cyc_reduce(unsigned m, const std::vector<long long>& raw) {
    std::vector<BigInt> big(raw.begin(), raw.end());
    return cyc_reduce(m, big);
}

Cyclotomic cyc_zero(unsigned m) {
    if (m == 0) throw Error("invalid-order", "root order must be positive");
    Cyclotomic out;
    out.order = m;
    out.coeffs.assign(totient(m), BigInt(0));
    return out;
}

Cyclotomic cyc_one(unsigned m) { return cyc_from_int(m, 1); }

Cyclotomic cyc_from_int(unsigned m, long long v) {
    Cyclotomic out = cyc_zero(m);
    out.coeffs[0] = BigInt(v);
    return out;
}

Cyclotomic cyc_root(unsigned m, unsigned exponent) {
    if (m == 0) throw Error("invalid-order", "root order must be positive");
    std::vector<long long> raw(exponent % m + 1, 0);
    raw[exponent % m] = 1;
    return cyc_reduce(m, raw);
}

namespace {
void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order != b.order)
        throw Error("incompatible-order", "operands live in different cyclotomic rings");
}
} // namespace

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    Cyclotomic out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

Cyclotomic cyc_sub(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    Cyclotomic out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

Cyclotomic cyc_neg(const Cyclotomic& a) {
    Cyclotomic out = a;
    for (auto& c : out.coeffs) c = -c;
    return out;
}

Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    const unsigned m = a.order;
    std::vector<BigInt> conv(m, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            conv[(i + j) % m] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return cyc_reduce(m, conv);
}

Cyclotomic cyc_conj(const Cyclotomic& a) {
    const unsigned m = a.order;
    std::vector<BigInt> raw(m, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        raw[(m - i) % m] += a.coeffs[i];
    }
    return cyc_reduce(m, raw);
}

bool cyc_is_real(const Cyclotomic& a) { return cyc_conj(a) == a; }

bool cyc_is_zero(const Cyclotomic& a) {
    for (const auto& c : a.coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool cyc_is_rational_integer(const Cyclotomic& a) {
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
        if (!a.coeffs[i].is_zero()) return false;
    return true;
}

BigInt cyc_rational_part(const Cyclotomic& a) {
    if (!cyc_is_rational_integer(a))
        throw Error("not-rational", "element is not a rational integer");
    return a.coeffs.empty() ? BigInt(0) : a.coeffs[0];
}

std::complex<double> cyc_embed(const Cyclotomic& a) {
    std::complex<double> sum(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(a.order);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        double angle = step * static_cast<double>(i);
        sum += a.coeffs[i].to_double() *
               std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

std::string cyc_str(const Cyclotomic& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i) out += ",";
        out += a.coeffs[i].str();
    }
    out += "] (m=" + std::to_string(a.order) + ")";
    return out;
}

} // namespace crewlab
