#include "crewlab/counting.hpp"

#include <algorithm>
#include <numeric>

#include "crewlab/error.hpp"

namespace crewlab {

namespace {

void fill_multiplicity(IntegerPartition& p) {
    p.multiplicity.assign(p.j + 1, 0);
    for (unsigned part : p.parts) ++p.multiplicity[part];
}

void recurse_partitions(unsigned remaining, unsigned max_part, IntegerPartition& p,
                        const std::function<void(const IntegerPartition&)>& visit) {
    if (remaining == 0) {
        fill_multiplicity(p);
        visit(p);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        p.parts.push_back(part);
        recurse_partitions(remaining - part, part, p, visit);
        p.parts.pop_back();
    }
}

BigInt factorial(unsigned n) {
    BigInt f(1);
    for (unsigned k = 2; k <= n; ++k) f *= BigInt(static_cast<long long>(k));
    return f;
}

// n! / centralizer = conjugacy class size, an exact integer
BigInt class_size(unsigned n, const IntegerPartition& p) {
    BigInt num = factorial(n);
    for (unsigned k = 1; k <= p.j; ++k) {
        unsigned c = p.mult(k);
        for (unsigned t = 0; t < c; ++t) num = num.divexact(k);
        for (unsigned t = 2; t <= c; ++t) num = num.divexact(t);
    }
    return num;
}

} // namespace

void for_each_partition(unsigned j, const std::function<void(const IntegerPartition&)>& visit) {
    IntegerPartition p;
    p.j = j;
    if (j == 0) {
        fill_multiplicity(p);
        visit(p);
        return;
    }
    recurse_partitions(j, j, p, visit);
}

std::vector<IntegerPartition> partitions(unsigned j) {
    std::vector<IntegerPartition> out;
    for_each_partition(j, [&](const IntegerPartition& p) { out.push_back(p); });
    return out;
}

BigInt euler_graph_count(unsigned n) {
    if (n == 0) throw Error("bad-argument", "n must be positive");
    // sum over partitions of class_size * 2^{v - lambda}, then / n!
    BigInt total(0);
    for_each_partition(n, [&](const IntegerPartition& p) {
        long long v = 0;
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned k = i + 1; k <= n; ++k)
                v += static_cast<long long>(p.mult(i)) * p.mult(k) * std::gcd(i, k);
        }
        for (unsigned i = 1; i <= n; ++i) {
            long long ji = p.mult(i);
            v += static_cast<long long>(i) *
                 (p.mult(2 * i) + p.mult(2 * i + 1) + ji * (ji - 1) / 2);
        }
        long long odd_parts = 0;
        for (unsigned i = 1; i <= n; i += 2) odd_parts += p.mult(i); // includes j_1
        long long lambda = 0;
        for (unsigned i = 1; i <= n; ++i) lambda += p.mult(i);
        lambda -= odd_parts > 0 ? 1 : 0;
        if (v < lambda)
            throw Error("formula-convention", "negative 2-exponent in Euler-graph formula");
        total += class_size(n, p) * BigInt::power(2, static_cast<std::uint64_t>(v - lambda));
    });
    for (unsigned k = 2; k <= n; ++k) {
        auto [q, r] = total.divmod(k);
        if (r != 0)
            throw Error("formula-convention", "Euler-graph total is not divisible by n!");
        total = std::move(q);
    }
    return total;
}

BigInt complete_digraph_count(unsigned n) {
    if (n == 0) throw Error("bad-argument", "n must be positive");
    BigInt total(0);
    for_each_partition(n, [&](const IntegerPartition& p) {
        long long a = 0;
        for (unsigned k = 1; k <= n; ++k) {
            long long nk = p.mult(k);
            a += static_cast<long long>((k - 1) / 2) * nk + k * (nk * (nk - 1) / 2);
        }
        for (unsigned r = 1; r <= n; ++r)
            for (unsigned s = r + 1; s <= n; ++s)
                a += static_cast<long long>(std::gcd(r, s)) * p.mult(r) * p.mult(s);
        total += class_size(n, p) * BigInt::power(3, static_cast<std::uint64_t>(a));
    });
    for (unsigned k = 2; k <= n; ++k) {
        auto [q, r] = total.divmod(k);
        if (r != 0)
            throw Error("formula-convention", "complete-digraph total is not divisible by n!");
        total = std::move(q);
    }
    return total;
}

std::vector<TableCell> table_report(unsigned n_max, int jobs, std::uint64_t budget) {
    if (n_max < 3) throw Error("bad-argument", "table starts at n = 3");
    std::vector<TableCell> cells;
    auto within_budget = [&](std::uint32_t m, unsigned n) {
        std::uint64_t need = 1;
        const std::uint64_t cap = 1ull << 62;
        for (unsigned i = 0; i < n * (n - 1) / 2; ++i) {
            if (need > cap / m) return false;
            need *= m;
        }
        return need <= budget;
    };

    for (unsigned n = 3; n <= n_max; ++n) {
        // real family: brute-force non-isomorphic, closed-form switching, Euler
        TableCell iso{"real", n, "nonisomorphic", "brute-force", {}};
        if (within_budget(2, n) && n <= 7) {
            iso.value = BigInt(static_cast<long long>(count_isomorphism_classes(2, n, jobs, budget)));
        } else {
            iso.method = "skipped";
        }
        cells.push_back(std::move(iso));
        cells.push_back(TableCell{"real", n, "switching", "formula",
                                  BigInt::power(2, static_cast<std::uint64_t>(n - 1) * (n - 2) / 2)});
        cells.push_back(TableCell{"real", n, "equivalence", "formula", euler_graph_count(n)});

        // cube-root family: digraph formula, closed-form switching, brute equivalence
        cells.push_back(TableCell{"cube", n, "nonisomorphic", "formula", complete_digraph_count(n)});
        cells.push_back(TableCell{"cube", n, "switching", "formula",
                                  BigInt::power(3, static_cast<std::uint64_t>(n - 1) * (n - 2) / 2)});
        TableCell eq{"cube", n, "equivalence", "brute-force", {}};
        if (within_budget(3, n) && n <= 7) {
            eq.value = BigInt(static_cast<long long>(count_equivalence_classes(3, n, jobs, budget)));
        } else {
            eq.method = "skipped";
        }
        cells.push_back(std::move(eq));
    }
    return cells;
}

} // namespace crewlab
