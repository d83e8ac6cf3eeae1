#include "crewlab/orbits.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "crewlab/error.hpp"

namespace crewlab {

namespace {

// checked m^k, saturating above 2^63
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    const std::uint64_t cap = 1ull << 63;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > cap / base) return cap;
        out *= base;
    }
    return out;
}

void decode_upper(std::uint64_t index, std::uint32_t m, std::vector<std::uint8_t>& upper) {
    for (std::size_t pos = upper.size(); pos-- > 0;) {
        upper[pos] = static_cast<std::uint8_t>(index % m);
        index /= m;
    }
}

// lexicographic successor of the digit vector, base m
bool advance_upper(std::vector<std::uint8_t>& upper, std::uint32_t m) {
    for (std::size_t pos = upper.size(); pos-- > 0;) {
        if (++upper[pos] < m) return true;
        upper[pos] = 0;
    }
    return false;
}

std::uint64_t encode_free_part(const SeidelMatrix& std_form) {
    // standard form determined by the entries avoiding vertex 0
    std::uint64_t out = 0;
    for (std::uint32_t i = 1; i < std_form.n; ++i)
        for (std::uint32_t j = i + 1; j < std_form.n; ++j)
            out = out * std_form.m + std_form.at(i, j);
    return out;
}

std::vector<std::vector<std::uint32_t>> all_permutations(std::uint32_t n) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<std::uint32_t>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Compares the raw upper key of s relabeled by pi (position a holds vertex
// pi[a]) against the matrix's own key. Returns -1/0/+1 with early exit.
int compare_permuted_raw(const SeidelMatrix& s, const std::vector<std::uint32_t>& pi) {
    std::size_t pos = 0;
    for (std::uint32_t a = 0; a < s.n; ++a) {
        for (std::uint32_t b = a + 1; b < s.n; ++b, ++pos) {
            std::uint32_t image = s.entry_exp(pi[a], pi[b]);
            std::uint32_t own = s.upper[pos];
            if (image != own) return image < own ? -1 : 1;
        }
    }
    return 0;
}

// Same comparison after pushing the relabeled matrix to standard form.
int compare_permuted_standard(const SeidelMatrix& s, const std::vector<std::uint32_t>& pi,
                              const std::vector<std::uint8_t>& own_upper) {
    std::size_t pos = s.n - 1; // first row of both keys is all zeros
    for (std::uint32_t a = 1; a < s.n; ++a) {
        std::uint32_t ea = s.entry_exp(pi[0], pi[a]);
        for (std::uint32_t b = a + 1; b < s.n; ++b, ++pos) {
            std::uint32_t eb = s.entry_exp(pi[0], pi[b]);
            std::uint32_t image = (s.entry_exp(pi[a], pi[b]) + ea + s.m - eb) % s.m;
            std::uint32_t own = own_upper[pos];
            if (image != own) return image < own ? -1 : 1;
        }
    }
    return 0;
}

struct RangeRunner {
    // Runs fn(worker, begin, end) over a contiguous split of [0, total).
    template <typename Fn>
    static void run(std::uint64_t total, int jobs, Fn&& fn) {
        jobs = std::max(1, std::min<int>(jobs, 64));
        if (jobs == 1 || total < 2) {
            fn(0, 0, total);
            return;
        }
        std::vector<std::thread> threads;
        std::uint64_t chunk = total / jobs;
        std::uint64_t rest = total % jobs;
        std::uint64_t begin = 0;
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < rest ? 1 : 0);
            std::uint64_t end = begin + len;
            threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
            begin = end;
        }
        for (auto& t : threads) t.join();
    }
};

} // namespace

std::uint64_t enumeration_count(std::uint32_t m, std::uint32_t n, std::uint64_t budget) {
    if (m == 0) throw Error("invalid-order", "root order must be positive");
    std::uint64_t total = checked_pow(m, SeidelMatrix::upper_size(n));
    if (total > budget)
        throw Error("budget-exceeded",
                    "enumeration requires " + std::to_string(total) +
                        " matrices, budget is " + std::to_string(budget));
    return total;
}

void enumerate_all(std::uint32_t m, std::uint32_t n,
                   const std::function<void(const SeidelMatrix&)>& visit,
                   std::uint64_t budget) {
    std::uint64_t total = enumeration_count(m, n, budget);
    SeidelMatrix s;
    s.m = m;
    s.n = n;
    s.upper.assign(SeidelMatrix::upper_size(n), 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        visit(s);
        if (!advance_upper(s.upper, m)) break;
    }
}

SeidelMatrix permuted(const SeidelMatrix& s, const std::vector<std::uint32_t>& perm) {
    if (perm.size() != s.n) throw Error("dimension-mismatch", "permutation length mismatch");
    std::vector<std::uint32_t> inv(s.n);
    for (std::uint32_t i = 0; i < s.n; ++i) inv[perm[i]] = i;
    SeidelMatrix out;
    out.m = s.m;
    out.n = s.n;
    out.upper.assign(SeidelMatrix::upper_size(s.n), 0);
    for (std::uint32_t a = 0; a < s.n; ++a)
        for (std::uint32_t b = a + 1; b < s.n; ++b)
            out.upper[out.idx(a, b)] = static_cast<std::uint8_t>(s.entry_exp(inv[a], inv[b]));
    return out;
}

CanonicalKey canonical_form(const SeidelMatrix& s) {
    if (s.n > 10) throw Error("too-large", "canonical form scan limited to n <= 10");
    CanonicalKey key;
    key.m = s.m;
    key.n = s.n;
    if (s.n == 0) return key;

    std::vector<std::uint32_t> pi(s.n);
    std::iota(pi.begin(), pi.end(), 0u);
    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> cur(SeidelMatrix::upper_size(s.n), 0);
    do {
        std::size_t pos = s.n - 1;
        for (std::uint32_t a = 1; a < s.n; ++a) {
            std::uint32_t ea = s.entry_exp(pi[0], pi[a]);
            for (std::uint32_t b = a + 1; b < s.n; ++b, ++pos)
                cur[pos] = static_cast<std::uint8_t>(
                    (s.entry_exp(pi[a], pi[b]) + ea + s.m - s.entry_exp(pi[0], pi[b])) % s.m);
        }
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(pi.begin(), pi.end()));
    key.upper = std::move(best);
    return key;
}

std::uint64_t count_switching_classes(std::uint32_t m, std::uint32_t n, int jobs,
                                      std::uint64_t budget) {
    std::uint64_t total = enumeration_count(m, n, budget);
    if (n < 2) return 1;
    std::uint64_t free_count = checked_pow(m, SeidelMatrix::upper_size(n - 1));
    int effective_jobs = std::max(1, std::min<int>(jobs, 64));
    std::vector<std::vector<std::uint64_t>> bitmaps(
        effective_jobs, std::vector<std::uint64_t>((free_count + 63) / 64, 0));

    RangeRunner::run(total, effective_jobs, [&](int worker, std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        SeidelMatrix s;
        s.m = m;
        s.n = n;
        s.upper.assign(SeidelMatrix::upper_size(n), 0);
        decode_upper(begin, m, s.upper);
        auto& bits = bitmaps[worker];
        for (std::uint64_t i = begin; i < end; ++i) {
            std::uint64_t id = encode_free_part(standard_form(s).matrix);
            bits[id >> 6] |= 1ull << (id & 63);
            if (!advance_upper(s.upper, m)) break;
        }
    });

    for (int w = 1; w < effective_jobs; ++w)
        for (std::size_t i = 0; i < bitmaps[0].size(); ++i) bitmaps[0][i] |= bitmaps[w][i];
    std::uint64_t count = 0;
    for (std::uint64_t word : bitmaps[0]) count += static_cast<std::uint64_t>(std::popcount(word));
    return count;
}

std::uint64_t count_equivalence_classes(std::uint32_t m, std::uint32_t n, int jobs,
                                        std::uint64_t budget) {
    enumeration_count(m, n, budget);
    if (n > 7) throw Error("too-large", "equivalence-class scan limited to n <= 7");
    if (n < 2) return 1;

    // Every class contains standard forms, and canonical_form factors through
    // standard_form, so scanning the standard-form space reaches every class.
    const std::uint64_t reps = checked_pow(m, SeidelMatrix::upper_size(n - 1));
    const auto perms = all_permutations(n);
    std::vector<std::uint64_t> found(std::max(1, std::min<int>(jobs, 64)), 0);

    RangeRunner::run(reps, jobs, [&](int worker, std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        SeidelMatrix s;
        s.m = m;
        s.n = n;
        s.upper.assign(SeidelMatrix::upper_size(n), 0);
        std::vector<std::uint8_t> free_digits(SeidelMatrix::upper_size(n - 1), 0);
        decode_upper(begin, m, free_digits);
        for (std::uint64_t r = begin; r < end; ++r) {
            // install the free part below the all-ones first row
            std::size_t pos = 0;
            for (std::uint32_t i = 1; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j)
                    s.upper[s.idx(i, j)] = free_digits[pos++];
            bool minimal = true;
            for (const auto& pi : perms) {
                if (compare_permuted_standard(s, pi, s.upper) < 0) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) ++found[worker];
            if (!advance_upper(free_digits, m)) break;
        }
    });
    std::uint64_t count = 0;
    for (auto c : found) count += c;
    return count;
}

std::uint64_t count_isomorphism_classes(std::uint32_t m, std::uint32_t n, int jobs,
                                        std::uint64_t budget) {
    std::uint64_t total = enumeration_count(m, n, budget);
    if (n < 2) return 1;
    const auto perms = all_permutations(n);
    std::vector<std::uint64_t> found(std::max(1, std::min<int>(jobs, 64)), 0);

    RangeRunner::run(total, jobs, [&](int worker, std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        SeidelMatrix s;
        s.m = m;
        s.n = n;
        s.upper.assign(SeidelMatrix::upper_size(n), 0);
        decode_upper(begin, m, s.upper);
        for (std::uint64_t i = begin; i < end; ++i) {
            bool minimal = true;
            for (const auto& pi : perms) {
                if (compare_permuted_raw(s, pi) < 0) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) ++found[worker];
            if (!advance_upper(s.upper, m)) break;
        }
    });
    std::uint64_t count = 0;
    for (auto c : found) count += c;
    return count;
}

std::vector<SeidelMatrix> switching_class_representatives(std::uint32_t m, std::uint32_t n) {
    std::vector<SeidelMatrix> out;
    if (n < 2) {
        SeidelMatrix s;
        s.m = m;
        s.n = n;
        out.push_back(s);
        return out;
    }
    std::uint64_t reps = checked_pow(m, SeidelMatrix::upper_size(n - 1));
    std::vector<std::uint8_t> free_digits(SeidelMatrix::upper_size(n - 1), 0);
    out.reserve(reps);
    for (std::uint64_t r = 0; r < reps; ++r) {
        SeidelMatrix s;
        s.m = m;
        s.n = n;
        s.upper.assign(SeidelMatrix::upper_size(n), 0);
        std::size_t pos = 0;
        for (std::uint32_t i = 1; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                s.upper[s.idx(i, j)] = free_digits[pos++];
        out.push_back(std::move(s));
        if (!advance_upper(free_digits, m)) break;
    }
    return out;
}

} // namespace crewlab
