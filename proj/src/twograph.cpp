#include "crewlab/twograph.hpp"

#include <string>

#include "crewlab/error.hpp"

namespace crewlab {

std::size_t TwoGraphData::rank(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    auto c3 = [](std::uint64_t x) { return x * (x - 1) * (x - 2) / 6; };
    auto c2 = [](std::uint64_t x) { return x * (x - 1) / 2; };
    // triples before those starting at i, then those with middle < j, then k offset
    std::size_t r = static_cast<std::size_t>(c3(n) - c3(n - i));
    r += static_cast<std::size_t>(c2(n - 1 - i) - c2(n - j));
    r += k - j - 1;
    return r;
}

TwoGraphData twograph_from_seidel(const SeidelMatrix& s) {
    TwoGraphData t;
    t.m = s.m;
    t.n = s.n;
    t.classes.reserve(TwoGraphData::triple_count(s.n));
    for (std::uint32_t i = 0; i < s.n; ++i)
        for (std::uint32_t j = i + 1; j < s.n; ++j)
            for (std::uint32_t k = j + 1; k < s.n; ++k)
                t.classes.push_back(static_cast<std::uint8_t>(triangle_class(s, i, j, k)));
    return t;
}

SeidelMatrix seidel_from_twograph(const TwoGraphData& t, std::uint32_t pivot) {
    if (pivot >= t.n) throw Error("bad-vertex", "pivot out of range");
    FourSetWitness w = validate_cocycle(t);
    if (!w.ok) {
        const auto& q = *w.witness;
        throw Error("not-realizable",
                    "cocycle violation on 4-set {" + std::to_string(q[0] + 1) + "," +
                        std::to_string(q[1] + 1) + "," + std::to_string(q[2] + 1) + "," +
                        std::to_string(q[3] + 1) + "}");
    }
    SeidelMatrix s;
    s.m = t.m;
    s.n = t.n;
    s.upper.assign(SeidelMatrix::upper_size(t.n), 0);
    for (std::uint32_t a = 0; a < t.n; ++a) {
        for (std::uint32_t c = a + 1; c < t.n; ++c) {
            if (a == pivot || c == pivot) continue; // row pivot stays all ones
            std::uint8_t cls;
            if (pivot < a) cls = t.at(pivot, a, c);
            else if (pivot > c) cls = t.at(a, c, pivot);
            else // a < pivot < c: the sorted cycle product runs against the edge
                cls = static_cast<std::uint8_t>((t.m - t.at(a, pivot, c)) % t.m);
            s.upper[s.idx(a, c)] = cls;
        }
    }
    return s;
}

FourSetWitness validate_cocycle(const TwoGraphData& t) {
    const std::uint32_t n = t.n;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k)
                for (std::uint32_t l = k + 1; l < n; ++l) {
                    std::uint32_t lhs = (t.at(i, j, k) + t.at(i, k, l)) % t.m;
                    std::uint32_t rhs = (t.at(i, j, l) + t.at(j, k, l)) % t.m;
                    if (lhs != rhs)
                        return FourSetWitness{false, std::array<std::uint32_t, 4>{i, j, k, l}, {}};
                }
    return FourSetWitness{};
}

FourSetWitness validate_paper_axiom(const TwoGraphData& t) {
    const std::uint32_t n = t.n;
    std::vector<std::uint32_t> count(t.m);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k)
                for (std::uint32_t l = k + 1; l < n; ++l) {
                    count.assign(t.m, 0);
                    ++count[t.at(i, j, k)];
                    ++count[t.at(i, j, l)];
                    ++count[t.at(i, k, l)];
                    ++count[t.at(j, k, l)];
                    for (std::uint32_t w = 0; w < t.m; ++w)
                        if (count[w] % 2 == 1)
                            return FourSetWitness{false,
                                                  std::array<std::uint32_t, 4>{i, j, k, l}, w};
                }
    return FourSetWitness{};
}

FourSetWitness weight_parity_check(const SeidelMatrix& s) {
    const std::uint32_t n = s.n;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k)
                for (std::uint32_t l = k + 1; l < n; ++l) {
                    const std::uint32_t q[4] = {i, j, k, l};
                    for (std::uint32_t w = 0; w < s.m; ++w) {
                        std::uint32_t odd_triangles = 0;
                        for (std::uint32_t drop = 0; drop < 4; ++drop) {
                            std::uint32_t tri[3];
                            std::uint32_t idx = 0;
                            for (std::uint32_t a = 0; a < 4; ++a)
                                if (a != drop) tri[idx++] = q[a];
                            std::uint32_t hits = 0;
                            if (s.at(tri[0], tri[1]) == w) ++hits;
                            if (s.at(tri[0], tri[2]) == w) ++hits;
                            if (s.at(tri[1], tri[2]) == w) ++hits;
                            odd_triangles += hits % 2;
                        }
                        if (odd_triangles % 2 == 1)
                            return FourSetWitness{false,
                                                  std::array<std::uint32_t, 4>{i, j, k, l}, w};
                    }
                }
    return FourSetWitness{};
}

} // namespace crewlab
