#include "crewlab/seidel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "crewlab/error.hpp"

namespace crewlab {

bool SimpleGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool Digraph::has_arc(std::uint32_t from, std::uint32_t to) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(from, to));
}

SwitchVector SwitchVector::inverse() const {
    SwitchVector inv;
    inv.m = m;
    inv.diag.reserve(diag.size());
    for (auto e : diag) inv.diag.push_back(static_cast<std::uint8_t>((m - e) % m));
    return inv;
}

SimpleGraph make_graph(std::uint32_t n,
                       std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    for (auto& [a, b] : edges) {
        if (a == b) throw Error("bad-edge", "loops are not allowed");
        if (a > b) std::swap(a, b);
        if (b >= n) throw Error("bad-edge", "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("bad-edge", "repeated edge");
    return SimpleGraph{n, std::move(edges)};
}

Digraph make_digraph(std::uint32_t n,
                     std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs) {
    for (auto& [a, b] : arcs) {
        if (a == b) throw Error("bad-arc", "self-arcs are not allowed");
        if (a >= n || b >= n) throw Error("bad-arc", "arc endpoint out of range");
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return Digraph{n, std::move(arcs)};
}

SeidelMatrix seidel_from_graph(const SimpleGraph& g) {
    SeidelMatrix s;
    s.m = 2;
    s.n = g.n;
    s.upper.assign(SeidelMatrix::upper_size(g.n), 0);
    for (const auto& [a, b] : g.edges) s.upper[s.idx(a, b)] = 1;
    return s;
}

SimpleGraph graph_from_seidel(const SeidelMatrix& s) {
    if (s.m != 2)
        throw Error("unsupported-order", "graph reading requires m = 2");
    SimpleGraph g;
    g.n = s.n;
    for (std::uint32_t i = 0; i < s.n; ++i)
        for (std::uint32_t j = i + 1; j < s.n; ++j)
            if (s.at(i, j) == 1) g.edges.emplace_back(i, j);
    return g;
}

SeidelMatrix apply_switch(const SeidelMatrix& s, const SwitchVector& d) {
    if (d.m != s.m)
        throw Error("incompatible-order", "switch order does not match matrix order");
    if (d.diag.size() != s.n)
        throw Error("dimension-mismatch", "switch length does not match matrix size");
    SeidelMatrix out = s;
    for (std::uint32_t i = 0; i < s.n; ++i)
        for (std::uint32_t j = i + 1; j < s.n; ++j)
            out.upper[s.idx(i, j)] = static_cast<std::uint8_t>(
                (d.diag[i] + s.at(i, j) + s.m - d.diag[j]) % s.m);
    return out;
}

StandardForm standard_form(const SeidelMatrix& s) {
    if (s.n == 0) throw Error("empty-matrix", "standard form needs n >= 1");
    SwitchVector d;
    d.m = s.m;
    d.diag.assign(s.n, 0);
    for (std::uint32_t j = 1; j < s.n; ++j) d.diag[j] = s.at(0, j);
    return StandardForm{apply_switch(s, d), std::move(d)};
}

SeidelMatrix seidel_from_digraph(const Digraph& g) {
    SeidelMatrix s;
    s.m = 3;
    s.n = g.n;
    s.upper.assign(SeidelMatrix::upper_size(g.n), 0);
    for (std::uint32_t i = 0; i < g.n; ++i) {
        for (std::uint32_t j = i + 1; j < g.n; ++j) {
            bool fwd = g.has_arc(i, j);
            bool back = g.has_arc(j, i);
            std::uint8_t e = 0; // none or both -> 1
            if (fwd && !back) e = 1;
            else if (back && !fwd) e = 2;
            s.upper[s.idx(i, j)] = e;
        }
    }
    return s;
}

Digraph digraph_from_seidel(const SeidelMatrix& s) {
    if (s.m != 3)
        throw Error("unsupported-order", "digraph correspondence requires m = 3");
    Digraph g;
    g.n = s.n;
    for (std::uint32_t i = 0; i < s.n; ++i) {
        for (std::uint32_t j = i + 1; j < s.n; ++j) {
            switch (s.at(i, j)) {
                case 1: g.arcs.emplace_back(i, j); break;
                case 2: g.arcs.emplace_back(j, i); break;
                default: // weight 1 -> double arc
                    g.arcs.emplace_back(i, j);
                    g.arcs.emplace_back(j, i);
            }
        }
    }
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

SeidelMatrix cone(const SeidelMatrix& s) {
    SeidelMatrix out;
    out.m = s.m;
    out.n = s.n + 1;
    out.upper.assign(SeidelMatrix::upper_size(out.n), 0);
    // new first row stays exponent 0; old block shifts by one index
    for (std::uint32_t i = 0; i < s.n; ++i)
        for (std::uint32_t j = i + 1; j < s.n; ++j)
            out.upper[out.idx(i + 1, j + 1)] = s.at(i, j);
    return out;
}

SeidelMatrix neighborhood(const SeidelMatrix& s, std::uint32_t v) {
    if (s.n < 2) throw Error("dimension-mismatch", "neighborhood needs n >= 2");
    if (v >= s.n) throw Error("bad-vertex", "vertex index out of range");
    // switch so that row v becomes all ones, then delete v
    SwitchVector d;
    d.m = s.m;
    d.diag.assign(s.n, 0);
    for (std::uint32_t j = 0; j < s.n; ++j)
        if (j != v) d.diag[j] = static_cast<std::uint8_t>(s.entry_exp(v, j));
    SeidelMatrix switched = apply_switch(s, d);

    SeidelMatrix out;
    out.m = s.m;
    out.n = s.n - 1;
    out.upper.assign(SeidelMatrix::upper_size(out.n), 0);
    std::vector<std::uint32_t> keep;
    keep.reserve(out.n);
    for (std::uint32_t i = 0; i < s.n; ++i)
        if (i != v) keep.push_back(i);
    for (std::uint32_t i = 0; i < out.n; ++i)
        for (std::uint32_t j = i + 1; j < out.n; ++j)
            out.upper[out.idx(i, j)] = switched.at(keep[i], keep[j]);
    return out;
}

std::uint32_t triangle_class(const SeidelMatrix& s, std::uint32_t i,
                             std::uint32_t j, std::uint32_t k) {
    return (s.at(i, j) + s.at(j, k) + s.m - s.at(i, k)) % s.m;
}

ValidateResult validate_seidel(const ComplexMatrixView& raw, std::uint32_t m,
                               double tol) {
    ValidateResult res;
    const std::uint32_t n = raw.n;
    if (m == 0) {
        res.code = "invalid-order";
        return res;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (std::abs(raw.at(i, i)) > tol) {
            res.code = "nonzero-diagonal";
            res.i = res.j = i;
            return res;
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (std::abs(raw.at(j, i) - std::conj(raw.at(i, j))) > tol) {
                res.code = "non-hermitian";
                res.i = j;
                res.j = i;
                return res;
            }
        }
    }
    SeidelMatrix s;
    s.m = m;
    s.n = n;
    s.upper.assign(SeidelMatrix::upper_size(n), 0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            std::complex<double> z = raw.at(i, j);
            if (std::abs(std::abs(z) - 1.0) > tol) {
                res.code = "bad-modulus";
                res.i = i;
                res.j = j;
                return res;
            }
            double angle = std::arg(z);
            long e = std::lround(angle / step);
            std::uint32_t exp = static_cast<std::uint32_t>(((e % m) + m) % m);
            std::complex<double> root(std::cos(step * exp), std::sin(step * exp));
            if (std::abs(z - root) > tol) {
                res.code = "not-a-root";
                res.i = i;
                res.j = j;
                return res;
            }
            s.upper[s.idx(i, j)] = static_cast<std::uint8_t>(exp);
        }
    }
    res.ok = true;
    res.matrix = std::move(s);
    return res;
}

ComplexMatrixView embed_seidel(const SeidelMatrix& s) {
    ComplexMatrixView out;
    out.n = s.n;
    out.a.assign(static_cast<std::size_t>(s.n) * s.n, {0.0, 0.0});
    const double step = 2.0 * std::numbers::pi / static_cast<double>(s.m);
    for (std::uint32_t i = 0; i < s.n; ++i) {
        for (std::uint32_t j = 0; j < s.n; ++j) {
            if (i == j) continue;
            double angle = step * static_cast<double>(s.entry_exp(i, j));
            out.at(i, j) = {std::cos(angle), std::sin(angle)};
        }
    }
    return out;
}

} // namespace crewlab
