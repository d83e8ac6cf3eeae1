#include "crewlab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "crewlab/error.hpp"

namespace crewlab {

namespace {

const json& require_field(const json& j, const char* name) {
    if (!j.is_object()) throw Error("bad-json", "expected a JSON object");
    auto it = j.find(name);
    if (it == j.end())
        throw Error(std::string("missing-field:") + name,
                    std::string("missing field '") + name + "'");
    return *it;
}

std::uint32_t require_uint(const json& j, const char* name) {
    const json& f = require_field(j, name);
    if (!f.is_number_unsigned() && !(f.is_number_integer() && f.get<long long>() >= 0))
        throw Error(std::string("bad-field:") + name,
                    std::string("field '") + name + "' must be a nonnegative integer");
    return f.get<std::uint32_t>();
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> read_pairs(const json& j,
                                                                const char* name,
                                                                std::uint32_t n) {
    const json& arr = require_field(j, name);
    if (!arr.is_array())
        throw Error(std::string("bad-field:") + name,
                    std::string("field '") + name + "' must be an array of pairs");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw Error(std::string("bad-field:") + name, "pair entries must be [i,j]");
        long long a = e[0].get<long long>();
        long long b = e[1].get<long long>();
        if (a < 1 || b < 1 || a > n || b > n)
            throw Error(std::string("bad-range:") + name,
                        "vertex index out of range 1..n");
        out.emplace_back(static_cast<std::uint32_t>(a - 1),
                         static_cast<std::uint32_t>(b - 1));
    }
    return out;
}

} // namespace

json seidel_to_json(const SeidelMatrix& s) {
    json j;
    j["m"] = s.m;
    j["n"] = s.n;
    j["upper"] = s.upper;
    return j;
}

SeidelMatrix seidel_from_json(const json& j) {
    SeidelMatrix s;
    s.m = require_uint(j, "m");
    s.n = require_uint(j, "n");
    if (s.m == 0) throw Error("bad-field:m", "root order must be positive");
    const json& upper = require_field(j, "upper");
    if (!upper.is_array() || upper.size() != SeidelMatrix::upper_size(s.n))
        throw Error("bad-field:upper", "upper must list n(n-1)/2 exponents");
    s.upper.reserve(upper.size());
    for (const auto& e : upper) {
        if (!e.is_number_integer())
            throw Error("bad-field:upper", "exponents must be integers");
        long long v = e.get<long long>();
        if (v < 0 || v >= s.m)
            throw Error("bad-range:upper", "exponent outside 0..m-1");
        s.upper.push_back(static_cast<std::uint8_t>(v));
    }
    return s;
}

json graph_to_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a + 1, b + 1});
    j["edges"] = edges;
    return j;
}

SimpleGraph graph_from_json(const json& j) {
    std::uint32_t n = require_uint(j, "n");
    return make_graph(n, read_pairs(j, "edges", n));
}

json digraph_to_json(const Digraph& g) {
    json j;
    j["n"] = g.n;
    json arcs = json::array();
    for (const auto& [a, b] : g.arcs) arcs.push_back({a + 1, b + 1});
    j["arcs"] = arcs;
    return j;
}

Digraph digraph_from_json(const json& j) {
    std::uint32_t n = require_uint(j, "n");
    return make_digraph(n, read_pairs(j, "arcs", n));
}

json twograph_to_json(const TwoGraphData& t) {
    json j;
    j["m"] = t.m;
    j["n"] = t.n;
    json classes = json::array();
    for (std::uint32_t i = 0; i < t.n; ++i)
        for (std::uint32_t k = i + 1; k < t.n; ++k)
            for (std::uint32_t l = k + 1; l < t.n; ++l) {
                json entry;
                entry["t"] = {i + 1, k + 1, l + 1};
                entry["c"] = t.at(i, k, l);
                classes.push_back(entry);
            }
    j["classes"] = classes;
    return j;
}

TwoGraphData twograph_from_json(const json& j) {
    TwoGraphData t;
    t.m = require_uint(j, "m");
    t.n = require_uint(j, "n");
    if (t.m == 0) throw Error("bad-field:m", "root order must be positive");
    const json& classes = require_field(j, "classes");
    if (!classes.is_array())
        throw Error("bad-field:classes", "classes must be an array");
    const std::size_t expected = TwoGraphData::triple_count(t.n);
    t.classes.assign(expected, 0);
    std::vector<bool> seen(expected, false);
    for (const auto& entry : classes) {
        const json& triple = require_field(entry, "t");
        if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_integer() ||
            !triple[1].is_number_integer() || !triple[2].is_number_integer())
            throw Error("bad-field:t", "triple must be [i,j,k]");
        long long a = triple[0].get<long long>();
        long long b = triple[1].get<long long>();
        long long c = triple[2].get<long long>();
        if (a < 1 || b <= a || c <= b || c > t.n)
            throw Error("bad-range:t", "triples must be ascending within 1..n");
        const json& cls_field = require_field(entry, "c");
        if (!cls_field.is_number_integer())
            throw Error("bad-field:c", "class must be an integer");
        long long cls = cls_field.get<long long>();
        if (cls < 0 || cls >= t.m)
            throw Error("bad-range:c", "class outside 0..m-1");
        std::size_t r = t.rank(static_cast<std::uint32_t>(a - 1),
                               static_cast<std::uint32_t>(b - 1),
                               static_cast<std::uint32_t>(c - 1));
        if (seen[r]) throw Error("bad-field:classes", "duplicate triple");
        seen[r] = true;
        t.classes[r] = static_cast<std::uint8_t>(cls);
    }
    for (bool s : seen)
        if (!s) throw Error("bad-field:classes", "all C(n,3) triples are required");
    return t;
}

json frame_to_json(const FrameSystem& f) {
    json j;
    j["k"] = f.k;
    j["n"] = f.n;
    j["alpha"] = f.alpha;
    json vectors = json::array();
    for (const auto& z : f.vectors) {
        json vec = json::array();
        for (const auto& c : z) vec.push_back({c.real(), c.imag()});
        vectors.push_back(vec);
    }
    j["vectors"] = vectors;
    return j;
}

FrameSystem frame_from_json(const json& j) {
    FrameSystem f;
    f.k = static_cast<int>(require_uint(j, "k"));
    f.n = static_cast<int>(require_uint(j, "n"));
    const json& alpha = require_field(j, "alpha");
    if (!alpha.is_number()) throw Error("bad-field:alpha", "alpha must be a number");
    f.alpha = alpha.get<double>();
    const json& vectors = require_field(j, "vectors");
    if (!vectors.is_array() || vectors.size() != static_cast<std::size_t>(f.n))
        throw Error("bad-field:vectors", "vectors must list n entries");
    for (const auto& vec : vectors) {
        if (!vec.is_array() || vec.size() != static_cast<std::size_t>(f.k))
            throw Error("bad-field:vectors", "each vector must have k coordinates");
        std::vector<std::complex<double>> z;
        z.reserve(f.k);
        for (const auto& c : vec) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
                throw Error("bad-field:vectors", "coordinates must be [re,im]");
            z.emplace_back(c[0].get<double>(), c[1].get<double>());
        }
        f.vectors.push_back(std::move(z));
    }
    return f;
}

RawComplexInput raw_matrix_from_json(const json& j) {
    RawComplexInput input;
    input.m = require_uint(j, "m");
    const json& rows = require_field(j, "matrix");
    if (!rows.is_array() || rows.empty())
        throw Error("bad-field:matrix", "matrix must be a nonempty array of rows");
    const std::size_t n = rows.size();
    input.matrix.n = static_cast<std::uint32_t>(n);
    input.matrix.a.assign(n * n, {0.0, 0.0});
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != n)
            throw Error("bad-field:matrix", "matrix must be square");
        for (std::size_t c = 0; c < n; ++c) {
            const json& cell = row[c];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw Error("bad-field:matrix", "entries must be [re,im]");
            input.matrix.at(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)) = {
                cell[0].get<double>(), cell[1].get<double>()};
        }
    }
    return input;
}

json certificate_to_json(const CertificateResult& r) {
    json j;
    if (const auto* refusal = std::get_if<CertificateRefusal>(&r)) {
        j["regular"] = false;
        j["witness"] = {refusal->i + 1, refusal->j + 1};
        return j;
    }
    const auto& cert = std::get<SpectralCertificate>(r);
    j["regular"] = true;
    j["exact"] = cert.exact;
    if (cert.exact && cyc_is_rational_integer(cert.mu)) {
        j["mu"] = cyc_rational_part(cert.mu).to_int64();
        j["lambda"] = {cert.lambda1_int, cert.lambda2_int};
    } else {
        j["mu"] = cert.mu_value;
        j["lambda"] = {cert.lambda1, cert.lambda2};
    }
    j["mult"] = {cert.mult1, cert.mult2};
    return j;
}

json neighborhood_report_to_json(const NeighborhoodReport& r) {
    json j;
    j["row_sums_constant"] = r.row_sums_constant;
    j["mu_real"] = r.mu_real;
    j["mu"] = r.mu_value;
    j["lambda"] = {r.lambda1, r.lambda2};
    j["lambda_mult"] = {r.mult_lambda1, r.mult_lambda2};
    j["spectrum_matches"] = r.spectrum_matches;
    json clusters = json::array();
    for (const auto& c : r.clusters) clusters.push_back({{"value", c.value},
                                                         {"mult", c.multiplicity}});
    j["spectrum"] = clusters;
    j["regular"] = r.regular;
    j["certificate_regular"] = r.certificate_regular;
    j["agrees_with_certificate"] = r.agrees_with_certificate;
    if (r.certificate_witness)
        j["certificate_witness"] = {r.certificate_witness->first + 1,
                                    r.certificate_witness->second + 1};
    return j;
}

json etf_report_to_json(const EtfReport& r) {
    json j;
    j["etf"] = r.etf;
    j["unit_norms"] = r.unit_norms;
    j["equiangular"] = r.equiangular;
    j["tight"] = r.tight;
    j["welch_equality"] = r.welch_equality;
    j["alpha"] = r.alpha;
    if (std::isnan(r.welch)) {
        j["welch_bound"] = nullptr;
    } else {
        j["welch_bound"] = r.welch;
    }
    j["frame_constant"] = r.frame_constant;
    j["tol"] = r.tol;
    json res;
    res["norm"] = r.max_norm_dev;
    res["angle"] = r.max_angle_dev;
    res["tight"] = r.max_tight_dev;
    if (!std::isnan(r.welch_dev)) res["welch"] = r.welch_dev;
    j["residuals"] = res;
    return j;
}

json bound_report_to_json(const BoundReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["alpha"] = r.alpha;
    json abs;
    abs["holds"] = r.absolute_holds;
    abs["limit"] = r.absolute_limit;
    abs["slack"] = r.absolute_slack;
    j["absolute"] = abs;
    json rel;
    rel["applicable"] = r.relative_applicable;
    if (r.relative_applicable) {
        rel["value"] = r.relative_value;
        rel["equality"] = r.relative_equality;
    }
    j["relative"] = rel;
    if (r.spectrum_predicted) {
        json spec;
        spec["eigenvalues"] = {r.predicted_low, r.predicted_high};
        spec["multiplicities"] = {r.predicted_low_mult, r.predicted_high_mult};
        j["predicted_spectrum"] = spec;
    }
    return j;
}

json validate_result_to_json(const ValidateResult& r) {
    json j;
    j["valid"] = r.ok;
    if (r.ok) {
        j["seidel"] = seidel_to_json(r.matrix);
    } else {
        j["reason"] = r.code;
        j["at"] = {r.i + 1, r.j + 1};
    }
    return j;
}

json srg_to_json(const SimpleGraph& g) {
    json j;
    auto params = srg_parameters(g);
    j["strongly_regular"] = params.has_value();
    if (params) {
        j["n"] = params->n;
        j["k"] = params->k;
        j["a"] = params->a;
        j["c"] = params->c;
        j["k_equals_2c"] = params->k == 2 * params->c;
        j["regular_two_graph"] = regular_two_graph_via_srg(g);
    }
    return j;
}

json table_to_json(const std::vector<TableCell>& cells) {
    json rows = json::array();
    for (const auto& c : cells) {
        json row;
        row["family"] = c.family;
        row["n"] = c.n;
        row["quantity"] = c.quantity;
        row["method"] = c.method;
        if (c.value) {
            if (c.value->fits_int64()) row["value"] = c.value->to_int64();
            else row["value"] = c.value->str();
        } else {
            row["value"] = nullptr;
        }
        rows.push_back(row);
    }
    json j;
    j["rows"] = rows;
    return j;
}

std::string table_to_csv(const std::vector<TableCell>& cells) {
    std::ostringstream out;
    out << "family,n,quantity,value,method\n";
    for (const auto& c : cells) {
        out << c.family << ',' << c.n << ',' << c.quantity << ',';
        if (c.value) out << c.value->str();
        out << ',' << c.method << '\n';
    }
    return out.str();
}

json demo_report_to_json(const DemoReport& d) {
    json j;
    j["digraph"] = digraph_to_json(d.digraph);
    j["seidel8"] = seidel_to_json(d.seidel8);
    j["cone9"] = seidel_to_json(d.cone9);
    j["canonical_match"] = d.canonical_match;
    j["certificate"] = certificate_to_json(CertificateResult(d.certificate));
    json gram;
    gram["scale"] = d.gram.scale;
    gram["coherence"] = d.gram.coherence;
    gram["rank"] = d.gram.rank;
    gram["eigenvalues"] = d.gram.eigenvalues;
    j["gram"] = gram;
    j["frame"] = frame_to_json(d.frame);
    j["etf"] = etf_report_to_json(d.etf);
    j["bounds"] = bound_report_to_json(d.bounds);
    return j;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("bad-json", "input is not valid JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("missing-file", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

} // namespace crewlab
