// crewlab: classification, enumeration, regularity and ETF pipelines for
// root-of-unity Seidel matrices. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success / verdict true, 1 verdict false or validation
// failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crewlab/counting.hpp"
#include "crewlab/error.hpp"
#include "crewlab/frames.hpp"
#include "crewlab/json_io.hpp"
#include "crewlab/orbits.hpp"
#include "crewlab/seidel.hpp"
#include "crewlab/spectra.hpp"
#include "crewlab/twograph.hpp"

namespace {

using crewlab::json;

int default_jobs() {
    if (const char* env = std::getenv("CREWLAB_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::vector<std::uint8_t> parse_diag(const std::string& text, std::uint32_t m) {
    std::vector<std::uint8_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw crewlab::Error("bad-flag:diag", "empty entry in --diag");
        char* end = nullptr;
        long v = std::strtol(item.c_str(), &end, 10);
        if (end == nullptr || *end != '\0' || v < 0 || v >= static_cast<long>(m))
            throw crewlab::Error("bad-flag:diag", "--diag entries must lie in 0..m-1");
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

// arguments collected from the parser, executed after parsing succeeds
struct Invocation {
    std::string seidel_path, twograph_path, graph_path, digraph_path, frame_path;
    std::string diag_text, orbit_kind = "switching", axiom = "cocycle", out_path;
    double tol = 1e-9;
    double etf_tol = 1e-8;
    std::uint32_t m = 3, n = 4;
    int bound_n = 0, bound_k = 0;
    double alpha = -1.0;
    unsigned n_max = 7;
    bool csv = false;
    bool add_cone = false;
    int pivot = 1;
    int jobs = default_jobs();
    std::uint64_t budget = crewlab::kDefaultEnumerationBudget;
};

int run_validate(const Invocation& inv) {
    json input = crewlab::load_json_file(inv.seidel_path);
    crewlab::ValidateResult result;
    if (input.contains("matrix")) {
        crewlab::RawComplexInput raw = crewlab::raw_matrix_from_json(input);
        result = crewlab::validate_seidel(raw.matrix, raw.m, inv.tol);
    } else {
        result.matrix = crewlab::seidel_from_json(input); // throws on violations
        result.ok = true;
    }
    emit(crewlab::validate_result_to_json(result));
    return result.ok ? 0 : 1;
}

int run_switch(const Invocation& inv) {
    crewlab::SeidelMatrix s = crewlab::seidel_from_json(crewlab::load_json_file(inv.seidel_path));
    crewlab::SwitchVector d;
    d.m = s.m;
    d.diag = parse_diag(inv.diag_text, s.m);
    emit(crewlab::seidel_to_json(crewlab::apply_switch(s, d)));
    return 0;
}

int run_standardize(const Invocation& inv) {
    crewlab::SeidelMatrix s = crewlab::seidel_from_json(crewlab::load_json_file(inv.seidel_path));
    crewlab::StandardForm sf = crewlab::standard_form(s);
    json out = crewlab::seidel_to_json(sf.matrix);
    out["witness"] = sf.witness.diag;
    emit(out);
    return 0;
}

int run_twograph_from_seidel(const Invocation& inv) {
    crewlab::SeidelMatrix s = crewlab::seidel_from_json(crewlab::load_json_file(inv.seidel_path));
    emit(crewlab::twograph_to_json(crewlab::twograph_from_seidel(s)));
    return 0;
}

int run_twograph_to_seidel(const Invocation& inv) {
    crewlab::TwoGraphData t =
        crewlab::twograph_from_json(crewlab::load_json_file(inv.twograph_path));
    if (inv.pivot < 1 || static_cast<std::uint32_t>(inv.pivot) > t.n)
        throw crewlab::Error("bad-flag:pivot", "--pivot must lie in 1..n");
    try {
        emit(crewlab::seidel_to_json(
            crewlab::seidel_from_twograph(t, static_cast<std::uint32_t>(inv.pivot - 1))));
        return 0;
    } catch (const crewlab::Error& e) {
        if (e.code() != "not-realizable") throw;
        json out;
        out["error"] = e.code();
        out["detail"] = e.what();
        emit(out);
        return 1;
    }
}

int run_twograph_validate(const Invocation& inv) {
    crewlab::TwoGraphData t =
        crewlab::twograph_from_json(crewlab::load_json_file(inv.twograph_path));
    crewlab::FourSetWitness w = inv.axiom == "paper" ? crewlab::validate_paper_axiom(t)
                                                     : crewlab::validate_cocycle(t);
    json out;
    out["axiom"] = inv.axiom;
    out["valid"] = w.ok;
    if (!w.ok) {
        out["witness"] = {(*w.witness)[0] + 1, (*w.witness)[1] + 1, (*w.witness)[2] + 1,
                          (*w.witness)[3] + 1};
        if (w.weight) out["weight"] = *w.weight;
    }
    emit(out);
    return w.ok ? 0 : 1;
}

int run_enumerate(const Invocation& inv) {
    std::uint64_t total = crewlab::enumeration_count(inv.m, inv.n, inv.budget);
    if (total >= 1000000)
        std::cerr << "scanning " << total << " matrices (m=" << inv.m << ", n=" << inv.n
                  << ", jobs=" << inv.jobs << ")\n";
    std::uint64_t count = 0;
    if (inv.orbit_kind == "switching")
        count = crewlab::count_switching_classes(inv.m, inv.n, inv.jobs, inv.budget);
    else if (inv.orbit_kind == "equivalence")
        count = crewlab::count_equivalence_classes(inv.m, inv.n, inv.jobs, inv.budget);
    else
        count = crewlab::count_isomorphism_classes(inv.m, inv.n, inv.jobs, inv.budget);
    if (inv.csv) {
        std::cout << "quantity,m,n,value\n"
                  << inv.orbit_kind << ',' << inv.m << ',' << inv.n << ',' << count << "\n";
        return 0;
    }
    json out;
    out["m"] = inv.m;
    out["n"] = inv.n;
    out["orbits"] = inv.orbit_kind;
    out["count"] = count;
    emit(out);
    return 0;
}

int run_regular(const Invocation& inv) {
    crewlab::SeidelMatrix s = crewlab::seidel_from_json(crewlab::load_json_file(inv.seidel_path));
    crewlab::CertificateResult cert = crewlab::two_eigenvalue_certificate(s);
    crewlab::NeighborhoodReport report = crewlab::regular_neighborhood_test(s);
    json out;
    out["certificate"] = crewlab::certificate_to_json(cert);
    out["neighborhood"] = crewlab::neighborhood_report_to_json(report);
    emit(out);
    return std::holds_alternative<crewlab::SpectralCertificate>(cert) ? 0 : 1;
}

int run_srg(const Invocation& inv) {
    crewlab::SimpleGraph g = crewlab::graph_from_json(crewlab::load_json_file(inv.graph_path));
    json out = crewlab::srg_to_json(g);
    emit(out);
    return out["strongly_regular"].get<bool>() ? 0 : 1;
}

int run_etf_build(const Invocation& inv) {
    crewlab::SeidelMatrix s = crewlab::seidel_from_json(crewlab::load_json_file(inv.seidel_path));
    crewlab::GramMatrix g = crewlab::gram_from_seidel(s);
    crewlab::FrameSystem f = crewlab::frame_vectors(g);
    json out = crewlab::frame_to_json(f);
    if (!inv.out_path.empty()) {
        std::ofstream file(inv.out_path);
        if (!file) throw crewlab::Error("bad-output", "cannot open '" + inv.out_path + "'");
        file << out.dump() << "\n";
        json note;
        note["written"] = inv.out_path;
        note["k"] = f.k;
        note["n"] = f.n;
        note["alpha"] = f.alpha;
        emit(note);
    } else {
        emit(out);
    }
    return 0;
}

int run_etf_verify(const Invocation& inv) {
    crewlab::FrameSystem f = crewlab::frame_from_json(crewlab::load_json_file(inv.frame_path));
    crewlab::EtfReport report = crewlab::verify_etf(f, inv.etf_tol);
    emit(crewlab::etf_report_to_json(report));
    return report.etf ? 0 : 1;
}

int run_etf_bounds(const Invocation& inv) {
    const bool welch_defined = inv.bound_n >= inv.bound_k && inv.bound_n >= 2 &&
                               inv.bound_k >= 1;
    double alpha = inv.alpha;
    if (alpha < 0.0) {
        if (!welch_defined)
            throw crewlab::Error("bad-flag:alpha",
                                 "--alpha is required when n < k (no Welch default)");
        alpha = crewlab::welch_bound(inv.bound_n, inv.bound_k);
    }
    crewlab::BoundReport report = crewlab::bound_report(inv.bound_n, inv.bound_k, alpha);
    json out = crewlab::bound_report_to_json(report);
    if (welch_defined) {
        out["welch_bound"] = crewlab::welch_bound(inv.bound_n, inv.bound_k);
    } else {
        out["welch_bound"] = nullptr;
    }
    emit(out);
    return 0;
}

int run_digraph_to_seidel(const Invocation& inv) {
    crewlab::Digraph g = crewlab::digraph_from_json(crewlab::load_json_file(inv.digraph_path));
    crewlab::SeidelMatrix s = crewlab::seidel_from_digraph(g);
    if (inv.add_cone) s = crewlab::cone(s);
    emit(crewlab::seidel_to_json(s));
    return 0;
}

int run_count_tables(const Invocation& inv) {
    std::vector<crewlab::TableCell> cells =
        crewlab::table_report(inv.n_max, inv.jobs, inv.budget);
    if (inv.csv) {
        std::cout << crewlab::table_to_csv(cells);
    } else {
        emit(crewlab::table_to_json(cells));
    }
    return 0;
}

int run_demo(const Invocation&) {
    emit(crewlab::demo_report_to_json(crewlab::demo_etf96()));
    return 0;
}

bool input_error_code(const std::string& code) {
    return code.rfind("bad-", 0) == 0 || code.rfind("missing-", 0) == 0 ||
           code == "budget-exceeded" || code == "domain-error" ||
           code == "invalid-order" || code == "incompatible-order" ||
           code == "unsupported-order" || code == "dimension-mismatch" ||
           code == "too-large" || code == "empty-matrix" || code == "not-rational";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex two-graph and equiangular-tight-frame toolkit"};
    app.require_subcommand(1);
    Invocation inv;
    int (*action)(const Invocation&) = nullptr;

    auto* validate = app.add_subcommand("validate", "check a matrix file for the Seidel property");
    validate->add_option("file", inv.seidel_path, "seidel.json or raw complex matrix")->required();
    validate->add_option("--tol", inv.tol, "entrywise tolerance");
    validate->callback([&] { action = run_validate; });

    auto* switch_cmd = app.add_subcommand("switch", "conjugate by a diagonal of roots of unity");
    switch_cmd->add_option("file", inv.seidel_path)->required();
    switch_cmd->add_option("--diag", inv.diag_text, "comma-separated exponents")->required();
    switch_cmd->callback([&] { action = run_switch; });

    auto* standardize = app.add_subcommand("standardize", "switch to the standard form");
    standardize->add_option("file", inv.seidel_path)->required();
    standardize->callback([&] { action = run_standardize; });

    auto* twograph = app.add_subcommand("twograph", "triple-class data operations");
    twograph->require_subcommand(1);
    auto* tg_from = twograph->add_subcommand("from-seidel", "triple classes of a Seidel matrix");
    tg_from->add_option("file", inv.seidel_path)->required();
    tg_from->callback([&] { action = run_twograph_from_seidel; });
    auto* tg_to = twograph->add_subcommand("to-seidel", "realize triple-class data");
    tg_to->add_option("file", inv.twograph_path)->required();
    tg_to->add_option("--pivot", inv.pivot, "vertex whose row becomes all ones (1-based)");
    tg_to->callback([&] { action = run_twograph_to_seidel; });
    auto* tg_validate = twograph->add_subcommand("validate", "realizability / parity axioms");
    tg_validate->add_option("file", inv.twograph_path)->required();
    tg_validate->add_option("--axiom", inv.axiom, "cocycle|paper")
        ->check(CLI::IsMember({"cocycle", "paper"}));
    tg_validate->callback([&] { action = run_twograph_validate; });

    auto* enumerate = app.add_subcommand("enumerate", "brute-force orbit counting");
    enumerate->add_option("--m", inv.m, "root order")->required();
    enumerate->add_option("--n", inv.n, "vertex count")->required();
    enumerate->add_option("--orbits", inv.orbit_kind, "switching|equivalence|isomorphism")
        ->required()
        ->check(CLI::IsMember({"switching", "equivalence", "isomorphism"}));
    enumerate->add_option("--jobs", inv.jobs, "worker count");
    enumerate->add_option("--budget", inv.budget, "enumeration budget");
    enumerate->add_flag("--csv", inv.csv, "CSV instead of JSON");
    enumerate->callback([&] { action = run_enumerate; });

    auto* regular = app.add_subcommand("regular", "two-eigenvalue certificate + neighborhood report");
    regular->add_option("file", inv.seidel_path)->required();
    regular->callback([&] { action = run_regular; });

    auto* srg = app.add_subcommand("srg", "strongly-regular-graph parameters");
    srg->add_option("file", inv.graph_path)->required();
    srg->callback([&] { action = run_srg; });

    auto* etf = app.add_subcommand("etf", "equiangular-tight-frame pipeline");
    etf->require_subcommand(1);
    auto* etf_build = etf->add_subcommand("build", "Gram factorization into frame vectors");
    etf_build->add_option("file", inv.seidel_path)->required();
    etf_build->add_option("-o,--output", inv.out_path, "write the frame JSON here");
    etf_build->callback([&] { action = run_etf_build; });
    auto* etf_verify = etf->add_subcommand("verify", "check the ETF conditions");
    etf_verify->add_option("file", inv.frame_path)->required();
    etf_verify->add_option("--tol", inv.etf_tol, "verification tolerance");
    etf_verify->callback([&] { action = run_etf_verify; });
    auto* etf_bounds = etf->add_subcommand("bounds", "absolute/relative/Welch bounds");
    etf_bounds->add_option("--n", inv.bound_n, "vector count")->required();
    etf_bounds->add_option("--k", inv.bound_k, "ambient dimension")->required();
    etf_bounds->add_option("--alpha", inv.alpha, "coherence (defaults to the Welch bound)");
    etf_bounds->callback([&] { action = run_etf_bounds; });

    auto* digraph = app.add_subcommand("digraph", "complete-digraph correspondence");
    digraph->require_subcommand(1);
    auto* dg_to = digraph->add_subcommand("to-seidel", "cube-root matrix of a digraph");
    dg_to->add_option("file", inv.digraph_path)->required();
    dg_to->add_flag("--cone", inv.add_cone, "border with a first row and column of ones");
    dg_to->callback([&] { action = run_digraph_to_seidel; });

    auto* count = app.add_subcommand("count", "closed-form class-size tables");
    count->require_subcommand(1);
    auto* tables = count->add_subcommand("tables", "formula and brute-force columns");
    tables->add_option("--n-max", inv.n_max, "largest vertex count");
    tables->add_flag("--csv", inv.csv, "CSV instead of JSON");
    tables->add_option("--jobs", inv.jobs, "worker count");
    tables->add_option("--budget", inv.budget, "enumeration budget");
    tables->callback([&] { action = run_count_tables; });

    auto* demo = app.add_subcommand("demo", "worked examples");
    demo->require_subcommand(1);
    auto* etf96 = demo->add_subcommand("etf96", "the (9,6) pipeline from the 8-vertex digraph");
    etf96->callback([&] { action = run_demo; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return action(inv);
    } catch (const crewlab::Error& e) {
        json out;
        out["error"] = e.code();
        out["detail"] = e.what();
        emit(out);
        std::cerr << "error: " << e.what() << " [" << e.code() << "]\n";
        return input_error_code(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
