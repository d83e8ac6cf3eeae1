#include <doctest.h>

#include "crewlab/error.hpp"
#include "crewlab/json_io.hpp"

using namespace crewlab;

TEST_CASE("seidel JSON round trip and field checks") {
    SeidelMatrix nine = known_etf96_matrix();
    json j = seidel_to_json(nine);
    CHECK(seidel_from_json(j) == nine);
    CHECK(j["m"] == 3);
    CHECK(j["n"] == 9);
    CHECK(j["upper"].size() == 36);

    // dumped twice, byte identical
    CHECK(j.dump() == seidel_to_json(nine).dump());

    json missing = j;
    missing.erase("upper");
    CHECK_THROWS_WITH_AS(seidel_from_json(missing), doctest::Contains("upper"), Error);

    json short_upper = j;
    short_upper["upper"] = {0, 1};
    CHECK_THROWS_AS(seidel_from_json(short_upper), Error);

    json out_of_range = j;
    out_of_range["upper"][3] = 7;
    try {
        seidel_from_json(out_of_range);
        FAIL("expected bad-range");
    } catch (const Error& e) {
        CHECK(e.code() == "bad-range:upper");
    }
}

TEST_CASE("graph and digraph JSON use 1-based pairs") {
    SimpleGraph g = make_graph(6, {{0, 2}, {0, 4}, {1, 4}, {1, 5}, {2, 5}});
    json jg = graph_to_json(g);
    CHECK(jg["edges"][0] == json::array({1, 3}));
    CHECK(graph_from_json(jg).edges == g.edges);

    Digraph d = known_etf96_digraph();
    json jd = digraph_to_json(d);
    CHECK(digraph_from_json(jd).arcs == d.arcs);

    json bad = jg;
    bad["edges"].push_back({0, 2}); // 0 is out of range on the wire
    try {
        graph_from_json(bad);
        FAIL("expected bad-range");
    } catch (const Error& e) {
        CHECK(e.code() == "bad-range:edges");
    }
}

TEST_CASE("twograph JSON requires all triples exactly once") {
    TwoGraphData t = twograph_from_seidel(known_etf96_matrix());
    json j = twograph_to_json(t);
    CHECK(j["classes"].size() == 84);
    CHECK(twograph_from_json(j) == t);

    json dropped = j;
    dropped["classes"].erase(0);
    CHECK_THROWS_AS(twograph_from_json(dropped), Error);

    json duplicated = j;
    duplicated["classes"][1] = duplicated["classes"][0];
    CHECK_THROWS_AS(twograph_from_json(duplicated), Error);

    json bad_class = j;
    bad_class["classes"][0]["c"] = 3;
    CHECK_THROWS_AS(twograph_from_json(bad_class), Error);
}

TEST_CASE("frame JSON round trip") {
    FrameSystem f = frame_vectors(gram_from_seidel(known_etf96_matrix()));
    json j = frame_to_json(f);
    FrameSystem back = frame_from_json(j);
    CHECK(back.k == f.k);
    CHECK(back.n == f.n);
    CHECK(back.alpha == f.alpha);
    for (int i = 0; i < f.n; ++i)
        for (int t = 0; t < f.k; ++t)
            CHECK(std::abs(back.vectors[i][t] - f.vectors[i][t]) == 0.0);
}

TEST_CASE("raw complex input parses for the validator") {
    json j;
    j["m"] = 2;
    j["matrix"] = {{{0.0, 0.0}, {-1.0, 0.0}}, {{-1.0, 0.0}, {0.0, 0.0}}};
    RawComplexInput raw = raw_matrix_from_json(j);
    CHECK(raw.m == 2);
    CHECK(raw.matrix.n == 2);
    ValidateResult r = validate_seidel(raw.matrix, raw.m, 1e-9);
    CHECK(r.ok);
    CHECK(r.matrix.upper == std::vector<std::uint8_t>{1});

    json ragged = j;
    ragged["matrix"][0].erase(1);
    CHECK_THROWS_AS(raw_matrix_from_json(ragged), Error);
}

TEST_CASE("certificate JSON carries the documented shape") {
    CertificateResult ok = two_eigenvalue_certificate(known_etf96_matrix());
    json j = certificate_to_json(ok);
    CHECK(j["regular"] == true);
    CHECK(j["mu"] == -2);
    CHECK(j["lambda"] == json::array({-4, 2}));
    CHECK(j["mult"] == json::array({3, 6}));
    CHECK(j["exact"] == true);

    SeidelMatrix tri;
    tri.m = 3;
    tri.n = 3;
    tri.upper = {0, 1, 2};
    json refusal = certificate_to_json(two_eigenvalue_certificate(tri));
    CHECK(refusal["regular"] == false);
    CHECK(refusal["witness"].is_array());
}

TEST_CASE("malformed text fails with the bad-json code") {
    try {
        parse_json_text("{not json");
        FAIL("expected bad-json");
    } catch (const Error& e) {
        CHECK(e.code() == "bad-json");
    }
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), Error);
}

TEST_CASE("table serializations stay in sync") {
    auto cells = table_report(4);
    json j = table_to_json(cells);
    CHECK(j["rows"].size() == cells.size());
    std::string csv = table_to_csv(cells);
    CHECK(csv.find("family,n,quantity,value,method") == 0);
    CHECK(csv.find("cube,4,nonisomorphic,42,formula") != std::string::npos);
    CHECK(csv.find("real,4,switching,8,formula") != std::string::npos);
}
