#include <catch2/catch_amalgamated.hpp>

#include "latkit/catalog.hpp"
#include "latkit/json_io.hpp"
#include "latkit/report.hpp"
#include "latkit/verify.hpp"

using namespace latkit;

TEST_CASE("poset json round trip is canonical", "[io]") {
    auto j = Json::parse(R"({"elements": ["1","a","0","b"],
                             "covers": [["a","1"],["0","a"],["0","b"],["b","1"]]})");
    auto p = poset_from_json(j);
    auto out = poset_to_json(p);
    REQUIRE(out["elements"] == Json::array({"0", "1", "a", "b"}));
    REQUIRE(out["covers"][0] == Json::array({"0", "a"}));
    // emitted form parses back to the same relation
    auto p2 = poset_from_json(out);
    REQUIRE(poset_to_json(p2) == out);

    REQUIRE_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["x"]})")), InvalidInput);
    REQUIRE_THROWS_AS(
        poset_from_json(Json::parse(
            R"({"elements": ["0","1","2"], "covers": [["0","1"],["1","2"],["0","2"]]})")),
        NonHasseCover);
}

TEST_CASE("complex json round trip", "[io]") {
    auto gamma = catalog::fig1_right().crosscut_complex(0, catalog::fig1_right().top());
    auto j = complex_to_json(gamma);
    auto back = complex_from_json(j);
    REQUIRE(complex_to_json(back) == j);
    REQUIRE(isomorphic(back, gamma));
}

TEST_CASE("congruence json round trip", "[io]") {
    auto n5 = catalog::n5();
    auto theta = principal_congruence(n5, n5.poset().index_of("a"), n5.top());
    auto j = congruence_to_json(n5, theta);
    REQUIRE(j["blocks"] == Json::parse(R"([["0","b","c"],["a","1"]])"));
    auto back = congruence_from_json(n5, j);
    REQUIRE(back == theta);
}

TEST_CASE("labelling json round trip", "[io]") {
    auto b2 = catalog::boolean_lattice(2);
    EdgeLabelling lab;
    for (const auto& e : b2.poset().cover_pairs()) lab.labels[e] = "L" + b2.name(e.second);
    auto j = labelling_to_json(b2.poset(), lab);
    auto back = labelling_from_json(b2.poset(), j);
    REQUIRE(back.labels == lab.labels);
}

TEST_CASE("arrangement json accepts integers and fraction strings", "[io]") {
    auto j = Json::parse(R"({"dim": 2, "normals": [["1","0"],["1/2","-3"],[0,1]]})");
    auto a = arrangement_from_json(j);
    REQUIRE(a.size() == 3);
    REQUIRE(a.normal(1)[0] == Rational(1, 2));
    auto out = arrangement_to_json(a);
    auto back = arrangement_from_json(out);
    REQUIRE(arrangement_to_json(back) == out);

    REQUIRE_THROWS_AS(rational_from_string("1/0"), InvalidInput);
    REQUIRE_THROWS_AS(rational_from_string("x"), InvalidInput);
    REQUIRE_THROWS_AS(rational_from_string("1.5"), InvalidInput);
}

TEST_CASE("report rendering is deterministic", "[io]") {
    RunOptions opt;
    opt.threads = 4;
    auto a = verify::render(verify::run_suite("sb", opt), opt).dump(2);
    auto b = verify::render(verify::run_suite("sb", opt), opt).dump(2);
    REQUIRE(a == b);
}
