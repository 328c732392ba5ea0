#include <catch2/catch_amalgamated.hpp>

#include "alexg/formats.hpp"

#include "corpus.hpp"
#include "gen.hpp"

using namespace alexg;

TEST_CASE("crossings json round-trips", "[formats]") {
    const UpwardDiagram t = corpus::trefoil();
    CHECK(crossings_from_json(crossings_to_json(t)) == t);

    const UpwardDiagram parsed = crossings_from_json(
        R"({"crossings":[{"sign":1,"over_in":1,"under_in":4},)"
        R"({"sign":1,"over_in":5,"under_in":2},{"sign":1,"over_in":3,"under_in":6}]})");
    CHECK(parsed == t);

    CHECK_THROWS_AS(crossings_from_json("{"), ParseError);
    CHECK_THROWS_AS(crossings_from_json("[]"), ParseError);
    CHECK_THROWS_AS(crossings_from_json(R"({"crossings":[{"sign":"x"}]})"), ParseError);
    CHECK_THROWS_AS(
        crossings_from_json(R"({"crossings":[{"sign":1,"over_in":1,"under_in":1}]})"),
        ParseError);

    testgen::Rng rng(10);
    for (int it = 0; it < 20; ++it) {
        const UpwardDiagram d = corpus::random_diagram(rng, rng.uniform(0, 5));
        CHECK(crossings_from_json(crossings_to_json(d)) == d);
    }
}

TEST_CASE("pd text round-trips", "[formats]") {
    const PDCode pd = corpus::fig8_pd();
    CHECK(pd_from_text(pd_to_text(pd)) == pd);
    CHECK(pd_to_text(pd) == "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");

    // parenthesised variant is accepted
    CHECK(pd_from_text("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)") == corpus::torus_pd(3));

    CHECK_THROWS_AS(pd_from_text("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(pd_from_text("X[1,2,3,4,5]"), ParseError);
    CHECK_THROWS_AS(pd_from_text("Y[1,2,3,4]"), ParseError);
    CHECK_THROWS_AS(pd_from_text("X[1,2,3,"), ParseError);
}

TEST_CASE("matrix file parsing", "[formats]") {
    const Matrix<LaurentPoly> m =
        matrix_from_json(R"({"m": [["T", "0"], ["1 - T^2", "T"]]})");
    REQUIRE(m.rows() == 2);
    CHECK(m(0, 0) == parse_poly("T"));
    CHECK(m(1, 0) == parse_poly("1 - T^2"));

    CHECK_THROWS_AS(matrix_from_json("{}"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"m": [["T"], ["T", "T"]]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"m": [["T", 1], ["0", "T"]]})"), ParseError);
}
