#include <catch2/catch_amalgamated.hpp>

#include "alexg/xc.hpp"

using namespace alexg;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }
} // namespace

TEST_CASE("built-in matrices", "[xc]") {
    const RMatrix a = standard_r(RKind::AForm);
    CHECK(a.m(0, 0) == P("T"));
    CHECK(a.m(0, 1) == P("0"));
    CHECK(a.m(1, 0) == P("1 - T^2"));
    CHECK(a.m(1, 1) == P("T"));

    const RMatrix b = standard_r(RKind::BForm);
    CHECK(b.m(0, 0) == P("T^2"));
    CHECK(b.m(0, 1) == P("0"));
    CHECK(b.m(1, 0) == P("1 - T^2"));
    CHECK(b.m(1, 1) == P("1"));
}

TEST_CASE("yang-baxter products", "[xc]") {
    const YangBaxterResult yb = yang_baxter(standard_r(RKind::AForm));
    REQUIRE(yb.holds);
    Matrix<LaurentPoly> expect(3, 3);
    expect(0, 0) = P("T^2");
    expect(1, 0) = P("T - T^3");
    expect(1, 1) = P("T^2");
    expect(2, 0) = P("1 - T^2");
    expect(2, 1) = P("T - T^3");
    expect(2, 2) = P("T^2");
    CHECK(yb.lhs == lift(expect));
    CHECK(yb.rhs == lift(expect));

    CHECK(yang_baxter(standard_r(RKind::BForm)).holds);

    RMatrix bad;
    bad.m(0, 0) = P("T");
    bad.m(0, 1) = P("1");
    bad.m(1, 1) = P("1");
    const YangBaxterResult nyb = yang_baxter(bad);
    CHECK_FALSE(nyb.holds);
    CHECK(nyb.lhs != nyb.rhs);
}

TEST_CASE("twisting relates the two built-ins", "[xc]") {
    const RMatrix a = standard_r(RKind::AForm);
    const RMatrix twisted = twist(a, TwistElem{P("T")});
    CHECK(twisted.m == standard_r(RKind::BForm).m);

    // trivial twist and inverse twist
    CHECK(twist(a, TwistElem{P("1")}).m == a.m);
    const RMatrix back = twist(twisted, TwistElem{P("T^-1")});
    CHECK(back.m == a.m);

    CHECK_THROWS_AS(twist(a, TwistElem{P("1 + T")}), TwistError);
}

TEST_CASE("all five axioms hold for both built-ins", "[xc]") {
    for (RKind kind : {RKind::AForm, RKind::BForm}) {
        const AxiomReport rep = verify_axioms(standard_r(kind));
        CHECK(rep.all_hold);
        for (const AxiomCheck& c : rep.axioms) CHECK(c.holds);
        // (3)-(5) come out exactly; (2) only up to a unit
        CHECK(rep.axioms[2].exact);
        CHECK(rep.axioms[3].exact);
        CHECK(rep.axioms[4].exact);
        CHECK_FALSE(rep.axioms[1].exact);
    }
}

TEST_CASE("non-yang-baxter matrix fails axiom 5", "[xc]") {
    RMatrix bad;
    bad.m(0, 0) = P("T");
    bad.m(0, 1) = P("1");
    bad.m(1, 1) = P("1");
    const AxiomReport rep = verify_axioms(bad);
    CHECK_FALSE(rep.all_hold);
    CHECK_FALSE(rep.axioms[4].holds);
}
