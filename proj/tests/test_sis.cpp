#include "catch_amalgamated.hpp"

#include "oracle_lines.hpp"
#include "sislne/sis.hpp"

using namespace sislne;

namespace {
QMPoly P(const std::string& s) { return parse_polynomial(s, proj_vars()); }
SisInput input(const std::string& fd, const std::string& fd1) {
    return SisInput::make(P(fd), P(fd1));
}
} // namespace

TEST_CASE("input validation") {
    CHECK_THROWS_AS(input("x*y", "x^2"), SisError);        // degree must be d+1
    CHECK_THROWS_AS(input("x^2*y", "z^4"), SisError);      // non-reduced tangent cone
    CHECK_THROWS_AS(input("x+y", "x^2"), SisError);        // d >= 2
    CHECK_THROWS_AS(input("x^2+y^2+z", "x^3"), SisError);  // inhomogeneous
    CHECK_NOTHROW(input("x*y", "x^3"));
}

TEST_CASE("superisolatedness checks") {
    // quadruple point at [0:0:1], z^5 does not vanish there
    auto in = input("x*y*(x+y)*(x-y)", "z^5");
    auto recs = singular_points(in.fd);
    CHECK(check_superisolated(in, recs));

    // cusp example with a generic 4th power
    auto cusp = input("z*x^2+y^3", "(x+y+z)^4");
    recs = singular_points(cusp.fd);
    CHECK(check_superisolated(cusp, recs));

    // forced counterexample: x^3 vanishes at the node of xy
    auto bad = input("x*y", "x^3");
    recs = singular_points(bad.fd);
    CHECK_FALSE(check_superisolated(bad, recs));
}

TEST_CASE("verdicts for the worked equations") {
    SECTION("four concurrent lines + z^5") {
        auto r = decide_lne(input("x*y*(x+y)*(x-y)", "z^5"));
        CHECK(r.superisolated);
        CHECK(r.lne == LneVerdict::Yes);
        CHECK(r.r == 1);
        CHECK(r.k_list() == std::vector<int>{4});
        CHECK(r.n0.value() == 0);
        CHECK(r.case_tag.value() == CaseTag::Case1LineArrangement);
        CHECK(r.polar_per_point == std::vector<int>{3});
    }
    SECTION("cuspidal cubic + l^4: superisolated but not normally embedded") {
        auto r = decide_lne(input("z*x^2+y^3", "(x+y+z)^4"));
        CHECK(r.superisolated);
        CHECK(r.lne == LneVerdict::No);
        REQUIRE(r.witness.has_value());
        CHECK_FALSE(r.records[r.witness.value()].ordinary);
        CHECK_FALSE(r.case_tag.has_value());
    }
    SECTION("smooth quartic cone + x^5: vacuously yes") {
        auto r = decide_lne(input("x^4+y^4+z^4", "x^5"));
        CHECK(r.superisolated);
        CHECK(r.lne == LneVerdict::Yes);
        CHECK(r.r == 0);
        CHECK(r.n0.value() == 12);
        CHECK(r.case_tag.value() == CaseTag::Case2);
    }
    SECTION("two lines and a conic + z^5") {
        auto r = decide_lne(input("x*y*(x^2+y^2+z^2)", "z^5"));
        CHECK(r.superisolated);
        CHECK(r.lne == LneVerdict::Yes);
        CHECK(r.r == 5);
        CHECK(r.k_list() == std::vector<int>{2, 2, 2, 2, 2});
        CHECK(r.n0.value() == 2);
        CHECK(r.case_tag.value() == CaseTag::Case2);
    }
    SECTION("not superisolated: no verdict") {
        auto r = decide_lne(SisInput::make(P("x*y"), P("x^3")));
        CHECK_FALSE(r.superisolated);
        CHECK(r.lne == LneVerdict::NotApplicable);
    }
}

TEST_CASE("case tag agrees with supplied component degrees") {
    // line arrangement: N0 = 0 and all degrees 1
    auto in1 = SisInput::make(P("x*y*(x+y)*(x-y)"), P("z^5"),
                              {P("x"), P("y"), P("x+y"), P("x-y")});
    auto r1 = decide_lne(in1);
    CHECK(r1.case_tag.value() == CaseTag::Case1LineArrangement);
    REQUIRE(r1.components.has_value());

    // conic present: N0 > 0
    auto in2 = SisInput::make(P("x*y*(x^2+y^2+z^2)"), P("z^5"),
                              {P("x"), P("y"), P("x^2+y^2+z^2")});
    auto r2 = decide_lne(in2);
    CHECK(r2.case_tag.value() == CaseTag::Case2);
}

TEST_CASE("scale invariance of the verdict") {
    auto base = decide_lne(input("x*y*(x^2+y^2+z^2)", "z^5"));
    auto scaled = decide_lne(SisInput::make(P("x*y*(x^2+y^2+z^2)").scaled(Rational(-7, 3)),
                                            P("z^5").scaled(Rational(5, 2))));
    CHECK(base.lne == scaled.lne);
    CHECK(base.superisolated == scaled.superisolated);
    CHECK(base.r == scaled.r);
    CHECK(base.k_list() == scaled.k_list());
    CHECK(base.n0 == scaled.n0);
}

TEST_CASE("random line arrangements with generic linear-form powers") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> nd(2, 5), cd(1, 4);
    int done = 0;
    for (int trial = 0; trial < 30 && done < 10; ++trial) {
        auto lines = oracle::random_distinct_lines(rng, nd(rng));
        QMPoly f = QMPoly::constant(proj_vars(), Rational(1));
        for (const auto& l : lines) f = f * oracle::line_poly(l);
        // generic linear form avoiding the (finitely many) singular points
        QMPoly l(proj_vars());
        l.add_term({1, 0, 0}, Rational(cd(rng)));
        l.add_term({0, 1, 0}, Rational(cd(rng)));
        l.add_term({0, 0, 1}, Rational(cd(rng)));
        auto pts = oracle::arrangement_singular_points(lines);
        bool avoids = true;
        for (const auto& p : pts) {
            Rational v = l.coeff({1, 0, 0}) * p.coords[0] + l.coeff({0, 1, 0}) * p.coords[1] +
                         l.coeff({0, 0, 1}) * p.coords[2];
            if (v.is_zero()) avoids = false;
        }
        if (!avoids) continue;
        ++done;
        auto r = decide_lne(SisInput::make(f, l.pow(static_cast<unsigned>(lines.size()) + 1)));
        CHECK(r.superisolated);
        CHECK(r.lne == LneVerdict::Yes); // arrangements of distinct lines are ordinary
        CHECK(r.n0.value() == 0);
    }
    CHECK(done >= 5);
}
