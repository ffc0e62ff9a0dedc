#include "catch_amalgamated.hpp"

#include "sislne/number_field.hpp"

#include <random>

using namespace sislne;

namespace {
QPoly qp(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return QPoly(std::move(c));
}
} // namespace

TEST_CASE("invert the generator of Q[t]/(t^2+1)") {
    auto F = NumberField::make("t", qp({1, 0, 1}));
    NFElem t = NFElem::generator(F);
    NFElem inv = t.invert();
    CHECK(inv == -t);
    CHECK(t * inv == NFElem::one());
}

TEST_CASE("inverting a zero divisor raises a split") {
    auto F = NumberField::make("t", qp({-1, 0, 1})); // t^2 - 1
    NFElem e = NFElem::generator(F) - NFElem::one();  // t - 1
    bool split = false;
    try {
        (void)e.invert();
    } catch (const SplitEvent& s) {
        split = true;
        CHECK(s.m1 * s.m2 == F->modulus());
        CHECK(gcd(s.m1, s.m2).degree() == 0);
        CHECK((s.m1 == qp({-1, 1}) || s.m2 == qp({-1, 1})));
    }
    CHECK(split);
}

TEST_CASE("inversion in Q[t]/(t^2-2)") {
    auto F = NumberField::make("t", qp({-2, 0, 1}));
    NFElem t = NFElem::generator(F);
    NFElem inv = (t + NFElem::one()).invert();
    CHECK(inv == t - NFElem::one()); // (t+1)(t-1) = t^2-1 = 1
}

TEST_CASE("modulus must be squarefree and nonconstant") {
    CHECK_THROWS(NumberField::make("t", qp({0, 0, 1})));
    CHECK_THROWS(NumberField::make("t", qp({5})));
}

TEST_CASE("branch runner collects coprime branches with full product") {
    // f computes 1/(t-1) which only exists on one branch of t^2-1
    QPoly m = qp({-1, 0, 1});
    auto results = run_on_branches<NFElem>("t", m, [](const FieldPtr& f) {
        NFElem e = NFElem::generator(f) - NFElem::one();
        if (e.is_zero()) return NFElem::zero();
        if (!nf_is_invertible(e)) return e.invert(); // throws SplitEvent
        return e.invert();
    });
    REQUIRE(results.size() == 2);
    QPoly prod = results[0].first->modulus() * results[1].first->modulus();
    CHECK(prod == m);
    CHECK(gcd(results[0].first->modulus(), results[1].first->modulus()).degree() == 0);
}

TEST_CASE("D5 soundness: CRT recombination restores the pre-split value") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> cd(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        // random squarefree modulus of degree 3..5
        QPoly m;
        do {
            std::vector<Rational> c(static_cast<size_t>(3 + trial % 3) + 1);
            for (auto& x : c) x = Rational(cd(rng));
            c.back() = Rational(1);
            m = QPoly(c);
        } while (!is_squarefree(m));

        std::vector<Rational> vc(static_cast<size_t>(m.degree()));
        for (auto& x : vc) x = Rational(cd(rng));
        QPoly value(vc);

        // split by any nontrivial factor found via gcd with a random poly
        QPoly probe;
        do {
            std::vector<Rational> c(3);
            for (auto& x : c) x = Rational(cd(rng));
            probe = QPoly(c);
        } while (probe.is_zero());
        QPoly g = gcd(m, probe);
        if (g.degree() == 0 || g.degree() == m.degree()) continue;
        QPoly m1 = g, m2 = (m / g).monic();

        QPoly r1 = value % m1, r2 = value % m2;
        QPoly back = crt_pair(m1, r1, m2, r2);
        CHECK(back == value % m);
    }
}

TEST_CASE("split-aware zero test is branch-faithful") {
    auto F = NumberField::make("t", qp({-1, 0, 1}));
    NFElem zero = NFElem::zero();
    NFElem unit = NFElem::generator(F) + NFElem(Rational(2));
    CHECK(nf_zero_test_split(zero));
    CHECK_FALSE(nf_zero_test_split(unit));
    NFElem zd = NFElem::generator(F) - NFElem::one();
    CHECK_THROWS_AS((void)nf_zero_test_split(zd), SplitEvent);
}
