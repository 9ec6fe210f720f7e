#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "tca/errors.hpp"
#include "tca/json_io.hpp"
#include "tca/poly_io.hpp"

using namespace tca;

namespace {

Poly randomPoly(RingPtr ring, std::mt19937& rng, int maxTerms = 3, int maxDeg = 3) {
    std::uniform_int_distribution<int> termCount(1, maxTerms);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, maxDeg);
    std::uniform_int_distribution<int> var(0, ring->varCount() - 1);
    std::vector<Term> terms;
    const int tc = termCount(rng);
    for (int t = 0; t < tc; ++t) {
        Monomial m = Monomial::one(ring->varCount());
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) {
            ++m.exps[static_cast<std::size_t>(var(rng))];
            ++m.degree;
        }
        int c = coeff(rng);
        if (c == 0) c = 2;
        terms.push_back(Term{std::move(m), Rational(c)});
    }
    return Poly::fromTerms(std::move(ring), std::move(terms));
}

}  // namespace

TEST_CASE("reduced bases of simple ideals") {
    auto lexRing = Ring::make(1, 2, 0, MonomialOrder::Lex);
    const Poly x = Poly::xVar(lexRing, 1, 1);
    const Poly y = Poly::yVar(lexRing, 1, 2);
    const Ideal I(lexRing, {x + y, y});
    CHECK(I.reducedGB() == std::vector<Poly>{x, y});

    auto tRing = Ring::make(1, 0, 1, MonomialOrder::Degrevlex);
    const Poly xt = Poly::xVar(tRing, 1, 1);
    const Poly t = Poly::tVar(tRing, 1);
    const Ideal J(tRing, {xt * xt, Poly::constant(tRing, Rational(1)) - t * xt});
    CHECK(J.reducedGB() == std::vector<Poly>{Poly::constant(tRing, Rational(1))});
    CHECK(J.isUnit());

    const Ideal empty(tRing, {});
    CHECK(empty.reducedGB().empty());
}

TEST_CASE("normal forms and membership") {
    auto ring = Ring::make(2, 0, 0, MonomialOrder::Degrevlex);
    const Poly x = Poly::xVar(ring, 1, 1);
    const Poly y = Poly::xVar(ring, 2, 2);
    CHECK(normalForm(x * x, Ideal(ring, {x})).isZero());
    CHECK_FALSE(idealContains(Ideal(ring, {x * y}), x));
    const Poly f = parsePoly(ring, "x[1,1]^2*x[2,2] - 3*x[1,2] + 1");
    CHECK(normalForm(f, Ideal(ring, {})) == f);

    auto other = Ring::make(3, 0, 0, MonomialOrder::Degrevlex);
    CHECK_THROWS_AS(normalForm(Poly::xVar(other, 1, 1), Ideal(ring, {x})), Error);
}

TEST_CASE("radical membership") {
    auto ring = Ring::make(2, 0, 0, MonomialOrder::Degrevlex);
    const Poly x = Poly::xVar(ring, 1, 1);
    const Poly y = Poly::xVar(ring, 2, 2);
    CHECK(radicalContains(Ideal(ring, {x * x}), x));
    CHECK_FALSE(radicalContains(Ideal(ring, {x * y}), x));
    const Poly det = parsePoly(ring, "x[1,1]*x[2,2] - x[1,2]^2");
    CHECK(radicalContains(Ideal(ring, {det}), det));
    // High powers need the Rabinowitsch route, not just the small-power probe.
    CHECK(radicalContains(Ideal(ring, {x.pow(9)}), x));
}

TEST_CASE("radical containment and equality") {
    auto ring = Ring::make(2, 0, 0, MonomialOrder::Degrevlex);
    const Poly x = Poly::xVar(ring, 1, 1);
    const Poly y = Poly::xVar(ring, 2, 2);
    const Ideal A(ring, {x * x, y});
    const Ideal B(ring, {x, y * y});
    CHECK(radicalEquals(A, B));
    CHECK_FALSE(idealRadicalContains(Ideal(ring, {x}), Ideal(ring, {x, y})));
    const Ideal unit(ring, {Poly::constant(ring, Rational(1))});
    CHECK(idealRadicalContains(unit, Ideal(ring, {x, y})));
    CHECK(idealRadicalContains(unit, Ideal(ring, {})));
}

TEST_CASE("reduced basis is canonical") {
    std::mt19937 rng(5);
    auto ring = Ring::make(2, 0, 1, MonomialOrder::Degrevlex);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Poly> gens;
        const int count = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) gens.push_back(randomPoly(ring, rng));
        const Ideal I(ring, gens);
        const auto base = I.reducedGB();
        // Idempotence: the basis reproduces itself.
        CHECK(buchberger(ring, base) == base);
        // Generator order must not matter.
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::vector<Poly> permuted = gens;
            std::shuffle(permuted.begin(), permuted.end(), rng);
            CHECK(Ideal(ring, permuted).reducedGB() == base);
        }
    }
}

TEST_CASE("reduced basis is canonical under lex too") {
    std::mt19937 rng(13);
    auto ring = Ring::make(1, 0, 2, MonomialOrder::Lex);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Poly> gens = {randomPoly(ring, rng), randomPoly(ring, rng),
                                  randomPoly(ring, rng)};
        const auto base = Ideal(ring, gens).reducedGB();
        CHECK(buchberger(ring, base) == base);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::shuffle(gens.begin(), gens.end(), rng);
            CHECK(Ideal(ring, gens).reducedGB() == base);
        }
    }
}

TEST_CASE("ideal JSON round trip") {
    auto ring = Ring::make(2, 2, 1, MonomialOrder::Lex);
    const Ideal I(ring, {parsePoly(ring, "x[1,1]*y[1,2] - 2*t1"),
                         parsePoly(ring, "1/3*x[2,2]^2 + y[1,2]")});
    const Ideal back = idealFromJson(idealToJson(I));
    CHECK(back.ring()->sameAs(*ring));
    REQUIRE(back.generators().size() == I.generators().size());
    for (std::size_t i = 0; i < I.generators().size(); ++i)
        CHECK(back.generators()[i] == I.generators()[i]);
    CHECK_THROWS_AS(idealFromJson(Json::parse("{\"generators\":[]}")), Error);
}

TEST_CASE("membership soundness against brute force") {
    std::mt19937 rng(17);
    auto ring = Ring::make(1, 0, 2, MonomialOrder::Degrevlex);  // 3 variables
    int radicalHits = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Ideal I(ring, {randomPoly(ring, rng), randomPoly(ring, rng)});
        const Poly f = randomPoly(ring, rng, 2, 2);
        bool bruteForce = false;
        Poly p = Poly::constant(ring, Rational(1));
        for (int n = 1; n <= 8 && !bruteForce; ++n) {
            p = p * f;
            if (normalForm(p, I).isZero()) bruteForce = true;
        }
        const bool viaRabinowitsch = radicalContains(I, f);
        if (bruteForce) {
            CHECK(viaRabinowitsch);
            ++radicalHits;
        }
        if (idealContains(I, f)) CHECK(viaRabinowitsch);
        // A certified member must vanish wherever all generators vanish.
        if (viaRabinowitsch) {
            std::uniform_int_distribution<int> pick(-3, 3);
            for (int attempt = 0; attempt < 30; ++attempt) {
                std::vector<Rational> point;
                for (int v = 0; v < ring->varCount(); ++v) point.emplace_back(pick(rng));
                bool onVariety = true;
                for (const Poly& g : I.generators())
                    if (!isZero(g.evaluate(point))) onVariety = false;
                if (onVariety) CHECK(isZero(f.evaluate(point)));
            }
        }
    }
    CHECK(radicalHits > 0);
}
