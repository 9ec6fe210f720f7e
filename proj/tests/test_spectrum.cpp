#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tca/errors.hpp"
#include "tca/spectrum.hpp"

using namespace tca;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("GL-primality") {
    CHECK(isGLPrime(GLIdeal::generated(P({2, 2}))));
    CHECK_FALSE(isGLPrime(GLIdeal::generated(P({2, 1}))));
    CHECK(isGLPrime(GLIdeal::zero()));
    CHECK_FALSE(isGLPrime(GLIdeal::unit()));
    CHECK_FALSE(isGLPrime(GLIdeal::sum({P({3}), P({1, 1, 1})})));
    for (const Partition& lambda : partitionsUpTo(12)) {
        if (lambda.empty()) continue;
        CHECK(isGLPrime(GLIdeal::generated(lambda)) == (corners(lambda).size() == 1));
    }
}

TEST_CASE("lattice containment") {
    CHECK(glContains(GLIdeal::generated(P({3, 1})), GLIdeal::generated(P({2, 1}))));
    CHECK_FALSE(glContains(GLIdeal::generated(P({2, 2})), GLIdeal::generated(P({3, 1}))));
    CHECK(glContains(GLIdeal::zero(), GLIdeal::generated(P({5}))));
    CHECK(glContains(GLIdeal::generated(P({5})), GLIdeal::unit()));
    CHECK_FALSE(glContains(GLIdeal::unit(), GLIdeal::generated(P({1}))));
    CHECK(glContains(GLIdeal::generated(P({3, 2})),
                     GLIdeal::sum({P({2, 2}), P({3, 1})})));
}

TEST_CASE("sums canonicalize to antichains") {
    // I_(2,1) swallows both of the larger shapes.
    CHECK(GLIdeal::sum({P({3, 1}), P({2, 1}), P({2, 2})}) == GLIdeal::generated(P({2, 1})));
    const GLIdeal s = GLIdeal::sum({P({3, 1}), P({2, 2}), P({3, 3})});
    CHECK(s.kind() == GLIdeal::Kind::Sum);
    CHECK(s.summands() == std::vector<Partition>{P({2, 2}), P({3, 1})});
    CHECK(GLIdeal::sum({P({2, 1}), P({2, 1})}) == GLIdeal::generated(P({2, 1})));
    CHECK(GLIdeal::sum({}) == GLIdeal::zero());
    CHECK(GLIdeal::sum({Partition()}) == GLIdeal::unit());
}

TEST_CASE("GL-radicals") {
    CHECK(glRadical(GLIdeal::sum({P({3, 1}), P({2, 2})})) == GLIdeal::generated(P({2, 1})));
    CHECK(glRadical(GLIdeal::generated(P({2, 1}))) == GLIdeal::generated(P({2, 1})));
    CHECK(glRadical(GLIdeal::zero()) == GLIdeal::zero());
    CHECK(glRadical(GLIdeal::unit()) == GLIdeal::unit());
    // Idempotent and monotone on random sums.
    std::mt19937 rng(9);
    const auto shapes = partitionsUpTo(6);
    std::uniform_int_distribution<std::size_t> pick(1, shapes.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const GLIdeal a = GLIdeal::sum({shapes[pick(rng)], shapes[pick(rng)]});
        const GLIdeal b = GLIdeal::sum({shapes[pick(rng)], shapes[pick(rng)], shapes[pick(rng)]});
        CHECK(glRadical(glRadical(a)) == glRadical(a));
        CHECK(glContains(a, glRadical(a)));
        if (glContains(a, b)) CHECK(glContains(glRadical(a), glRadical(b)));
    }
}

TEST_CASE("the sum radical matches the Groebner oracle at (3|2)") {
    const SuperSpace v{3, 2};
    const Ideal summed = evaluate(GLIdeal::sum({P({3, 1}), P({2, 2})}), v);
    const Ideal meet = evaluate(GLIdeal::generated(P({2, 1})), v);
    CHECK(radicalEquals(summed, meet));
}

TEST_CASE("minimal GL-primes") {
    const auto points = minimalGLPrimes(GLIdeal::generated(P({2, 1})));
    CHECK(points == std::vector<SpectrumPoint>{SpectrumPoint::at(1, 2), SpectrumPoint::at(2, 1)});
    CHECK(minimalGLPrimes(GLIdeal::generated(Partition::rectangle(2, 3))) ==
          std::vector<SpectrumPoint>{SpectrumPoint::at(2, 3)});
    CHECK(minimalGLPrimes(GLIdeal::zero()) ==
          std::vector<SpectrumPoint>{SpectrumPoint::infinity()});
    CHECK_THROWS_AS(minimalGLPrimes(GLIdeal::unit()), Error);
}

TEST_CASE("minimal primes are incomparable and reconstruct the radical") {
    std::mt19937 rng(31);
    const auto shapes = partitionsUpTo(8);
    std::uniform_int_distribution<std::size_t> pick(1, shapes.size() - 1);
    std::uniform_int_distribution<int> howMany(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Partition> parts;
        for (int i = 0, n = howMany(rng); i < n; ++i) parts.push_back(shapes[pick(rng)]);
        const GLIdeal J = GLIdeal::sum(parts);
        const auto points = minimalGLPrimes(J);
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = 0; j < points.size(); ++j)
                if (i != j) CHECK_FALSE(posetLe(points[i], points[j]));
        Partition rebuilt;
        for (const auto& p : points)
            rebuilt = unite(rebuilt, Partition::rectangle(p.r, p.s));
        CHECK(GLIdeal::generated(rebuilt) == glRadical(J));
    }
}

TEST_CASE("poset and spectrum points") {
    CHECK(posetLe(SpectrumPoint::at(1, 0), SpectrumPoint::at(1, 1)));
    CHECK_FALSE(posetLe(SpectrumPoint::at(2, 0), SpectrumPoint::at(1, 5)));
    CHECK(posetLe(SpectrumPoint::at(7, 7), SpectrumPoint::infinity()));
    CHECK_FALSE(posetLe(SpectrumPoint::infinity(), SpectrumPoint::at(7, 7)));
    int closure = 0;
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s)
            if (inClosure(SpectrumPoint::at(r, s), SpectrumPoint::at(1, 1))) ++closure;
    CHECK(closure == 4);

    CHECK(specPoint(GLIdeal::generated(Partition::rectangle(2, 3))) == SpectrumPoint::at(1, 2));
    CHECK(specPoint(GLIdeal::zero()) == SpectrumPoint::infinity());
    CHECK_THROWS_AS(specPoint(GLIdeal::generated(P({2, 1}))), Error);
}

TEST_CASE("nilpotence tests at concrete spaces") {
    auto ring = Ring::make(2, 0, 0, MonomialOrder::Degrevlex);
    const Poly x11 = Poly::xVar(ring, 1, 1);
    CHECK(nilpotentAt(x11, GLIdeal::generated(P({1})), SuperSpace{2, 0}));
    CHECK_FALSE(nilpotentAt(x11, GLIdeal::zero(), SuperSpace{2, 0}));
    // The radical of the (2,2) rectangle ideal on Q^3 is the (2,1) one, so
    // containment holds in both directions there.
    CHECK(geometricRadicalContains(GLIdeal::generated(P({2, 2})),
                                   GLIdeal::generated(P({1, 1})), SuperSpace{3, 0}));
    CHECK(geometricRadicalContains(GLIdeal::generated(P({1, 1})),
                                   GLIdeal::generated(P({2, 2})), SuperSpace{3, 0}));
}

TEST_CASE("bridge for symbolic ideal pairs") {
    const GLIdeal sum = GLIdeal::sum({P({3, 1}), P({2, 2})});
    const auto same = crossValidatePair(sum, sum);
    CHECK(same.symbolic);
    CHECK(same.agree);
    // A proper ideal never sits inside rad(0) of the reduced model.
    const auto vsZero = crossValidatePair(GLIdeal::generated(P({2, 2})), GLIdeal::zero());
    CHECK_FALSE(vsZero.symbolic);
    CHECK(vsZero.agree);
    // The GL-radical of this sum is strictly larger than the sum, so the
    // geometric side must find actual powers.
    const auto radicalOfSum = crossValidatePair(GLIdeal::generated(P({2, 1})), sum);
    CHECK(radicalOfSum.symbolic);
    CHECK(radicalOfSum.agree);
    CHECK(crossValidatePair(GLIdeal::zero(), sum).agree);
    CHECK(crossValidatePair(sum, GLIdeal::unit()).agree);
    CHECK(crossValidatePair(GLIdeal::unit(), sum).agree);
}

TEST_CASE("bridge pairs at desk scale") {
    // One true and one false containment, checked geometrically.
    const BridgeCheck tt = crossValidatePair(P({2, 2}), P({2, 1}));
    CHECK(tt.symbolic);
    CHECK(tt.agree);
    const BridgeCheck ff = crossValidatePair(P({1, 1}), P({2}));
    CHECK_FALSE(ff.symbolic);
    CHECK(ff.agree);
    const CrossValidation cv = crossValidate(2);
    CHECK(cv.disagreements == 0);
    CHECK(static_cast<int>(cv.checks.size()) == 16);
}
