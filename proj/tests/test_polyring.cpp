#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tca/errors.hpp"
#include "tca/polarize.hpp"
#include "tca/poly_io.hpp"

using namespace tca;

namespace {

Poly randomPoly(RingPtr ring, std::mt19937& rng, int maxTerms = 5, int maxDeg = 4) {
    std::uniform_int_distribution<int> termCount(0, maxTerms);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
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
        terms.push_back(Term{std::move(m), makeRational(coeff(rng), den(rng))});
    }
    return Poly::fromTerms(std::move(ring), std::move(terms));
}

}  // namespace

TEST_CASE("ring construction and variable counts") {
    CHECK(Ring::make(3, 0, 0, MonomialOrder::Degrevlex)->varCount() == 6);
    CHECK(Ring::make(0, 4, 0, MonomialOrder::Degrevlex)->varCount() == 6);
    CHECK(Ring::make(2, 2, 1, MonomialOrder::Lex)->varCount() == 5);
    auto ring = Ring::make(3, 4, 2, MonomialOrder::Degrevlex);
    for (int v = 0; v < ring->varCount(); ++v) {
        const std::string name = ring->varName(v);
        switch (ring->varKind(v)) {
            case Ring::VarKind::X: {
                const auto [i, j] = ring->varPair(v);
                CHECK(ring->xIndex(i, j) == v);
                break;
            }
            case Ring::VarKind::Y: {
                const auto [a, b] = ring->varPair(v);
                CHECK(ring->yIndex(a, b) == v);
                break;
            }
            case Ring::VarKind::T:
                CHECK(name.front() == 't');
                break;
        }
    }
}

TEST_CASE("parsing and canonical printing") {
    auto ring = Ring::make(2, 2, 0, MonomialOrder::Degrevlex);
    const Poly det = parsePoly(ring, "x[1,1]*x[2,2] - x[1,2]^2");
    CHECK(det == Poly::xVar(ring, 1, 1) * Poly::xVar(ring, 2, 2) -
                     Poly::xVar(ring, 1, 2) * Poly::xVar(ring, 1, 2));
    CHECK(printPoly(parsePoly(ring, "y[2,1]")) == "-y[1,2]");
    CHECK(printPoly(parsePoly(ring, "1/2*x[1,1]^2 + 1/2*x[1,1]^2")) == "x[1,1]^2");
    CHECK(parsePoly(ring, "y[1,1]").isZero());
    CHECK(parsePoly(ring, "x[2,1]") == Poly::xVar(ring, 1, 2));
    CHECK(parsePoly(ring, "0").isZero());
    CHECK(printPoly(Poly::zero(ring)) == "0");
    CHECK(printPoly(parsePoly(ring, " - 2 * x[1 ,2] + 1/3 ")) == "-2*x[1,2] + 1/3");
}

TEST_CASE("parser errors carry positions and codes") {
    auto ring = Ring::make(2, 2, 1, MonomialOrder::Degrevlex);
    const auto codeOf = [&](const std::string& text) {
        try {
            parsePoly(ring, text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    CHECK(codeOf("x[0,1]") == ErrorCode::IndexError);
    CHECK(codeOf("x[1,3]") == ErrorCode::IndexError);
    CHECK(codeOf("x[1]") == ErrorCode::IndexError);
    CHECK(codeOf("t0") == ErrorCode::IndexError);
    CHECK(codeOf("t2") == ErrorCode::IndexError);
    CHECK(codeOf("x[1,1] + ") == ErrorCode::SyntaxError);
    CHECK(codeOf("z") == ErrorCode::SyntaxError);
    CHECK(codeOf("1/0") == ErrorCode::SyntaxError);
    CHECK(codeOf("") == ErrorCode::SyntaxError);
    CHECK(codeOf("2 2") == ErrorCode::SyntaxError);
    try {
        parsePoly(ring, "x[1,1] +\n  z");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("2:3") != std::string::npos);
    }
}

TEST_CASE("round trip on random polynomials") {
    std::mt19937 rng(42);
    for (auto [r, s, a] : {std::tuple{3, 0, 0}, {0, 4, 0}, {2, 2, 1}}) {
        for (auto order : {MonomialOrder::Degrevlex, MonomialOrder::Lex}) {
            auto ring = Ring::make(r, s, a, order);
            for (int it = 0; it < 500; ++it) {
                const Poly f = randomPoly(ring, rng);
                CHECK(parsePoly(ring, printPoly(f)) == f);
            }
        }
    }
}

TEST_CASE("fuzzed input never escapes as anything but Error") {
    std::mt19937 rng(99);
    const std::string alphabet = "xyt[],^*+-/ 0123456789ab\n";
    std::uniform_int_distribution<std::size_t> pickChar(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> pickLen(0, 24);
    auto ring = Ring::make(2, 3, 2, MonomialOrder::Degrevlex);
    int parsed = 0;
    for (int it = 0; it < 2000; ++it) {
        std::string text;
        for (int n = pickLen(rng); n > 0; --n) text += alphabet[pickChar(rng)];
        try {
            const Poly f = parsePoly(ring, text);
            CHECK(parsePoly(ring, printPoly(f)) == f);
            ++parsed;
        } catch (const Error&) {
        }
    }
    CHECK(parsed > 0);
}

TEST_CASE("arithmetic sanity") {
    auto ring = Ring::make(2, 0, 0, MonomialOrder::Degrevlex);
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        const Poly f = randomPoly(ring, rng);
        const Poly g = randomPoly(ring, rng);
        if (!f.isZero() && !g.isZero()) CHECK((f * g).degree() == f.degree() + g.degree());
        CHECK(f * g == g * f);
        CHECK(f + g == g + f);
        CHECK(f - f == Poly::zero(ring));
    }
    auto other = Ring::make(3, 0, 0, MonomialOrder::Degrevlex);
    CHECK_THROWS_AS(randomPoly(ring, rng) + randomPoly(other, rng), Error);
}

TEST_CASE("substitution homomorphisms") {
    auto ring = Ring::make(2, 0, 0, MonomialOrder::Degrevlex);
    const Poly x11 = Poly::xVar(ring, 1, 1);
    CHECK(x11.substHom({{ring->xIndex(1, 1), Poly::zero(ring)}}, ring).isZero());

    const Poly det = parsePoly(ring, "x[1,1]*x[2,2] - x[1,2]^2");
    std::map<int, Poly> identity;
    for (int v = 0; v < ring->varCount(); ++v) identity.emplace(v, Poly::variable(ring, v));
    CHECK(det.substHom(identity, ring) == det);

    std::mt19937 rng(11);
    std::map<int, Poly> images;
    for (int v = 0; v < ring->varCount(); ++v) images.emplace(v, randomPoly(ring, rng, 3, 2));
    for (int it = 0; it < 50; ++it) {
        const Poly f = randomPoly(ring, rng, 3, 3);
        const Poly g = randomPoly(ring, rng, 3, 3);
        CHECK((f * g).substHom(images, ring) ==
              f.substHom(images, ring) * g.substHom(images, ring));
        CHECK((f + g).substHom(images, ring) ==
              f.substHom(images, ring) + g.substHom(images, ring));
    }
}

TEST_CASE("polarization tables") {
    auto ring1 = Ring::make(1, 0, 0, MonomialOrder::Degrevlex);
    const Poly x = Poly::xVar(ring1, 1, 1);
    const Polarization bilinear = Polarization::of(x, 2);
    CHECK(bilinear.restitutionFactor() == 1);
    CHECK(bilinear.value({1, 1}) == 1);
    CHECK(bilinear.restitute() == x);

    auto ring2 = Ring::make(2, 0, 0, MonomialOrder::Degrevlex);
    const Poly det = parsePoly(ring2, "x[1,1]*x[2,2] - x[1,2]^2");
    const Polarization quad = Polarization::of(det, 4);
    CHECK(quad.restitutionFactor() == 2);
    CHECK(quad.restitute() == det.scaled(Rational(2)));
    for (const auto& [tuple, coeff] : quad.table()) {
        std::vector<int> swapped = {tuple[1], tuple[0], tuple[2], tuple[3]};
        CHECK(quad.value(swapped) == coeff);
        std::vector<int> exchanged = {tuple[2], tuple[3], tuple[0], tuple[1]};
        CHECK(quad.value(exchanged) == coeff);
    }

    CHECK_THROWS_AS(Polarization::of(Poly::constant(ring2, Rational(3)), 2), Error);
    CHECK_THROWS_AS(Polarization::of(det + Poly::xVar(ring2, 1, 1), 4), Error);
}
