#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tca/bounds.hpp"
#include "tca/errors.hpp"
#include "tca/spectrum.hpp"

using namespace tca;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("base cases and bad input") {
    CHECK(etaBound(PolyFunctor::zero(), 3) == 0);
    CHECK(etaBound(PolyFunctor::sym(0), 2) == 0);
    CHECK_THROWS_AS(etaBound(PolyFunctor::sym(2), 0), Error);
    CHECK_THROWS_AS(roughBound(2, 0), Error);
}

TEST_CASE("hand-unwound values of the recursion") {
    // Sym^1, k=2: inner = Sym^0 so eta = 2*1*P(2*0 + 2*1*1) with P(n) = n.
    CHECK(etaBound(PolyFunctor::sym(1), 2) == 4);
    CHECK(etaBound(PolyFunctor::sym(1), 3) == 9);
    // Sym^2, k=1: inner G = Sym^1 + Sym^0 has eta_1(G) = 1*1*(0 + 1*1*2 -> P_G(2)) = 3
    // with P_G(n) = n+1; then eta = 1*2*P(2*3 + 1*2*1) = 2*P(8), P(n) = n(n-1)/2.
    CHECK(etaBound(PolyFunctor::sym(2), 1) == 56);
    // Same recursion at k=2: eta_2(G) = 2*P_G(4) = 10, eta = 4*P(24) = 4*276.
    CHECK(etaBound(PolyFunctor::sym(2), 2) == 1104);
}

TEST_CASE("rough product approximation") {
    CHECK(roughBound(1, 3) == 3);
    CHECK(roughBound(2, 1) == 2);
    CHECK(roughBound(2, 2) == 16);
    CHECK(roughBound(2, 3) == 54);
    CHECK(roughBound(3, 1) == 24);
    CHECK(roughBound(3, 2) == 24576);
    CHECK(roughBound(3, 3) == 1417176);
    CHECK(roughBound(1, 1) == 1);
}

TEST_CASE("termination, depth, and monotonicity in k") {
    for (const Partition& lambda : partitionsUpTo(4)) {
        if (lambda.empty()) continue;
        const PolyFunctor f = PolyFunctor::schur(lambda);
        BigInt previous = -1;
        for (int k = 1; k <= 3; ++k) {
            const EtaResult res = etaBoundWithDepth(f, k);
            CHECK(res.depth <= maxdeg(f));
            CHECK(res.eta >= previous);
            previous = res.eta;
        }
    }
}

TEST_CASE("witness inequality and summand monotonicity") {
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 3; ++k) {
            const PolyFunctor symd = PolyFunctor::sym(d);
            CHECK(etaBound(symd, k) >= d * (k - 1));
            const PolyFunctor bigger = symd.plus(PolyFunctor::wedge(2));
            CHECK(etaBound(bigger, k) >= d * (k - 1));
        }
    }
    const std::vector<PolyFunctor> family = {
        PolyFunctor::sym(1), PolyFunctor::sym(2), PolyFunctor::wedge(2),
        PolyFunctor::schur(P({2, 1})), PolyFunctor::sym(3)};
    for (const auto& e : family) {
        for (const auto& extra : family) {
            for (int k = 1; k <= 3; ++k)
                CHECK(etaBound(e.plus(extra), k) >= etaBound(e, k));
        }
    }
}
