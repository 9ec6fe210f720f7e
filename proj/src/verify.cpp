#include "tca/verify.hpp"

#include <algorithm>
#include <random>

#include "tca/poly_io.hpp"
#include "tca/spectrum.hpp"

namespace tca {

namespace {

Json partitionJson(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

}  // namespace

SuiteResult verifyProp51(int n, int maxDegree, int maxSize) {
    SuiteResult result;
    result.name = "prop5.1";
    Json mismatches = Json::array();
    const SuperSpace space{n, 0};
    for (const Partition& lambda : partitionsUpTo(maxSize)) {
        const ModelIdeal model = idealLambda(lambda, space);
        for (int d = 0; d <= maxDegree; ++d) {
            std::vector<Partition> expected;
            for (const Partition& mu : partitionsUpTo(d)) {
                if (mu.size() != d || mu.length() > n) continue;
                if (contains(lambda, mu)) expected.push_back(doubled(mu));
            }
            std::sort(expected.begin(), expected.end());
            const std::vector<Partition> got = gradedMultiplicities(model, d);
            ++result.checked;
            if (got != expected) {
                ++result.failures;
                Json entry;
                entry["lambda"] = partitionJson(lambda);
                entry["degree"] = d;
                Json g = Json::array(), e = Json::array();
                for (const auto& p : got) g.push_back(partitionJson(p));
                for (const auto& p : expected) e.push_back(partitionJson(p));
                entry["got"] = g;
                entry["expected"] = e;
                mismatches.push_back(entry);
            }
        }
    }
    result.details["mismatches"] = mismatches;
    return result;
}

SuiteResult verifyLemma54() {
    SuiteResult result;
    result.name = "lemma5.4";

    const Ideal detSquare = idealLambda(Partition::rectangle(2, 2), SuperSpace{3, 0}).ideal;
    const Ideal detLocus = idealLambda(Partition::rectangle(2, 1), SuperSpace{3, 0}).ideal;
    const bool determinantal = radicalEquals(detSquare, detLocus);

    const Ideal pfSquare = idealLambda(Partition::rectangle(2, 2), SuperSpace{0, 4}).ideal;
    RingPtr skewRing = pfSquare.ring();
    const Ideal pfLocus = Ideal(skewRing, {pfaffian(skewRing, {1, 2, 3, 4})});
    const bool pfaffianSide = radicalEquals(pfSquare, pfLocus);

    result.checked = 2;
    result.failures = (determinantal ? 0 : 1) + (pfaffianSide ? 0 : 1);
    result.details["determinantal"] = determinantal;
    result.details["pfaffian"] = pfaffianSide;
    return result;
}

SuiteResult verifyRankLoci() {
    SuiteResult result;
    result.name = "rankloci";
    const SuperSpace space{2, 2};
    const Ideal rect = idealLambda(Partition::rectangle(2, 2), space).ideal;
    const Ideal locus = rankLocusIdeal(1, 1, space);
    const bool equal = radicalEquals(rect, locus);
    result.checked = 1;
    result.failures = equal ? 0 : 1;
    result.details["mixed"] = equal;
    return result;
}

SuiteResult verifyBridge(int maxSize, int jobs) {
    SuiteResult result;
    result.name = "bridge";
    const CrossValidation cv = crossValidate(maxSize, jobs);
    result.checked = static_cast<int>(cv.checks.size());
    result.failures = cv.disagreements;
    Json report = Json::array();
    for (const BridgeCheck& c : cv.checks) {
        Json entry;
        entry["pair"] = Json::array({partitionJson(c.lambda), partitionJson(c.mu)});
        entry["symbolic"] = c.symbolic;
        entry["geometric"] = c.geometric;
        entry["space"] = Json::array({c.space.even, c.space.odd});
        entry["agree"] = c.agree;
        report.push_back(entry);
    }
    result.details["report"] = report;
    return result;
}

SuiteResult verifyVeronese(int polyCount, unsigned seed) {
    SuiteResult result;
    result.name = "veronese";

    const Ideal kernel = veroneseKernel(3);
    const Ideal locus = rankLocusIdeal(1, std::nullopt, SuperSpace{3, 0});
    const bool sameGB = kernel.reducedGB() == locus.reducedGB();
    ++result.checked;
    if (!sameGB) ++result.failures;
    result.details["kernelMatchesRankLocus"] = sameGB;

    // Random polynomials outside the kernel must not be nilpotent on the
    // Veronese cone: the quotient is a domain.
    const RingPtr& ring = kernel.ring();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeffDist(-3, 3);
    std::uniform_int_distribution<int> termCount(1, 4);
    std::uniform_int_distribution<int> varDist(0, ring->varCount() - 1);
    std::uniform_int_distribution<int> degDist(1, 3);
    int falseNilpotents = 0;
    int made = 0;
    while (made < polyCount) {
        std::vector<Term> terms;
        const int tc = termCount(rng);
        for (int t = 0; t < tc; ++t) {
            Monomial m = Monomial::one(ring->varCount());
            const int deg = degDist(rng);
            for (int step = 0; step < deg; ++step) {
                ++m.exps[static_cast<std::size_t>(varDist(rng))];
                ++m.degree;
            }
            int c = coeffDist(rng);
            if (c == 0) c = 1;
            terms.push_back(Term{std::move(m), Rational(c)});
        }
        Poly f = Poly::fromTerms(ring, std::move(terms));
        if (f.isZero() || normalForm(f, kernel).isZero()) continue;
        ++made;
        ++result.checked;
        if (radicalContains(kernel, f)) {
            ++falseNilpotents;
            ++result.failures;
        }
    }
    result.details["polynomials"] = polyCount;
    result.details["falseNilpotents"] = falseNilpotents;
    return result;
}

}  // namespace tca
