#pragma once

#include <string>

#include "tca/json_io.hpp"

namespace tca {

struct SuiteResult {
    std::string name;
    int checked = 0;
    int failures = 0;
    Json details = Json::object();

    bool passed() const { return failures == 0; }
};

// Graded decomposition of the lambda-ideals on Q^(n|0) against the
// containment lattice, degrees 0..maxDegree.
SuiteResult verifyProp51(int n = 3, int maxDegree = 4, int maxSize = 3);

// Determinantal and Pfaffian radical identities for the 2x2 rectangle.
SuiteResult verifyLemma54();

// Mixed rank locus: the (2,2) rectangle ideal on Q^(2|2) cuts out the
// rank-(1,1) locus up to radical.
SuiteResult verifyRankLoci();

// Symbolic containment lattice vs Groebner radical containment for all
// ordered pairs with |lambda|, |mu| <= maxSize.
SuiteResult verifyBridge(int maxSize = 3, int jobs = 1);

// Veronese kernel: exact reduced-basis match with the rank locus, and no
// false nilpotents among random polynomials outside the kernel.
SuiteResult verifyVeronese(int polyCount = 50, unsigned seed = 7u);

}  // namespace tca
