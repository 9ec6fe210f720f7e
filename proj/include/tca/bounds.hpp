#pragma once

#include "tca/functor.hpp"

namespace tca {

struct EtaResult {
    BigInt eta;
    int depth = 0;  // recursion depth, at most the degree
};

// Effective degree bound for algebras generated by a copy of E whose
// nonzero-weight generators are k-nilpotent:
//   eta_k(E) = k*d*P(d*eta_k(E'_1 + ... + E'_d) + k*d*dim E(Q^(1|0)))
// with P(n) = dim E(Q^(0|n)) and E'_i the positive shift weights; zero for
// degree-0 or zero functors. BadExponent when k < 1.
EtaResult etaBoundWithDepth(const PolyFunctor& e, int k);
BigInt etaBound(const PolyFunctor& e, int k);

// prod_{i=1..d} (i*k)^(d!/i!), exactly.
BigInt roughBound(int d, int k);

}  // namespace tca
