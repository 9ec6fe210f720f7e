#include "tca/bounds.hpp"

#include <map>
#include <mutex>

#include "tca/errors.hpp"

namespace tca {

namespace {

std::mutex memoMutex;
std::map<std::pair<std::string, int>, EtaResult> memo;

}  // namespace

EtaResult etaBoundWithDepth(const PolyFunctor& e, int k) {
    if (k < 1) fail(ErrorCode::BadExponent, "nilpotency exponent must be at least 1");
    if (e.isZero() || maxdeg(e) == 0) return EtaResult{0, 0};

    const std::pair<std::string, int> key{e.toText(), k};
    {
        std::lock_guard<std::mutex> lock(memoMutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const int d = maxdeg(e);
    PolyFunctor inner;
    for (const auto& [weight, part] : shiftDecompose(e))
        if (weight >= 1) inner = inner.plus(part);
    const EtaResult innerResult = etaBoundWithDepth(inner, k);

    const BigInt dimC = functorDim(e, SuperSpace{1, 0});
    const BigInt argument = BigInt(d) * innerResult.eta + BigInt(k) * BigInt(d) * dimC;
    EtaResult result{BigInt(k) * BigInt(d) * functorDimOdd(e, argument),
                     innerResult.depth + 1};

    std::lock_guard<std::mutex> lock(memoMutex);
    return memo.try_emplace(key, result).first->second;
}

BigInt etaBound(const PolyFunctor& e, int k) { return etaBoundWithDepth(e, k).eta; }

BigInt roughBound(int d, int k) {
    if (k < 1) fail(ErrorCode::BadExponent, "nilpotency exponent must be at least 1");
    // d!/1! already overflows the exponent type past 20, and the value would
    // have ~10^19 digits anyway.
    if (d > 20) fail(ErrorCode::BadExponent, "degree too large for the rough product");
    BigInt out = 1;
    for (int i = 1; i <= d; ++i) {
        unsigned long exp = 1;
        for (int j = i + 1; j <= d; ++j) exp *= static_cast<unsigned long>(j);
        out *= power(BigInt(i) * BigInt(k), exp);
    }
    return out;
}

}  // namespace tca
