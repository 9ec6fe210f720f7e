#include "tca/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "tca/errors.hpp"

namespace tca {

GLIdeal GLIdeal::zero() { return GLIdeal(); }

GLIdeal GLIdeal::unit() {
    GLIdeal j;
    j.kind_ = Kind::Unit;
    return j;
}

GLIdeal GLIdeal::generated(Partition lambda) {
    if (lambda.empty()) return unit();
    GLIdeal j;
    j.kind_ = Kind::Generated;
    j.lambdas_.push_back(std::move(lambda));
    return j;
}

GLIdeal GLIdeal::sum(std::vector<Partition> lambdas) {
    // I_lambda + I_mu collapses to I_mu when mu is inside lambda, and the
    // empty shape generates the whole ring.
    for (const Partition& l : lambdas)
        if (l.empty()) return unit();
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    std::vector<Partition> minimal;
    for (const Partition& l : lambdas) {
        bool redundant = false;
        for (const Partition& m : lambdas)
            if (m != l && contains(m, l)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(l);
    }
    if (minimal.empty()) return zero();
    GLIdeal j;
    j.kind_ = minimal.size() == 1 ? Kind::Generated : Kind::Sum;
    j.lambdas_ = std::move(minimal);
    return j;
}

const Partition& GLIdeal::partition() const {
    if (kind_ != Kind::Generated)
        fail(ErrorCode::Internal, "not a singly generated GL-ideal");
    return lambdas_.front();
}

std::string GLIdeal::toText() const {
    switch (kind_) {
        case Kind::Zero: return "0";
        case Kind::Unit: return "(1)";
        case Kind::Generated: return "I(" + lambdas_.front().toText() + ")";
        default: {
            std::string out = "I(" + lambdas_.front().toText() + ")";
            for (std::size_t i = 1; i < lambdas_.size(); ++i)
                out += "+I(" + lambdas_[i].toText() + ")";
            return out;
        }
    }
}

std::string SpectrumPoint::toText() const {
    if (infinite) return "inf";
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

bool posetLe(const SpectrumPoint& p, const SpectrumPoint& q) {
    if (q.infinite) return true;
    if (p.infinite) return false;
    return p.r <= q.r && p.s <= q.s;
}

bool inClosure(const SpectrumPoint& q, const SpectrumPoint& p) { return posetLe(q, p); }

bool isGLPrime(const GLIdeal& ideal) {
    switch (ideal.kind()) {
        case GLIdeal::Kind::Zero: return true;
        case GLIdeal::Kind::Unit: return false;
        case GLIdeal::Kind::Generated: return corners(ideal.partition()).size() == 1;
        default: return false;
    }
}

bool glContains(const GLIdeal& J, const GLIdeal& K) {
    if (J.kind() == GLIdeal::Kind::Zero) return true;
    if (K.kind() == GLIdeal::Kind::Unit) return true;
    if (J.kind() == GLIdeal::Kind::Unit) return false;
    if (K.kind() == GLIdeal::Kind::Zero) return false;
    // I_lambda sits inside a sum iff it sits inside one summand.
    for (const Partition& lambda : J.summands()) {
        bool inside = false;
        for (const Partition& mu : K.summands())
            if (contains(mu, lambda)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

GLIdeal glRadical(const GLIdeal& ideal) {
    if (ideal.kind() != GLIdeal::Kind::Sum) return ideal;
    Partition meet = ideal.summands().front();
    for (std::size_t i = 1; i < ideal.summands().size(); ++i)
        meet = intersect(meet, ideal.summands()[i]);
    return GLIdeal::generated(std::move(meet));
}

std::vector<SpectrumPoint> minimalGLPrimes(const GLIdeal& ideal) {
    if (ideal.kind() == GLIdeal::Kind::Unit)
        fail(ErrorCode::UnitIdeal, "the unit ideal has no minimal GL-primes");
    if (ideal.kind() == GLIdeal::Kind::Zero) return {SpectrumPoint::infinity()};
    const GLIdeal rad = glRadical(ideal);
    std::vector<SpectrumPoint> out;
    for (const auto& [r, s] : corners(rad.partition())) out.push_back(SpectrumPoint::at(r, s));
    return out;
}

SpectrumPoint specPoint(const GLIdeal& prime) {
    if (prime.kind() == GLIdeal::Kind::Zero) return SpectrumPoint::infinity();
    if (prime.kind() == GLIdeal::Kind::Generated) {
        const Partition& lambda = prime.partition();
        if (corners(lambda).size() == 1)
            return SpectrumPoint::at(lambda.length() - 1, lambda.width() - 1);
    }
    fail(ErrorCode::NotPrime, "spectrum points index the GL-primes only");
}

Ideal evaluate(const GLIdeal& ideal, SuperSpace v) {
    RingPtr ring = Ring::make(v.even, v.odd, 0, MonomialOrder::Degrevlex);
    switch (ideal.kind()) {
        case GLIdeal::Kind::Zero: return Ideal(ring, {});
        case GLIdeal::Kind::Unit: return Ideal(ring, {Poly::constant(ring, Rational(1))});
        default: {
            std::vector<Poly> gens;
            for (const Partition& lambda : ideal.summands()) {
                ModelIdeal part = idealLambda(lambda, v);
                for (const Poly& g : part.ideal.generators()) gens.push_back(g);
            }
            return Ideal(ring, std::move(gens));
        }
    }
}

bool geometricRadicalContains(const GLIdeal& J, const GLIdeal& K, SuperSpace v) {
    return idealRadicalContains(evaluate(K, v), evaluate(J, v));
}

bool nilpotentAt(const Poly& f, const GLIdeal& J, SuperSpace v) {
    return radicalContains(evaluate(J, v), f);
}

namespace {

void partitionsOfSize(int size, int maxPart, std::vector<int>& acc,
                      std::vector<Partition>& out) {
    if (size == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(size, maxPart); p >= 1; --p) {
        acc.push_back(p);
        partitionsOfSize(size - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitionsUpTo(int maxSize) {
    std::vector<Partition> out;
    for (int k = 0; k <= maxSize; ++k) {
        std::vector<int> acc;
        partitionsOfSize(k, k, acc, out);
    }
    return out;
}

SuperSpace bridgeSpace(const Partition& lambda, const Partition& mu) {
    if (mu.empty() || lambda.empty()) return SuperSpace{1, 2};
    const bool symbolicTrue = contains(mu, lambda);
    const auto cs = corners(mu);
    if (symbolicTrue) return SuperSpace{mu.length(), 2 * mu.width()};
    // Cheapest witnessing corner: rho(p,q) not inside lambda, with the even
    // block enlarged until the lambda-ideal survives on the space.
    SuperSpace best{0, 0};
    long bestVars = -1;
    for (const auto& [p, q] : cs) {
        if (contains(Partition::rectangle(p, q), lambda)) continue;
        int rr = p;
        while (lambda.part(rr + 1) > q) ++rr;
        const int ss = 2 * q;
        const long vars = static_cast<long>(rr) * (rr + 1) / 2 +
                          static_cast<long>(ss) * (ss - 1) / 2;
        if (bestVars < 0 || vars < bestVars) {
            bestVars = vars;
            best = SuperSpace{rr, ss};
        }
    }
    if (bestVars < 0)
        fail(ErrorCode::Internal, "no witnessing corner for a false containment");
    return best;
}

BridgeCheck crossValidatePair(const Partition& lambda, const Partition& mu) {
    BridgeCheck check;
    check.lambda = lambda;
    check.mu = mu;
    check.symbolic = glContains(GLIdeal::generated(lambda), GLIdeal::generated(mu));
    check.space = bridgeSpace(lambda, mu);
    check.geometric = geometricRadicalContains(GLIdeal::generated(lambda),
                                               GLIdeal::generated(mu), check.space);
    check.agree = check.symbolic == check.geometric;
    return check;
}

GLBridgeCheck crossValidatePair(const GLIdeal& J, const GLIdeal& K) {
    GLBridgeCheck check;
    check.symbolic = glContains(J, glRadical(K));
    if (J.kind() == GLIdeal::Kind::Zero || K.kind() == GLIdeal::Kind::Unit) {
        check.space = SuperSpace{1, 2};
    } else if (K.kind() == GLIdeal::Kind::Zero) {
        // rad(0) is zero in the reduced ring; pick a space where J survives.
        int rows = 1;
        if (J.kind() != GLIdeal::Kind::Unit)
            for (const Partition& lambda : J.summands())
                rows = std::max(rows, lambda.length());
        check.space = SuperSpace{rows, 0};
    } else if (J.kind() == GLIdeal::Kind::Unit) {
        const Partition mu = glRadical(K).partition();
        check.space = SuperSpace{mu.length(), 2 * mu.width()};
    } else {
        const Partition mu = glRadical(K).partition();
        check.space = SuperSpace{mu.length(), 2 * mu.width()};
        if (!check.symbolic) {
            // The first failing summand supplies the witnessing corner.
            for (const Partition& lambda : J.summands()) {
                if (!contains(mu, lambda)) {
                    check.space = bridgeSpace(lambda, mu);
                    break;
                }
            }
        }
    }
    check.geometric = geometricRadicalContains(J, K, check.space);
    check.agree = check.symbolic == check.geometric;
    return check;
}

CrossValidation crossValidate(int maxSize, int jobs) {
    const std::vector<Partition> shapes = partitionsUpTo(maxSize);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const Partition& lambda : shapes)
        for (const Partition& mu : shapes) pairs.emplace_back(lambda, mu);

    CrossValidation result;
    result.checks.resize(pairs.size());

    // Shared evaluations so each (mu, V) Groebner basis is computed once.
    std::map<std::pair<Partition, std::pair<int, int>>, Ideal> cache;
    std::mutex cacheMutex;
    const auto evaluateCached = [&](const Partition& lambda, SuperSpace v) {
        const auto key = std::make_pair(lambda, std::make_pair(v.even, v.odd));
        {
            std::lock_guard<std::mutex> lock(cacheMutex);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        Ideal ideal = idealLambda(lambda, v).ideal;
        std::lock_guard<std::mutex> lock(cacheMutex);
        return cache.try_emplace(key, std::move(ideal)).first->second;
    };

    const auto runOne = [&](std::size_t idx) {
        const auto& [lambda, mu] = pairs[idx];
        BridgeCheck check;
        check.lambda = lambda;
        check.mu = mu;
        check.symbolic = glContains(GLIdeal::generated(lambda), GLIdeal::generated(mu));
        check.space = bridgeSpace(lambda, mu);
        const Ideal radicalSide = evaluateCached(mu, check.space);
        const Ideal memberSide = evaluateCached(lambda, check.space);
        check.geometric = idealRadicalContains(radicalSide, memberSide);
        check.agree = check.symbolic == check.geometric;
        result.checks[idx] = check;
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) runOne(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const int count = std::min<int>(jobs, static_cast<int>(pairs.size()));
        for (int t = 0; t < count; ++t)
            workers.emplace_back([&]() {
                while (true) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= pairs.size()) return;
                    runOne(idx);
                }
            });
        for (auto& w : workers) w.join();
    }

    for (const BridgeCheck& c : result.checks)
        if (!c.agree) ++result.disagreements;
    return result;
}

}  // namespace tca
