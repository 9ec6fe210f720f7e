#include <algorithm>
#include <map>
#include <set>

#include "tca/errors.hpp"
#include "tca/ideal.hpp"

namespace tca {

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : data_(std::make_shared<Data>()) {
    data_->ring = std::move(ring);
    for (auto& g : generators) {
        if (g.isZero()) continue;
        if (!g.ring()->sameAs(*data_->ring))
            fail(ErrorCode::RingMismatch, "generator lives in a different ring");
        data_->gens.push_back(std::move(g));
    }
}

const std::vector<Poly>& Ideal::reducedGB() const {
    std::lock_guard<std::mutex> lock(data_->mutex);
    if (!data_->gb) data_->gb = buchberger(data_->ring, data_->gens);
    return *data_->gb;
}

bool Ideal::isUnit() const {
    const auto& gb = reducedGB();
    return gb.size() == 1 && gb.front().isConstant();
}

Poly normalFormAgainst(const Poly& f, const std::vector<Poly>& basis) {
    Poly work = f;
    std::vector<Term> out;
    while (!work.isZero()) {
        const Term lead = work.terms().front();
        const Poly* reducer = nullptr;
        for (const Poly& g : basis) {
            if (dividesMono(g.leadingMono(), lead.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            const Monomial shift = divMono(lead.mono, reducer->leadingMono());
            const Rational scale = lead.coeff / reducer->leadingCoeff();
            work = work - reducer->mulTerm(shift, scale);
        } else {
            out.push_back(lead);
            work = Poly::fromSortedTerms(
                work.ring(), std::vector<Term>(work.terms().begin() + 1, work.terms().end()));
        }
    }
    return Poly::fromSortedTerms(f.ring(), std::move(out));
}

namespace {

struct PairEntry {
    int i, j;
    Monomial lcm;
};

struct PairLess {
    const Ring* ring;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
        if (a.lcm.degree != b.lcm.degree) return a.lcm.degree < b.lcm.degree;
        const auto cmp = ring->monoCompare(a.lcm, b.lcm);
        if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

Poly sPoly(const Poly& f, const Poly& g, const Monomial& lcm) {
    const Monomial mf = divMono(lcm, f.leadingMono());
    const Monomial mg = divMono(lcm, g.leadingMono());
    return f.mulTerm(mf, g.leadingCoeff()) - g.mulTerm(mg, f.leadingCoeff());
}

std::vector<Poly> interReduce(RingPtr ring, std::vector<Poly> basis) {
    // Drop elements whose leading monomial is divisible by another's. A
    // proper divisor is smaller in any monomial order, so ascending order
    // makes one pass sufficient.
    std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
        return ring->monoCompare(a.leadingMono(), b.leadingMono()) == std::strong_ordering::less;
    });
    std::vector<Poly> minimal;
    for (const Poly& g : basis) {
        bool redundant = false;
        for (const Poly& h : minimal) {
            if (dividesMono(h.leadingMono(), g.leadingMono())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    std::vector<Poly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Poly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        Poly r = normalFormAgainst(minimal[k], others);
        if (!r.isZero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ring->monoCompare(a.leadingMono(), b.leadingMono()) ==
               std::strong_ordering::greater;
    });
    return reduced;
}

}  // namespace

std::vector<Poly> buchberger(RingPtr ring, std::vector<Poly> gens, std::size_t knownGBPrefix) {
    std::vector<Poly> basis;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const Poly& g = gens[k];
        if (g.isZero()) {
            if (k < knownGBPrefix)
                fail(ErrorCode::Internal, "zero element in known Groebner prefix");
            continue;
        }
        Poly p = g.primitive();
        if (p.isConstant()) return {Poly::constant(ring, Rational(1))};
        basis.push_back(std::move(p));
    }
    const std::size_t prefix = std::min(knownGBPrefix, basis.size());

    std::set<PairEntry, PairLess> queue{PairLess{ring.get()}};
    // treated[i] holds the j-partners whose pair has been handled or skipped.
    std::vector<std::set<int>> treated(basis.size());
    auto markTreated = [&](int i, int j) {
        treated[static_cast<std::size_t>(i)].insert(j);
        treated[static_cast<std::size_t>(j)].insert(i);
    };
    auto isTreated = [&](int i, int j) {
        return treated[static_cast<std::size_t>(i)].count(j) > 0;
    };
    auto pushPair = [&](int i, int j) {
        queue.insert(PairEntry{i, j, lcmMono(basis[static_cast<std::size_t>(i)].leadingMono(),
                                             basis[static_cast<std::size_t>(j)].leadingMono())});
    };
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (j < prefix) {
                markTreated(static_cast<int>(i), static_cast<int>(j));
                continue;
            }
            pushPair(static_cast<int>(i), static_cast<int>(j));
        }

    while (!queue.empty()) {
        const PairEntry pair = *queue.begin();
        queue.erase(queue.begin());
        markTreated(pair.i, pair.j);
        const Poly& f = basis[static_cast<std::size_t>(pair.i)];
        const Poly& g = basis[static_cast<std::size_t>(pair.j)];
        if (coprimeMono(f.leadingMono(), g.leadingMono())) continue;
        bool chained = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const int ki = static_cast<int>(k);
            if (ki == pair.i || ki == pair.j) continue;
            if (dividesMono(basis[k].leadingMono(), pair.lcm) && isTreated(pair.i, ki) &&
                isTreated(pair.j, ki)) {
                chained = true;
                break;
            }
        }
        if (chained) continue;
        Poly r = normalFormAgainst(sPoly(f, g, pair.lcm), basis);
        if (r.isZero()) continue;
        r = r.primitive();
        if (r.isConstant()) return {Poly::constant(ring, Rational(1))};
        basis.push_back(std::move(r));
        treated.emplace_back();
        const int fresh = static_cast<int>(basis.size()) - 1;
        for (int k = 0; k < fresh; ++k) pushPair(k, fresh);
    }

    return interReduce(ring, std::move(basis));
}

Poly normalForm(const Poly& f, const Ideal& ideal) {
    if (!f.ring()->sameAs(*ideal.ring()))
        fail(ErrorCode::RingMismatch, "polynomial and ideal rings differ");
    return normalFormAgainst(f, ideal.reducedGB());
}

bool idealContains(const Ideal& ideal, const Poly& f) {
    return normalForm(f, ideal).isZero();
}

bool radicalContains(const Ideal& ideal, const Poly& f) {
    if (!f.ring()->sameAs(*ideal.ring()))
        fail(ErrorCode::RingMismatch, "polynomial and ideal rings differ");
    if (f.isZero()) return true;
    const auto& gb = ideal.reducedGB();
    if (!gb.empty() && gb.front().isConstant()) return true;
    // Small powers certify membership cheaply before the full Rabinowitsch run.
    Poly p = f;
    for (int n = 1; n <= 4; ++n) {
        if (normalFormAgainst(p, gb).isZero()) return true;
        if (n == 4 || p.terms().size() > 4000) break;
        p = p * f;
    }
    const RingPtr& r = ideal.ring();
    RingPtr extended = Ring::make(r->symDim(), r->skewDim(), r->auxVars() + 1, r->order());
    std::vector<Poly> gens;
    gens.reserve(gb.size() + 1);
    for (const Poly& g : gb) gens.push_back(g.liftTo(extended));
    const Poly t = Poly::tVar(extended, extended->auxVars());
    gens.push_back(Poly::constant(extended, Rational(1)) - t * f.liftTo(extended));
    const std::vector<Poly> result = buchberger(extended, std::move(gens), gb.size());
    return result.size() == 1 && result.front().isConstant();
}

bool idealRadicalContains(const Ideal& I, const Ideal& J) {
    if (!I.ring()->sameAs(*J.ring()))
        fail(ErrorCode::RingMismatch, "ideals live in different rings");
    for (const Poly& g : J.generators())
        if (!radicalContains(I, g)) return false;
    return true;
}

bool radicalEquals(const Ideal& I, const Ideal& J) {
    return idealRadicalContains(I, J) && idealRadicalContains(J, I);
}

}  // namespace tca
