#include "tca/polarize.hpp"

#include <algorithm>
#include <numeric>

#include "tca/errors.hpp"

namespace tca {

namespace {

// Multiset of symmetric pairs (i,j) of one x-monomial, repeated per exponent.
std::vector<std::pair<int, int>> pairsOfMonomial(const Ring& ring, const Monomial& m) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        if (m.exps[v] == 0) continue;
        if (ring.varKind(static_cast<int>(v)) != Ring::VarKind::X)
            fail(ErrorCode::NotHomogeneous, "polarization needs a pure x-polynomial");
        for (unsigned e = 0; e < m.exps[v]; ++e)
            pairs.push_back(ring.varPair(static_cast<int>(v)));
    }
    return pairs;
}

}  // namespace

Polarization Polarization::of(const Poly& f, int slots) {
    Polarization out;
    out.ring_ = f.ring();
    out.slots_ = slots;
    if (f.isZero() || slots <= 0 || slots % 2 != 0)
        fail(ErrorCode::NotHomogeneous, "need a nonzero polynomial and a positive even slot count");
    const int d = slots / 2;
    out.factor_ = factorial(static_cast<unsigned long>(d));
    const Rational half = makeRational(1, 2);
    for (const Term& t : f.terms()) {
        const auto pairs = pairsOfMonomial(*f.ring(), t.mono);
        if (static_cast<int>(pairs.size()) != d)
            fail(ErrorCode::NotHomogeneous,
                 "polynomial is not homogeneous of degree " + std::to_string(d));
        Rational weight = t.coeff;
        for (int p = 0; p < d; ++p) weight *= half;
        std::vector<int> order(pairs.size());
        std::iota(order.begin(), order.end(), 0);
        // Sum over all orderings of the pair slots and both orientations of
        // each pair.
        do {
            for (unsigned mask = 0; mask < (1u << d); ++mask) {
                std::vector<int> tuple(static_cast<std::size_t>(slots));
                for (int p = 0; p < d; ++p) {
                    const auto& pr = pairs[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
                    const bool flip = (mask >> p) & 1u;
                    tuple[static_cast<std::size_t>(2 * p)] = flip ? pr.second : pr.first;
                    tuple[static_cast<std::size_t>(2 * p + 1)] = flip ? pr.first : pr.second;
                }
                out.table_[tuple] += weight;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    for (auto it = out.table_.begin(); it != out.table_.end();)
        it = isZero(it->second) ? out.table_.erase(it) : std::next(it);
    return out;
}

Rational Polarization::value(const std::vector<int>& tuple) const {
    auto it = table_.find(tuple);
    return it == table_.end() ? Rational(0) : it->second;
}

Poly Polarization::restitute() const {
    Poly total = Poly::zero(ring_);
    for (const auto& [tuple, coeff] : table_) {
        Poly prod = Poly::constant(ring_, coeff);
        for (int p = 0; p < slots_ / 2; ++p)
            prod = prod * Poly::xVar(ring_, tuple[static_cast<std::size_t>(2 * p)],
                                     tuple[static_cast<std::size_t>(2 * p + 1)]);
        total = total + prod;
    }
    return total;
}

namespace {

// Generic-substitution state: exponent vector over the commuting parameters
// c[a,k] and a sorted list of anticommuting parameter ids g[c,k].
struct SpanKey {
    std::vector<std::uint16_t> cExps;
    std::vector<int> gammaSet;
    auto operator<=>(const SpanKey&) const = default;
};

struct FactorTerm {
    int cVar1 = -1, cVar2 = -1;  // commuting parameter ids, -1 = none
    int gVar1 = -1, gVar2 = -1;  // ordered anticommuting pair, -1 = none
    Monomial targetMono;
    int sign = 1;
};

// Insert id into the sorted word with the Koszul sign; zero on repeats.
bool grassmannInsert(std::vector<int>& word, int id, int& sign) {
    auto it = std::lower_bound(word.begin(), word.end(), id);
    if (it != word.end() && *it == id) return false;
    sign *= (std::distance(it, word.end()) % 2 == 0) ? 1 : -1;
    word.insert(it, id);
    return true;
}

// Deterministic reduced row echelon basis of the span of the given
// polynomials, returned primitive and sorted by leading monomial descending.
std::vector<Poly> rowReduceSpan(RingPtr ring, std::vector<Poly> polys) {
    struct MonoGreater {
        const Ring* ring;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return ring->monoCompare(a, b) == std::strong_ordering::greater;
        }
    };
    std::map<Monomial, std::size_t, MonoGreater> columns{MonoGreater{ring.get()}};
    for (const Poly& p : polys)
        for (const Term& t : p.terms()) columns.try_emplace(t.mono, 0);
    std::vector<Monomial> monos;
    monos.reserve(columns.size());
    for (auto& [m, idx] : columns) {
        idx = monos.size();
        monos.push_back(m);
    }
    std::vector<std::vector<Rational>> rows;
    for (const Poly& p : polys) {
        if (p.isZero()) continue;
        std::vector<Rational> row(monos.size(), Rational(0));
        for (const Term& t : p.terms()) row[columns.at(t.mono)] = t.coeff;
        rows.push_back(std::move(row));
    }
    std::vector<std::vector<Rational>> echelon;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < monos.size() && !rows.empty(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!isZero(rows[r][col])) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::vector<Rational> pivot = std::move(rows[found]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(found));
        const Rational inv = 1 / pivot[col];
        for (auto& c : pivot) c *= inv;
        for (auto& row : rows) {
            if (isZero(row[col])) continue;
            const Rational factor = row[col];
            for (std::size_t k = col; k < row.size(); ++k) row[k] -= factor * pivot[k];
        }
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            if (isZero(echelon[e][col])) continue;
            const Rational factor = echelon[e][col];
            for (std::size_t k = col; k < echelon[e].size(); ++k)
                echelon[e][k] -= factor * pivot[k];
        }
        echelon.push_back(std::move(pivot));
        pivots.push_back(col);
    }
    std::vector<Poly> basis;
    basis.reserve(echelon.size());
    for (const auto& row : echelon) {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (!isZero(row[k])) terms.push_back(Term{monos[k], row[k]});
        basis.push_back(Poly::fromSortedTerms(ring, std::move(terms)).primitive());
    }
    std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
        return ring->monoCompare(a.leadingMono(), b.leadingMono()) ==
               std::strong_ordering::greater;
    });
    return basis;
}

}  // namespace

std::vector<Poly> superSpan(const Poly& f, SuperSpace target) {
    const int n = f.ring()->symDim();
    const int r = target.even, s = target.odd;
    RingPtr B = Ring::make(r, s, 0, MonomialOrder::Degrevlex);
    if (f.isZero()) return {};

    const auto cId = [&](int a, int k) { return (k - 1) * r + (a - 1); };
    const auto gId = [&](int c, int k) { return (k - 1) * s + (c - 1); };

    const auto varMono = [&](int var) {
        Monomial m = Monomial::one(B->varCount());
        m.exps[static_cast<std::size_t>(var)] = 1;
        m.degree = 1;
        return m;
    };
    // Image of x[k,l] under the generic map, without even-odd cross terms.
    // Gamma pairs are recorded in factor order; every contribution to a
    // fixed gamma-set uses the same number of odd factors, so a uniform
    // per-factor sign convention cannot change the span.
    const auto factorTerms = [&](int k, int l) {
        std::vector<FactorTerm> terms;
        for (int a = 1; a <= r; ++a) {
            for (int b = a; b <= r; ++b) {
                const Monomial var = varMono(B->xIndex(a, b));
                if (a == b) {
                    terms.push_back(FactorTerm{cId(a, k), cId(a, l), -1, -1, var, 1});
                } else {
                    terms.push_back(FactorTerm{cId(a, k), cId(b, l), -1, -1, var, 1});
                    terms.push_back(FactorTerm{cId(b, k), cId(a, l), -1, -1, var, 1});
                }
            }
        }
        for (int c = 1; c <= s; ++c) {
            for (int d = c + 1; d <= s; ++d) {
                const Monomial var = varMono(B->yIndex(c, d));
                terms.push_back(FactorTerm{-1, -1, gId(c, k), gId(d, l), var, 1});
                terms.push_back(FactorTerm{-1, -1, gId(d, k), gId(c, l), var, -1});
            }
        }
        return terms;
    };

    std::map<SpanKey, Poly> global;
    const std::size_t cCount = static_cast<std::size_t>(n * r);
    for (const Term& t : f.terms()) {
        const auto pairs = pairsOfMonomial(*f.ring(), t.mono);
        std::map<SpanKey, Poly> state;
        state.emplace(SpanKey{std::vector<std::uint16_t>(cCount, 0), {}},
                      Poly::constant(B, t.coeff));
        for (const auto& [k, l] : pairs) {
            const auto terms = factorTerms(k, l);
            std::map<SpanKey, Poly> next;
            for (const auto& [key, value] : state) {
                for (const FactorTerm& ft : terms) {
                    SpanKey nk = key;
                    int sign = ft.sign;
                    if (ft.cVar1 >= 0) {
                        ++nk.cExps[static_cast<std::size_t>(ft.cVar1)];
                        ++nk.cExps[static_cast<std::size_t>(ft.cVar2)];
                    } else {
                        if (!grassmannInsert(nk.gammaSet, ft.gVar1, sign)) continue;
                        if (!grassmannInsert(nk.gammaSet, ft.gVar2, sign)) continue;
                    }
                    Poly contrib = value.mulTerm(ft.targetMono, Rational(sign));
                    auto [it, fresh] = next.try_emplace(std::move(nk), contrib);
                    if (!fresh) it->second = it->second + contrib;
                }
            }
            state = std::move(next);
        }
        for (auto& [key, value] : state) {
            auto [it, fresh] = global.try_emplace(key, value);
            if (!fresh) it->second = it->second + value;
        }
    }

    std::vector<Poly> polys;
    polys.reserve(global.size());
    for (auto& [key, value] : global)
        if (!value.isZero()) polys.push_back(std::move(value));
    return rowReduceSpan(B, std::move(polys));
}

}  // namespace tca
