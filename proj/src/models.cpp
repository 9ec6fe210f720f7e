#include "tca/models.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tca/errors.hpp"
#include "tca/polarize.hpp"

namespace tca {

namespace {

// Determinant of a square matrix of polynomials, Leibniz expansion.
Poly determinant(RingPtr ring, const std::vector<std::vector<Poly>>& m) {
    const std::size_t k = m.size();
    Poly total = Poly::zero(ring);
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Poly prod = Poly::constant(ring, Rational(inversions % 2 == 0 ? 1 : -1));
        for (std::size_t i = 0; i < k; ++i) prod = prod * m[i][perm[i]];
        total = total + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::vector<Poly>> symmetricSubmatrix(RingPtr ring, const std::vector<int>& rows,
                                                  const std::vector<int>& cols) {
    std::vector<std::vector<Poly>> m(rows.size(), std::vector<Poly>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m[i][j] = Poly::xVar(ring, rows[i], cols[j]);
    return m;
}

void forEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(subset.size()) == k) {
            visit(subset);
            return;
        }
        for (int v = start; v <= n; ++v) {
            subset.push_back(v);
            rec(v + 1);
            subset.pop_back();
        }
    };
    rec(1);
}

}  // namespace

Poly hwv(const Partition& lambda, int n) {
    if (lambda.length() > n)
        fail(ErrorCode::TooFewRows, "partition has more rows than the matrix");
    RingPtr ring = Ring::make(n, 0, 0, MonomialOrder::Degrevlex);
    Poly out = Poly::constant(ring, Rational(1));
    for (int i = 1; i <= lambda.length(); ++i) {
        const int exp = lambda.part(i) - lambda.part(i + 1);
        if (exp == 0) continue;
        std::vector<int> leading(static_cast<std::size_t>(i));
        for (int v = 1; v <= i; ++v) leading[static_cast<std::size_t>(v - 1)] = v;
        const Poly minor = determinant(ring, symmetricSubmatrix(ring, leading, leading));
        out = out * minor.pow(static_cast<unsigned>(exp));
    }
    return out;
}

Poly lieAct(int a, int b, const Poly& f) {
    const RingPtr& ring = f.ring();
    Poly out = Poly::zero(ring);
    for (const Term& t : f.terms()) {
        for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
            if (t.mono.exps[v] == 0) continue;
            if (ring->varKind(static_cast<int>(v)) != Ring::VarKind::X) continue;
            const auto [i, j] = ring->varPair(static_cast<int>(v));
            Poly image = Poly::zero(ring);
            if (j == b) image = image + Poly::xVar(ring, i, a);
            if (i == b) image = image + Poly::xVar(ring, a, j);
            if (image.isZero()) continue;
            Monomial rest = t.mono;
            --rest.exps[v];
            --rest.degree;
            out = out + image.mulTerm(rest, t.coeff * Rational(t.mono.exps[v]));
        }
    }
    return out;
}

ModelIdeal idealLambda(const Partition& lambda, SuperSpace v) {
    RingPtr B = Ring::make(v.even, v.odd, 0, MonomialOrder::Degrevlex);
    if (lambda.empty())
        return ModelIdeal{lambda, v, Ideal(B, {Poly::constant(B, Rational(1))})};
    const Poly witness = hwv(lambda, lambda.size());
    std::vector<Poly> gens = superSpan(witness, v);
    return ModelIdeal{lambda, v, Ideal(B, std::move(gens))};
}

Poly pfaffian(RingPtr ring, const std::vector<int>& indices) {
    if (indices.size() % 2 != 0)
        fail(ErrorCode::IndexError, "pfaffian needs an even index set");
    std::function<Poly(std::vector<int>)> rec = [&](std::vector<int> idx) -> Poly {
        if (idx.empty()) return Poly::constant(ring, Rational(1));
        const int first = idx.front();
        Poly total = Poly::zero(ring);
        for (std::size_t j = 1; j < idx.size(); ++j) {
            std::vector<int> rest;
            for (std::size_t k = 1; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            Poly term = Poly::yVar(ring, first, idx[j]) * rec(std::move(rest));
            if (j % 2 == 0) term = -term;
            total = total + term;
        }
        return total;
    };
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    return rec(std::move(sorted));
}

Ideal rankLocusIdeal(std::optional<int> evenRank, std::optional<int> oddRank, SuperSpace v) {
    RingPtr ring = Ring::make(v.even, v.odd, 0, MonomialOrder::Degrevlex);
    std::vector<Poly> gens;
    if (evenRank && *evenRank < v.even) {
        const int k = *evenRank + 1;
        std::vector<std::vector<int>> subsets;
        forEachSubset(v.even, k, [&](const std::vector<int>& s) { subsets.push_back(s); });
        for (std::size_t i = 0; i < subsets.size(); ++i)
            for (std::size_t j = i; j < subsets.size(); ++j)
                gens.push_back(
                    determinant(ring, symmetricSubmatrix(ring, subsets[i], subsets[j])));
    }
    if (oddRank && 2 * *oddRank < v.odd) {
        // rank eta <= 2k is cut out by the (2k+2)-Pfaffians; for k = 0 these
        // degenerate to the coordinates y[a,b] themselves.
        const int k = 2 * *oddRank + 2;
        if (k <= v.odd)
            forEachSubset(v.odd, k,
                          [&](const std::vector<int>& s) { gens.push_back(pfaffian(ring, s)); });
    }
    return Ideal(ring, std::move(gens));
}

Ideal veroneseKernel(int s) {
    if (s < 1) fail(ErrorCode::IndexError, "veronese kernel needs s >= 1");
    RingPtr elim = Ring::make(s, 0, s, MonomialOrder::Lex);
    std::vector<Poly> gens;
    for (int i = 1; i <= s; ++i)
        for (int j = i; j <= s; ++j)
            gens.push_back(Poly::xVar(elim, i, j) - Poly::tVar(elim, i) * Poly::tVar(elim, j));
    const std::vector<Poly> gb = buchberger(elim, std::move(gens));
    RingPtr target = Ring::make(s, 0, 0, MonomialOrder::Degrevlex);
    std::vector<Poly> kernel;
    for (const Poly& g : gb) {
        bool pure = true;
        for (const Term& t : g.terms())
            for (std::size_t vv = 0; vv < t.mono.exps.size(); ++vv)
                if (t.mono.exps[vv] > 0 &&
                    g.ring()->varKind(static_cast<int>(vv)) == Ring::VarKind::T)
                    pure = false;
        if (!pure) continue;
        std::vector<Term> terms;
        for (const Term& t : g.terms()) {
            Monomial m = Monomial::one(target->varCount());
            for (int vv = 0; vv < target->varCount(); ++vv)
                m.exps[static_cast<std::size_t>(vv)] = t.mono.exps[static_cast<std::size_t>(vv)];
            m.degree = t.mono.degree;
            terms.push_back(Term{std::move(m), t.coeff});
        }
        kernel.push_back(Poly::fromTerms(target, std::move(terms)));
    }
    return Ideal(target, std::move(kernel));
}

namespace {

std::vector<int> monomialWeight(const Ring& ring, const Monomial& m) {
    std::vector<int> w(static_cast<std::size_t>(ring.symDim()), 0);
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        if (m.exps[v] == 0) continue;
        const auto [i, j] = ring.varPair(static_cast<int>(v));
        w[static_cast<std::size_t>(i - 1)] += m.exps[v];
        w[static_cast<std::size_t>(j - 1)] += m.exps[v];
    }
    return w;
}

void forEachMonomial(const Ring& ring, int degree,
                     const std::function<void(const Monomial&)>& visit) {
    Monomial m = Monomial::one(ring.varCount());
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == ring.varCount()) {
            if (remaining == 0) visit(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m.exps[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
            m.degree += e;
            rec(var + 1, remaining - e);
            m.degree -= e;
            m.exps[static_cast<std::size_t>(var)] = 0;
        }
    };
    rec(0, degree);
}

long rankOverQ(std::vector<std::vector<Rational>> rows) {
    long rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::size_t rowStart = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = rowStart;
        while (pivot < rows.size() && isZero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rowStart], rows[pivot]);
        const Rational inv = 1 / rows[rowStart][col];
        for (std::size_t k = col; k < cols; ++k) rows[rowStart][k] *= inv;
        for (std::size_t r2 = rowStart + 1; r2 < rows.size(); ++r2) {
            if (isZero(rows[r2][col])) continue;
            const Rational f = rows[r2][col];
            for (std::size_t k = col; k < cols; ++k) rows[r2][k] -= f * rows[rowStart][k];
        }
        ++rowStart;
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<Partition> gradedMultiplicities(const ModelIdeal& model, int degree) {
    if (model.space.odd > 0)
        fail(ErrorCode::OddSpaceUnsupported, "graded multiplicities need a purely even space");
    const RingPtr& ring = model.ideal.ring();
    const int n = ring->symDim();

    // Span of monomial multiples of the generators in the requested degree.
    std::vector<Poly> products;
    for (const Poly& g : model.ideal.generators()) {
        const int gd = g.degree();
        if (gd > degree) continue;
        forEachMonomial(*ring, degree - gd, [&](const Monomial& m) {
            products.push_back(g.mulTerm(m, Rational(1)));
        });
    }
    if (products.empty()) return {};

    // Weight-stable span: the dimension of each weight space is the rank of
    // the rows projected to that weight's monomial columns.
    std::map<std::vector<int>, std::vector<Monomial>> weightColumns;
    forEachMonomial(*ring, degree, [&](const Monomial& m) {
        weightColumns[monomialWeight(*ring, m)].push_back(m);
    });

    std::map<std::vector<int>, long, std::greater<>> character;
    for (const auto& [weight, monos] : weightColumns) {
        std::map<Monomial, std::size_t, std::function<bool(const Monomial&, const Monomial&)>>
            local([&ring](const Monomial& a, const Monomial& b) {
                return ring->monoCompare(a, b) == std::strong_ordering::greater;
            });
        for (std::size_t i = 0; i < monos.size(); ++i) local.emplace(monos[i], i);
        std::vector<std::vector<Rational>> rows;
        for (const Poly& p : products) {
            std::vector<Rational> row(monos.size(), Rational(0));
            bool any = false;
            for (const Term& t : p.terms()) {
                auto it = local.find(t.mono);
                if (it != local.end()) {
                    row[it->second] = t.coeff;
                    any = true;
                }
            }
            if (any) rows.push_back(std::move(row));
        }
        const long dim = rankOverQ(std::move(rows));
        if (dim > 0) character[weight] = dim;
    }

    // Greedy peeling of dominant weights (largest in lex order first).
    std::vector<Partition> result;
    while (!character.empty()) {
        const std::vector<int> top = character.begin()->first;
        const long mult = character.begin()->second;
        std::vector<int> parts = top;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i - 1] < parts[i])
                fail(ErrorCode::Internal, "character peeling hit a non-dominant weight");
        Partition shape(parts);
        if (mult != 1)
            fail(ErrorCode::Internal, "graded component is not multiplicity-free");
        for (int p : shape.parts())
            if (p % 2 != 0)
                fail(ErrorCode::Internal, "graded component has an odd highest weight");
        for (const auto& [content, count] : weightMultiplicities(shape, n)) {
            auto it = character.find(content);
            if (it == character.end() || it->second < mult * count)
                fail(ErrorCode::Internal, "character peeling went negative");
            it->second -= mult * count;
            if (it->second == 0) character.erase(it);
        }
        result.push_back(std::move(shape));
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace tca
