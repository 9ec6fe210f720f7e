#include "tca/poly.hpp"

#include <algorithm>

#include "tca/errors.hpp"

namespace tca {

namespace {

struct MonoLess {
    const Ring* ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ring->monoCompare(a, b) == std::strong_ordering::less;
    }
};

}  // namespace

void requireSameRing(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring() || !a.ring()->sameAs(*b.ring()))
        fail(ErrorCode::RingMismatch, "operands live in different rings");
}

Poly Poly::zero(RingPtr ring) {
    Poly p;
    p.ring_ = std::move(ring);
    return p;
}

Poly Poly::constant(RingPtr ring, Rational c) {
    Poly p;
    p.ring_ = std::move(ring);
    if (!tca::isZero(c))
        p.terms_.push_back(Term{Monomial::one(p.ring_->varCount()), std::move(c)});
    return p;
}

Poly Poly::variable(RingPtr ring, int varIndex) {
    if (varIndex < 0 || varIndex >= ring->varCount())
        fail(ErrorCode::IndexError, "variable index out of range");
    Poly p;
    p.ring_ = std::move(ring);
    Monomial m = Monomial::one(p.ring_->varCount());
    m.exps[static_cast<std::size_t>(varIndex)] = 1;
    m.degree = 1;
    p.terms_.push_back(Term{std::move(m), Rational(1)});
    return p;
}

Poly Poly::xVar(RingPtr ring, int i, int j) {
    const int idx = ring->xIndex(i, j);
    return variable(std::move(ring), idx);
}

Poly Poly::yVar(RingPtr ring, int a, int b) {
    if (a == b) return zero(std::move(ring));
    const bool flip = a > b;
    const int idx = ring->yIndex(a, b);
    Poly v = variable(std::move(ring), idx);
    return flip ? -v : v;
}

Poly Poly::tVar(RingPtr ring, int k) {
    const int idx = ring->tIndex(k);
    return variable(std::move(ring), idx);
}

Poly Poly::fromTerms(RingPtr ring, std::vector<Term> terms) {
    std::map<Monomial, Rational, MonoLess> acc{MonoLess{ring.get()}};
    for (auto& t : terms) {
        auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
        if (!fresh) it->second += t.coeff;
    }
    Poly p;
    p.ring_ = std::move(ring);
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!tca::isZero(it->second)) p.terms_.push_back(Term{it->first, it->second});
    return p;
}

Poly Poly::fromSortedTerms(RingPtr ring, std::vector<Term> terms) {
    Poly p;
    p.ring_ = std::move(ring);
    p.terms_ = std::move(terms);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree);
    return d;
}

const Monomial& Poly::leadingMono() const {
    if (terms_.empty()) fail(ErrorCode::Internal, "leading term of zero polynomial");
    return terms_.front().mono;
}

const Rational& Poly::leadingCoeff() const {
    if (terms_.empty()) fail(ErrorCode::Internal, "leading term of zero polynomial");
    return terms_.front().coeff;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Poly Poly::operator+(const Poly& other) const {
    requireSameRing(*this, other);
    Poly out;
    out.ring_ = ring_;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        const auto cmp = ring_->monoCompare(terms_[i].mono, other.terms_[j].mono);
        if (cmp == std::strong_ordering::greater) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + other.terms_[j].coeff;
            if (!tca::isZero(c)) out.terms_.push_back(Term{terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    requireSameRing(*this, other);
    std::map<Monomial, Rational, MonoLess> acc{MonoLess{ring_.get()}};
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Monomial m = mulMono(a.mono, b.mono);
            Rational c = a.coeff * b.coeff;
            auto [it, fresh] = acc.try_emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    }
    Poly out;
    out.ring_ = ring_;
    out.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!tca::isZero(it->second)) out.terms_.push_back(Term{it->first, it->second});
    return out;
}

bool Poly::operator==(const Poly& other) const {
    if (!ring_ || !other.ring_) return !ring_ && !other.ring_;
    if (!ring_->sameAs(*other.ring_) || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::scaled(const Rational& c) const {
    if (tca::isZero(c)) return zero(ring_);
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Poly Poly::mulTerm(const Monomial& m, const Rational& c) const {
    if (tca::isZero(c)) return zero(ring_);
    Poly out = *this;
    for (auto& t : out.terms_) {
        t.mono = mulMono(t.mono, m);
        t.coeff *= c;
    }
    return out;
}

Poly Poly::pow(unsigned exp) const {
    Poly result = constant(ring_, Rational(1));
    Poly base = *this;
    while (exp > 0) {
        if (exp & 1u) result = result * base;
        base = exp > 1 ? base * base : base;
        exp >>= 1u;
    }
    return result;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    Rational inv = 1 / terms_.front().coeff;
    return scaled(inv);
}

Poly Poly::primitive() const {
    if (terms_.empty()) return *this;
    BigInt den = 1;
    for (const auto& t : terms_) {
        BigInt g;
        mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        den = g;
    }
    BigInt content = 0;
    for (const auto& t : terms_) {
        BigInt num = t.coeff.get_num() * (den / t.coeff.get_den());
        BigInt g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        content = g;
    }
    if (sgn(terms_.front().coeff) < 0) content = -content;
    return scaled(makeRational(den, content));
}

Poly Poly::substHom(const std::map<int, Poly>& images, RingPtr target) const {
    for (const auto& [var, image] : images)
        if (!image.ring() || !image.ring()->sameAs(*target))
            fail(ErrorCode::RingMismatch, "image of " + ring_->varName(var) +
                                              " lives in the wrong ring");
    Poly out = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly factor = Poly::constant(target, t.coeff);
        for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
            const unsigned e = t.mono.exps[v];
            if (e == 0) continue;
            auto it = images.find(static_cast<int>(v));
            if (it == images.end())
                fail(ErrorCode::RingMismatch,
                     "no image for variable " + ring_->varName(static_cast<int>(v)));
            factor = factor * it->second.pow(e);
        }
        out = out + factor;
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->varCount())
        fail(ErrorCode::RingMismatch, "point dimension mismatch");
    Rational total(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            for (unsigned e = 0; e < t.mono.exps[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

Poly Poly::liftTo(RingPtr target) const {
    if (target->symDim() != ring_->symDim() || target->skewDim() != ring_->skewDim() ||
        target->varCount() < ring_->varCount())
        fail(ErrorCode::RingMismatch, "target ring does not extend the source ring");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = Monomial::one(target->varCount());
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i) m.exps[i] = t.mono.exps[i];
        m.degree = t.mono.degree;
        terms.push_back(Term{std::move(m), t.coeff});
    }
    return fromTerms(target, std::move(terms));
}

}  // namespace tca
