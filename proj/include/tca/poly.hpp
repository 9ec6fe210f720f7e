#pragma once

#include <map>
#include <string>
#include <vector>

#include "tca/rational.hpp"
#include "tca/ring.hpp"

namespace tca {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Immutable-by-convention exact polynomial: terms strictly descending in the
// ring's monomial order, no zero coefficients.
class Poly {
public:
    Poly() = default;
    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, Rational c);
    static Poly variable(RingPtr ring, int varIndex);
    // Signed variable access with index normalization: x[j,i] = x[i,j],
    // y[b,a] = -y[a,b], y[a,a] = 0.
    static Poly xVar(RingPtr ring, int i, int j);
    static Poly yVar(RingPtr ring, int a, int b);
    static Poly tVar(RingPtr ring, int k);
    // Terms need not be sorted or combined; zero coefficients are dropped.
    static Poly fromTerms(RingPtr ring, std::vector<Term> terms);
    // Caller guarantees strictly descending monomials and nonzero coefficients.
    static Poly fromSortedTerms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || terms_.front().mono.isOne(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    const Monomial& leadingMono() const;
    const Rational& leadingCoeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    bool operator==(const Poly& other) const;

    Poly scaled(const Rational& c) const;
    Poly mulTerm(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned exp) const;

    // Leading coefficient 1.
    Poly monic() const;
    // Integer coprime coefficients, positive leading coefficient.
    Poly primitive() const;

    // Ring homomorphism determined by variable images (all in the target
    // ring). Every variable occurring in *this must be mapped.
    Poly substHom(const std::map<int, Poly>& images, RingPtr target) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // The same exponent vectors in a ring with at least as many variables
    // of identical x/y-block shape (used to append aux variables).
    Poly liftTo(RingPtr target) const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

void requireSameRing(const Poly& a, const Poly& b);

}  // namespace tca
