#pragma once

#include <map>
#include <vector>

#include "tca/functor.hpp"
#include "tca/poly.hpp"

namespace tca {

// Pair-structured multilinear avatar of an x-homogeneous element f of
// Sym^d(Sym^2 Q^n): a table over 2d-tuples of basis indices of Q^n, where
// slots (2p-1, 2p) feed the p-th quadratic factor. Each symmetric pair is
// split as (e_i e_j) -> (e_i x e_j + e_j x e_i)/2, so restituting equal
// vectors recovers d! * f.
class Polarization {
public:
    // slots must equal 2 * (x-degree of f). NotHomogeneous when f is not
    // homogeneous of positive degree in the x-variables alone.
    static Polarization of(const Poly& f, int slots);

    int slots() const { return slots_; }
    const RingPtr& sourceRing() const { return ring_; }
    const BigInt& restitutionFactor() const { return factor_; }
    const std::map<std::vector<int>, Rational>& table() const { return table_; }
    Rational value(const std::vector<int>& tuple) const;

    // Sum of value(k) * prod_p x[k_{2p-1}, k_{2p}] over table entries;
    // equals restitutionFactor() * f exactly.
    Poly restitute() const;

private:
    RingPtr ring_;
    int slots_ = 0;
    BigInt factor_ = 1;
    std::map<std::vector<int>, Rational> table_;
};

// Basis (reduced row echelon, deterministic order) of the image in
// B(Q^(r|s)) of the functorial span generated by f: the polarization pushed
// through a generic map with commuting coefficients on the even rows and
// anticommuting ones on the odd rows, keeping only even-even and odd-odd
// quadratic coordinates. The result lives in makeRing(r, s, 0, degrevlex).
std::vector<Poly> superSpan(const Poly& f, SuperSpace target);

}  // namespace tca
