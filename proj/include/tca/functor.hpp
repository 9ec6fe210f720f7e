#pragma once

#include <map>
#include <string>
#include <vector>

#include "tca/partition.hpp"
#include "tca/rational.hpp"

namespace tca {

// Q^(r|s): r even dimensions, s odd ones.
struct SuperSpace {
    int even = 0;
    int odd = 0;

    bool operator==(const SuperSpace&) const = default;
    std::string toText() const {
        return std::to_string(even) + "," + std::to_string(odd);
    }
    static SuperSpace fromText(const std::string& text);
};

// Finite-length polynomial functor: formal sum of Schur functors with
// positive multiplicities. The empty map is the zero functor; the empty
// partition is Sym^0.
class PolyFunctor {
public:
    PolyFunctor() = default;
    explicit PolyFunctor(std::map<Partition, long> terms);

    static PolyFunctor zero() { return PolyFunctor(); }
    static PolyFunctor schur(Partition lambda, long mult = 1);
    static PolyFunctor sym(int n);
    static PolyFunctor wedge(int n);
    // "sym:2", "wedge:3", or explicit "{(3,1):1,(2,2):5}" ("{}" is zero).
    static PolyFunctor fromText(const std::string& text);
    std::string toText() const;

    const std::map<Partition, long>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    PolyFunctor plus(const PolyFunctor& other) const;

    bool operator==(const PolyFunctor&) const = default;

private:
    std::map<Partition, long> terms_;
};

// Prop: S_lambda(Q^(r|s)) is nonzero iff lambda_{r+1} <= s.
bool schurNonzero(const Partition& lambda, SuperSpace v);

// dim S_lambda(Q^(r|s)), counted by super semistandard tableaux: letters
// 1..r even then 1..s odd, rows weakly increase with odd letters strict,
// columns weakly increase with even letters strict.
BigInt schurDim(const Partition& lambda, SuperSpace v);

BigInt functorDim(const PolyFunctor& f, SuperSpace v);

// Max |lambda| over terms; ZeroFunctor error on the zero functor.
int maxdeg(const PolyFunctor& f);

// Max lambda_1 over terms; 0 for the zero functor (empty supremum).
int width(const PolyFunctor& f);

// F'(V) = F(Q + V) split by the weight of the distinguished line: weight i
// collects S_mu over horizontal strips lambda/mu with |lambda|-|mu| = i.
std::map<int, PolyFunctor> shiftDecompose(const PolyFunctor& f);

// dim S_lambda(Q^n) by the classical hook/Weyl product, valid for huge n.
BigInt schurDimEven(const Partition& lambda, const BigInt& n);

// dim F(Q^(0|n)) = sum of dim S_{lambda'}(Q^n): the polynomial P(n) of the
// degree bound, evaluated exactly at arbitrary-precision n.
BigInt functorDimOdd(const PolyFunctor& f, const BigInt& n);

// Content vectors of the classical SSYT of shape lambda with letters 1..n,
// with multiplicities (the weight multiplicities of S_lambda(Q^n)).
std::map<std::vector<int>, long> weightMultiplicities(const Partition& lambda, int n);

}  // namespace tca
