#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tca {

enum class MonomialOrder { Degrevlex, Lex };

inline const char* orderName(MonomialOrder o) {
    return o == MonomialOrder::Degrevlex ? "degrevlex" : "lex";
}
MonomialOrder orderFromName(const std::string& name);

// Exponent vector over a ring's variables, with cached total degree.
struct Monomial {
    std::vector<std::uint16_t> exps;
    int degree = 0;

    static Monomial one(int varCount) { return Monomial{std::vector<std::uint16_t>(static_cast<std::size_t>(varCount), 0), 0}; }
    bool isOne() const { return degree == 0; }
    bool operator==(const Monomial&) const = default;
};

Monomial mulMono(const Monomial& a, const Monomial& b);
bool dividesMono(const Monomial& a, const Monomial& b);  // a | b
Monomial divMono(const Monomial& b, const Monomial& a);  // b / a, caller checks
Monomial lcmMono(const Monomial& a, const Monomial& b);
bool coprimeMono(const Monomial& a, const Monomial& b);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Coordinate ring of pairs (symmetric form, alternating form) plus auxiliary
// variables: x[i,j] for 1<=i<=j<=r, y[a,b] for 1<=a<b<=s, then t1..t_aux.
// Variable significance for the monomial orders is x-block, y-block, t-block,
// each in row-major index order, except that lex ranks the t-block highest so
// a lex Groebner basis eliminates auxiliary variables.
class Ring {
public:
    static RingPtr make(int symDim, int skewDim, int auxVars, MonomialOrder order);

    int symDim() const { return symDim_; }
    int skewDim() const { return skewDim_; }
    int auxVars() const { return auxVars_; }
    MonomialOrder order() const { return order_; }
    int varCount() const { return varCount_; }

    // 1-based indices; x accepts i>j (symmetric). y requires a != b and the
    // caller tracks the sign of the swap. Out of range -> IndexError.
    int xIndex(int i, int j) const;
    int yIndex(int a, int b) const;
    int tIndex(int k) const;

    std::string varName(int var) const;

    enum class VarKind { X, Y, T };
    VarKind varKind(int var) const;
    // 1-based (i,j) of an x-variable / (a,b) of a y-variable.
    std::pair<int, int> varPair(int var) const;

    // true iff a > b in this ring's monomial order.
    bool monoGreater(const Monomial& a, const Monomial& b) const;
    std::strong_ordering monoCompare(const Monomial& a, const Monomial& b) const;

    // Same dimensions and order.
    bool sameAs(const Ring& other) const;

private:
    Ring(int symDim, int skewDim, int auxVars, MonomialOrder order);

    int symDim_, skewDim_, auxVars_;
    MonomialOrder order_;
    int xCount_, yCount_, varCount_;
};

}  // namespace tca
