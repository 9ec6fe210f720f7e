#include "tca/ring.hpp"

#include <algorithm>

#include "tca/errors.hpp"

namespace tca {

MonomialOrder orderFromName(const std::string& name) {
    if (name == "degrevlex") return MonomialOrder::Degrevlex;
    if (name == "lex") return MonomialOrder::Lex;
    fail(ErrorCode::SyntaxError, "unknown monomial order '" + name + "'");
}

Monomial mulMono(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] += b.exps[i];
    out.degree = a.degree + b.degree;
    return out;
}

bool dividesMono(const Monomial& a, const Monomial& b) {
    if (a.degree > b.degree) return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial divMono(const Monomial& b, const Monomial& a) {
    Monomial out = b;
    for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] -= a.exps[i];
    out.degree = b.degree - a.degree;
    return out;
}

Monomial lcmMono(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    out.degree = 0;
    for (std::size_t i = 0; i < out.exps.size(); ++i) {
        out.exps[i] = std::max(a.exps[i], b.exps[i]);
        out.degree += out.exps[i];
    }
    return out;
}

bool coprimeMono(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

Ring::Ring(int symDim, int skewDim, int auxVars, MonomialOrder order)
    : symDim_(symDim), skewDim_(skewDim), auxVars_(auxVars), order_(order) {
    xCount_ = symDim_ * (symDim_ + 1) / 2;
    yCount_ = skewDim_ * (skewDim_ - 1) / 2;
    varCount_ = xCount_ + yCount_ + auxVars_;
}

RingPtr Ring::make(int symDim, int skewDim, int auxVars, MonomialOrder order) {
    if (symDim < 0 || skewDim < 0 || auxVars < 0)
        fail(ErrorCode::IndexError, "ring dimensions must be nonnegative");
    return RingPtr(new Ring(symDim, skewDim, auxVars, order));
}

int Ring::xIndex(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > symDim_)
        fail(ErrorCode::IndexError,
             "x[" + std::to_string(i) + "," + std::to_string(j) + "] out of range");
    // Row-major over 1 <= i <= j <= r: row i starts after (i-1) rows of
    // lengths r, r-1, ...
    const int before = (i - 1) * symDim_ - (i - 1) * (i - 2) / 2;
    return before + (j - i);
}

int Ring::yIndex(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > skewDim_ || a == b)
        fail(ErrorCode::IndexError,
             "y[" + std::to_string(a) + "," + std::to_string(b) + "] out of range");
    const int before = (a - 1) * skewDim_ - a * (a - 1) / 2;
    return xCount_ + before + (b - a - 1);
}

int Ring::tIndex(int k) const {
    if (k < 1 || k > auxVars_)
        fail(ErrorCode::IndexError, "t" + std::to_string(k) + " out of range");
    return xCount_ + yCount_ + (k - 1);
}

std::string Ring::varName(int var) const {
    if (var < 0 || var >= varCount_)
        fail(ErrorCode::IndexError, "variable index out of range");
    if (var < xCount_) {
        int i = 1, rest = var;
        while (rest >= symDim_ - i + 1) {
            rest -= symDim_ - i + 1;
            ++i;
        }
        return "x[" + std::to_string(i) + "," + std::to_string(i + rest) + "]";
    }
    if (var < xCount_ + yCount_) {
        int a = 1, rest = var - xCount_;
        while (rest >= skewDim_ - a) {
            rest -= skewDim_ - a;
            ++a;
        }
        return "y[" + std::to_string(a) + "," + std::to_string(a + 1 + rest) + "]";
    }
    return "t" + std::to_string(var - xCount_ - yCount_ + 1);
}

Ring::VarKind Ring::varKind(int var) const {
    if (var < 0 || var >= varCount_)
        fail(ErrorCode::IndexError, "variable index out of range");
    if (var < xCount_) return VarKind::X;
    if (var < xCount_ + yCount_) return VarKind::Y;
    return VarKind::T;
}

std::pair<int, int> Ring::varPair(int var) const {
    switch (varKind(var)) {
        case VarKind::X: {
            int i = 1, rest = var;
            while (rest >= symDim_ - i + 1) {
                rest -= symDim_ - i + 1;
                ++i;
            }
            return {i, i + rest};
        }
        case VarKind::Y: {
            int a = 1, rest = var - xCount_;
            while (rest >= skewDim_ - a) {
                rest -= skewDim_ - a;
                ++a;
            }
            return {a, a + 1 + rest};
        }
        default:
            fail(ErrorCode::IndexError, "aux variable has no index pair");
    }
}

std::strong_ordering Ring::monoCompare(const Monomial& a, const Monomial& b) const {
    if (order_ == MonomialOrder::Degrevlex) {
        if (a.degree != b.degree)
            return a.degree < b.degree ? std::strong_ordering::less : std::strong_ordering::greater;
        for (std::size_t i = a.exps.size(); i-- > 0;) {
            if (a.exps[i] != b.exps[i])
                return a.exps[i] > b.exps[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    // Lex: t-block first (elimination of aux vars), then x, then y.
    const std::size_t nonAux = static_cast<std::size_t>(varCount_ - auxVars_);
    for (std::size_t i = nonAux; i < a.exps.size(); ++i) {
        if (a.exps[i] != b.exps[i])
            return a.exps[i] < b.exps[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    for (std::size_t i = 0; i < nonAux; ++i) {
        if (a.exps[i] != b.exps[i])
            return a.exps[i] < b.exps[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool Ring::monoGreater(const Monomial& a, const Monomial& b) const {
    return monoCompare(a, b) == std::strong_ordering::greater;
}

bool Ring::sameAs(const Ring& other) const {
    return symDim_ == other.symDim_ && skewDim_ == other.skewDim_ &&
           auxVars_ == other.auxVars_ && order_ == other.order_;
}

}  // namespace tca
