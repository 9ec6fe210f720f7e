#pragma once

#include <gmpxx.h>

#include <string>

namespace tca {

// Exact arbitrary-precision arithmetic. GMP's C++ classes already give value
// semantics; the helpers below pin down canonicalization and text form.
using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rational makeRational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational makeRational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool isZero(const Rational& q) { return sgn(q) == 0; }
inline bool isOne(const Rational& q) { return q == 1; }
inline bool isInteger(const Rational& q) { return q.get_den() == 1; }

// "3", "-1/2"; denominator omitted when 1.
inline std::string toString(const Rational& q) {
    if (isInteger(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string toString(const BigInt& n) { return n.get_str(); }

inline BigInt power(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace tca
