#pragma once

#include <string>
#include <vector>

#include "tca/ideal.hpp"
#include "tca/models.hpp"
#include "tca/partition.hpp"

namespace tca {

// Symbolic GL-ideal of Sym(Sym^2): zero, unit, generated by one doubled
// shape, or a sum of such. Sums are canonicalized to containment-minimal
// antichains (I_lambda sits inside I_mu exactly when mu sits inside lambda).
class GLIdeal {
public:
    enum class Kind { Zero, Unit, Generated, Sum };

    static GLIdeal zero();
    static GLIdeal unit();
    static GLIdeal generated(Partition lambda);
    static GLIdeal sum(std::vector<Partition> lambdas);

    Kind kind() const { return kind_; }
    // The generating partitions; empty for Zero, meaningless for Unit.
    const std::vector<Partition>& summands() const { return lambdas_; }
    const Partition& partition() const;
    std::string toText() const;

    bool operator==(const GLIdeal&) const = default;

private:
    Kind kind_ = Kind::Zero;
    std::vector<Partition> lambdas_;
};

// Point of the spectrum poset N^2 union {infinity}.
struct SpectrumPoint {
    bool infinite = false;
    int r = 0;
    int s = 0;

    static SpectrumPoint infinity() { return SpectrumPoint{true, 0, 0}; }
    static SpectrumPoint at(int r, int s) { return SpectrumPoint{false, r, s}; }
    bool operator==(const SpectrumPoint&) const = default;
    std::string toText() const;
};

// Componentwise order with infinity on top.
bool posetLe(const SpectrumPoint& p, const SpectrumPoint& q);
bool inClosure(const SpectrumPoint& q, const SpectrumPoint& p);  // q <= p

// Zero and the rectangle ideals are the GL-primes.
bool isGLPrime(const GLIdeal& ideal);

// J inside K in the ideal lattice.
bool glContains(const GLIdeal& J, const GLIdeal& K);

GLIdeal glRadical(const GLIdeal& ideal);

// Rectangle indices (r,s) of the minimal GL-primes over J; [infinity] for
// the zero ideal. UnitIdeal error on the unit ideal.
std::vector<SpectrumPoint> minimalGLPrimes(const GLIdeal& ideal);

// I_{r,s} -> (r-1, s-1), zero -> infinity; NotPrime otherwise.
SpectrumPoint specPoint(const GLIdeal& prime);

// Concrete evaluation: sum of the generator lists of the lambda-ideals.
Ideal evaluate(const GLIdeal& ideal, SuperSpace v);

// J(V) inside rad K(V), decided by Groebner radical membership.
bool geometricRadicalContains(const GLIdeal& J, const GLIdeal& K, SuperSpace v);

// f nilpotent modulo J(V), i.e. f in rad(J(V)).
bool nilpotentAt(const Poly& f, const GLIdeal& J, SuperSpace v);

struct BridgeCheck {
    Partition lambda;
    Partition mu;
    bool symbolic = false;
    bool geometric = false;
    SuperSpace space;
    bool agree = false;
};

struct CrossValidation {
    std::vector<BridgeCheck> checks;
    int disagreements = 0;
};

// Evaluation size licensed for the directed question
// "I_lambda(V) inside rad I_mu(V)?": the symmetric block covers the corner
// rows of mu and the skew block twice its corner columns; for expected-false
// answers a single witnessing corner (the cheapest ring) suffices, enlarged
// so the lambda-ideal does not vanish.
SuperSpace bridgeSpace(const Partition& lambda, const Partition& mu);

// One directed comparison of the symbolic lattice against Groebner radical
// containment at the licensed evaluation size.
BridgeCheck crossValidatePair(const Partition& lambda, const Partition& mu);

struct GLBridgeCheck {
    bool symbolic = false;
    bool geometric = false;
    SuperSpace space;
    bool agree = false;
};

// Same comparison for arbitrary symbolic ideals: is J inside the GL-radical
// of K, against Groebner radical containment of the raw evaluations. Sums on
// the right exercise genuine radical membership (the radical of a sum is
// generally larger than the sum).
GLBridgeCheck crossValidatePair(const GLIdeal& J, const GLIdeal& K);

// All ordered pairs with |lambda|, |mu| <= maxSize, in lex order.
CrossValidation crossValidate(int maxSize, int jobs = 1);

// Partitions of 0..maxSize in (size, parts) order.
std::vector<Partition> partitionsUpTo(int maxSize);

}  // namespace tca
