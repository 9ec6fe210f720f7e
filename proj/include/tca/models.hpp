#pragma once

#include <optional>
#include <vector>

#include "tca/functor.hpp"
#include "tca/ideal.hpp"
#include "tca/partition.hpp"

namespace tca {

// Evaluation of the equivariant ideal generated by the doubled-shape
// irreducible on a concrete super space. The generator list is a basis of
// the image span, so the ideal is stable under the even symmetry groups.
struct ModelIdeal {
    Partition lambda;
    SuperSpace space;
    Ideal ideal;
};

// Classical highest weight vector of the doubled shape: the product of
// leading principal minors Delta_i^(lambda_i - lambda_{i+1}) of the generic
// symmetric n x n matrix. Weight 2*lambda; killed by the raising operators.
// TooFewRows when length(lambda) > n.
Poly hwv(const Partition& lambda, int n);

// Infinitesimal gl_n action by derivations: E_{ab} x[b,j] -> x[a,j] summed
// over occurrences (acts on the x-block only).
Poly lieAct(int a, int b, const Poly& f);

// Generators of the lambda-ideal on Q^(r|s), by polarize-and-specialize from
// hwv(lambda, |lambda|). The zero ideal when the doubled shape vanishes on
// the space; the unit ideal for the empty partition.
ModelIdeal idealLambda(const Partition& lambda, SuperSpace v);

// Ideal of the locus rank(omega) <= evenRank, rank(eta) <= 2*oddRank:
// (evenRank+1)-minors of the symmetric block plus (2*oddRank+2)-Pfaffians of
// the skew block. std::nullopt means no constraint on that family.
Ideal rankLocusIdeal(std::optional<int> evenRank, std::optional<int> oddRank, SuperSpace v);

// Pfaffian of the generic skew matrix restricted to the given (sorted,
// even-sized) index set; matchings signed by crossing number, so the
// standard symplectic block has Pfaffian +1.
Poly pfaffian(RingPtr ring, const std::vector<int>& indices);

// Kernel of x[i,j] -> u_i u_j, Sym(Sym^2 Q^s) onto the even-degree part of
// Sym(Q^s); computed by lex elimination of the auxiliary u-variables.
Ideal veroneseKernel(int s);

// GL_n-decomposition of the degree-d component of an ideal on a purely even
// space: the list of doubled highest weights, each required to appear with
// multiplicity one. OddSpaceUnsupported when the space has odd directions.
std::vector<Partition> gradedMultiplicities(const ModelIdeal& model, int degree);

}  // namespace tca
