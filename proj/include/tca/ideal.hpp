#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tca/poly.hpp"

namespace tca {

// Finitely generated ideal with a cached reduced Groebner basis. Copies share
// the cache; the basis is computed at most once per ideal value and is safe
// to read concurrently.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> generators);

    const RingPtr& ring() const { return data_->ring; }
    const std::vector<Poly>& generators() const { return data_->gens; }

    // Unique reduced basis: monic, auto-reduced, sorted descending by leading
    // monomial. Empty for the zero ideal, {1} for the unit ideal.
    const std::vector<Poly>& reducedGB() const;

    bool isUnit() const;

private:
    struct Data {
        RingPtr ring;
        std::vector<Poly> gens;
        mutable std::mutex mutex;
        mutable std::optional<std::vector<Poly>> gb;
    };
    std::shared_ptr<Data> data_;
};

// Buchberger with the product and chain criteria, normal selection strategy
// (lowest lcm degree first, ties by the monomial order). The first
// knownGBPrefix inputs are assumed to already form a Groebner basis, so
// their mutual S-pairs are skipped.
std::vector<Poly> buchberger(RingPtr ring, std::vector<Poly> gens,
                             std::size_t knownGBPrefix = 0);

// Full normal form against a list of nonzero polynomials (top and tail).
Poly normalFormAgainst(const Poly& f, const std::vector<Poly>& basis);

Poly normalForm(const Poly& f, const Ideal& ideal);
bool idealContains(const Ideal& ideal, const Poly& f);

// f in rad(I), decided by the Rabinowitsch trick (1 in I + (1 - t f)) after
// cheap small-power membership probes.
bool radicalContains(const Ideal& ideal, const Poly& f);

// Every generator of J lies in rad(I); equality is both containments.
bool idealRadicalContains(const Ideal& I, const Ideal& J);
bool radicalEquals(const Ideal& I, const Ideal& J);

}  // namespace tca
