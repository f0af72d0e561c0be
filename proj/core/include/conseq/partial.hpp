// Complementary pairs of sentence sets over a finite structure.
//
// A pair (Γ, Δ) is complementary when every (α, β) in Γ×Δ explodes, and
// weakly complementary when every α in Γ explodes with some β in Δ. The
// weakly complementary pairs with Γ nonempty and Γ∩Δ = ∅ form a poset
// under componentwise inclusion; its maximal elements always have
// Δ = 𝓛∖Γ, since enlarging Δ never breaks weak complementarity.

#pragma once

#include <vector>

#include "conseq/finite_structure.hpp"
#include "conseq/sets.hpp"

namespace conseq {

struct PairCandidate {
  SentenceSet gamma;
  SentenceSet delta;
};

// Exact pair scan; weak selects the weakly complementary reading. An empty
// gamma is vacuously complementary either way. Throws std::invalid_argument
// when the sets are not finite sets over the structure's carrier.
bool is_complementary(const FiniteStructure& s, const PairCandidate& p, bool weak);

// Componentwise inclusion, the partial order on disjoint weakly
// complementary pairs.
bool pair_preceq(const PairCandidate& a, const PairCandidate& b);

// All weakly complementary pairs with gamma nonempty and gamma∩delta = ∅,
// in deterministic (gamma mask, delta mask) order. Requires n <= 6; throws
// std::length_error beyond that.
std::vector<PairCandidate> weakly_complementary_disjoint_pairs(const FiniteStructure& s);

// All maximal elements of that poset, in the same deterministic order.
// Computed by saturating seed pairs ({α}, {β}) under single-element growth
// steps and keeping the pairs with no successor.
std::vector<PairCandidate> maximal_complementary_pairs(const FiniteStructure& s);

}  // namespace conseq
