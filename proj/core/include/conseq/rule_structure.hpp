// Rule-defined structures over countable carriers.
//
// These capture logics whose consequence operator is given by a case rule
// on an infinite carrier (e.g. "C(Γ) = L when Γ is an interval {n..2n},
// otherwise Γ"). Consequence is computable on finite/cofinite inputs, and a
// triviality oracle answers the existential questions the principle
// checkers need. oracle_complete records whether the oracle characterizes
// ALL trivial sets (a meta-level fact justified where the structure is
// constructed); checkers downgrade oracle-negative-dependent verdicts to
// Unknown when it is false.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "conseq/sets.hpp"

namespace conseq {

struct TrivialityOracle {
  std::function<bool(const SentenceSet&)> is_trivial;
  // Is there a trivial Δ ⊇ gamma (Δ a proper subset of the carrier when
  // proper is true)?
  std::function<bool(const SentenceSet& gamma, bool proper)> exists_trivial_superset;
  // Is there an α with gamma ∪ {α} a proper trivial subset of the carrier?
  std::function<bool(const SentenceSet& gamma)> exists_trivial_one_extension;
  // Is there a β with {alpha, β} trivial?
  std::function<bool(std::int64_t alpha)> exists_trivial_pair_containing;
};

struct RuleStructure {
  std::string name;
  std::string description;
  Carrier carrier;
  std::function<SentenceSet(const SentenceSet&)> consequence;
  TrivialityOracle oracle;
  bool oracle_complete = false;
  std::map<std::string, std::function<std::int64_t(std::int64_t)>> unary_ops;
};

inline SentenceSet consequence(const RuleStructure& s, const SentenceSet& gamma) {
  return s.consequence(gamma);
}

inline bool is_trivial(const RuleStructure& s, const SentenceSet& gamma) {
  return s.oracle.is_trivial(gamma);
}

}  // namespace conseq
