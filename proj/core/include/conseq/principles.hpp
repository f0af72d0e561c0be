#pragma once

// Checkers for the principles of explosion and paraconsistency notions.
//
// Three backends share one verdict vocabulary:
//   FiniteStructure  exact decisions by full enumeration over the powerset
//                    (carrier capped by Budget::carrier_cap);
//   Matrix           bounded checks over a deterministic formula pool, with
//                    witness-first search (constants, negation schemas)
//                    and a few documented exactness reductions
//                    (substitution-stable principles decided at a variable);
//   RuleStructure    inner existentials answered by the structure's
//                    triviality oracle, outer universals ranged over a
//                    deterministic finite/cofinite family.
//
// Verdicts record their scope honestly: Exact means the stated quantifiers
// were decided in full (possibly through a reduction named in the note),
// Bounded means the scope_detail describes exactly what was searched.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conseq/companions.hpp"
#include "conseq/finite_structure.hpp"
#include "conseq/formula.hpp"
#include "conseq/matrix.hpp"
#include "conseq/rule_structure.hpp"
#include "conseq/sets.hpp"

namespace conseq {

enum class PrincipleKind {
  Ecq,              // {α, op(α)} explodes for every α
  BotEcq,           // some declared constant explodes on its own
  Gecq,             // every α explodes with some β
  Secq,             // every α lies in a proper exploding set
  SecqPrime,        // equivalent reading: some Γ with Γ and Γ∪{α} proper, Γ∪{α} exploding
  Specq,            // every proper Γ extends by one element to a proper exploding set
  Pfecq,            // every proper Γ has a proper exploding superset
  Pfecq2,           // equivalent reading: some Δ proper with Γ∪Δ proper and exploding
  Pfecq3,           // hereditary reading: some nonempty Δ all of whose nonempty
                    // subsets keep Γ∪Δ′ exploding
  Parecq,           // some nonempty Γ and Δ where every α in Γ explodes with some β in Δ
  Parecq2,          // equivalent reading: a nonempty rectangle Γ×Δ of exploding pairs
  KPara,            // some α explodes with no member of the fixed set K
  NfPara,           // the negation-free notion: gECQ fails
  FinTriv,          // some finite set explodes (size-bounded search)
  GentleExplosion,  // ○(φ) ∪ {φ, ¬φ} explodes for every φ
  Lfi,              // paraconsistent with a consistency set: all three LFI clauses
};

struct PrincipleId {
  PrincipleKind kind = PrincipleKind::Gecq;
  std::string op_name;                   // Ecq: unary operator / connective
  std::vector<std::int64_t> k_elements;  // KPara: the finite set K
  int bound = 3;                         // FinTriv: size bound
  std::vector<std::string> circle;       // GentleExplosion / Lfi: the ○(p) formulas

  static PrincipleId ecq(std::string op);
  static PrincipleId bot_ecq();
  static PrincipleId gecq();
  static PrincipleId secq();
  static PrincipleId secq_prime();
  static PrincipleId specq();
  static PrincipleId pfecq();
  static PrincipleId pfecq2();
  static PrincipleId pfecq3();
  static PrincipleId parecq();
  static PrincipleId parecq2();
  static PrincipleId k_para(std::vector<std::int64_t> k);
  static PrincipleId nf_para();
  static PrincipleId fin_triv(int bound);
  static PrincipleId gentle_explosion(std::vector<std::string> circle);
  static PrincipleId lfi(std::vector<std::string> circle);

  std::string to_string() const;
};

// Parses the CLI principle syntax: plain names ("gecq", "nf_para", ...),
// "ecq:OP" ("neg" is accepted for "¬"), "k_para:1,2", "fin_triv:N",
// "gentle_explosion:F1;F2", "lfi:F1;F2". Plain "ecq" defaults to op "¬",
// plain "fin_triv" to bound 3. Returns nullopt on unknown syntax.
std::optional<PrincipleId> parse_principle(const std::string& text);

enum class Status { Proven, Refuted, Unknown };
enum class ScopeKind { Exact, Bounded };

const char* to_string(Status s);
const char* to_string(ScopeKind k);

struct Witness {
  std::string description;                  // human-readable summary
  std::map<std::string, std::string> data;  // machine fields (formulas printed,
                                            // element sets as comma lists)
  bool empty() const { return description.empty() && data.empty(); }
};

struct Verdict {
  Status status = Status::Unknown;
  ScopeKind scope = ScopeKind::Exact;
  std::string scope_detail;  // for Bounded: what exactly was searched
  Witness witness;
  std::string note;
  bool budget_exceeded = false;
};

struct Budget {
  int pool_vars = 2;
  int pool_depth = 3;
  int max_set_size = 3;          // premise-set size bound for pool subsets
  std::size_t pool_cap = 200000; // refuse to materialize pools beyond this
  int sample_formulas = 60;      // outer-universal formula sample size
  int sample_sets = 60;          // rule-structure set-family size
  int sample_elements = 40;      // rule-structure element sample size
  std::uint64_t seed = 0;
  int subset_cap = 12;
  int jobs = 1;
  int carrier_cap = 6;           // finite-structure exact checks refuse beyond this
};

Verdict check(const FiniteStructure& s, const PrincipleId& p, const Budget& b = {});
Verdict check(const Matrix& m, const PrincipleId& p, const Budget& b = {});
Verdict check(const RuleStructure& s, const PrincipleId& p, const Budget& b = {});

// The companion relation of `base` in the given mode, checked like a matrix
// logic but through entails_companion / companion_trivializes.
Verdict check_companion(const Matrix& base, CompanionMode mode, const PrincipleId& p,
                        const Budget& b = {}, const CompanionOptions& options = {});

// QN(α): everything that explodes together with α. Exact on finite
// structures; bounded by the pool on matrices.
SentenceSet quasi_negations(const FiniteStructure& s, std::int64_t alpha);
std::vector<Formula> quasi_negations(const Matrix& m, const Formula& alpha,
                                     const Budget& b = {});

// The three LFI clauses for a candidate consistency set ○(p) (formulas in
// the single variable p):
//   (i)   some φ with {φ, ¬φ} not exploding,
//   (ii)  some α, β with β outside both C(○(α)∪{α}) and C(○(α)∪{¬α}),
//   (iii) ○(φ) ∪ {φ, ¬φ} explodes for every φ.
// All three are decided exactly at the variable p: the sets involved are
// substitution instances of their p-versions, and matrix triviality is
// substitution-stable, so the p-instance settles the general quantifier.
struct LfiReport {
  Verdict paraconsistency;    // clause (i)
  Verdict controlled_pair;    // clause (ii)
  Verdict gentle_explosion;   // clause (iii)
  Verdict overall;
};

LfiReport verify_lfi(const Matrix& m, const std::string& neg_op,
                     const std::vector<Formula>& circle_p);

// First single-formula ○(p) = {ψ(p)} in pool order (one variable, depth
// bounded) for which verify_lfi proves all three clauses.
std::optional<Formula> find_consistency_set(const Matrix& m, const std::string& neg_op,
                                            int depth_bound);

// Literal quantifier readings of the two partial-explosion phrasings,
// exact; the production checker decides both via the trivial-pair scan, and
// these exist so the equivalence is testable rather than assumed.
bool parecq1_literal(const FiniteStructure& s);
bool parecq2_literal(const FiniteStructure& s);

// Pool variable names p, q, r, s, then v4, v5, ...
std::vector<std::string> pool_variable_names(int count);

// Deterministic sample of pool formulas: the whole pool when it fits the
// sample budget, otherwise a seeded draw from the pool's first
// Budget::pool_cap formulas. Appends a description of the choice to
// `description`.
std::vector<Formula> sample_pool_formulas(const PoolEnumerator& pool, const Budget& b,
                                          std::string& description);

// Deterministic finite/cofinite family over a countable carrier: for each
// size 0..max_set_size, the finite subsets of a fixed window of the carrier,
// then the cofinite sets excluding those subsets, truncated to
// Budget::sample_sets entries.
std::vector<SentenceSet> rule_set_family(const Carrier& carrier, const Budget& b);

// Deterministic element sample (canonical carrier order; integers are
// interleaved 0, -1, 1, -2, 2, ...).
std::vector<std::int64_t> rule_element_sample(const Carrier& carrier, const Budget& b);

}  // namespace conseq
