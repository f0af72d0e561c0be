#pragma once

// Built-in logics and structures.
//
// Matrices: cpc (two-valued Boolean), pwk and b3 (weak Kleene with,
// respectively, the middle value designated or not), lp and pac (strong
// Kleene; pac adds a detaching conditional), p1 (three-valued over negation
// and implication, two designated values).
//
// Finite structures: purely reflexive consequence, consequence relations
// read off a partial order (directly or through valuation maps into a
// poset), and structures induced by a user-supplied closure-like table.
//
// Rule structures: countable-carrier logics whose trivial sets have an
// exact finite description; each ships a complete triviality oracle derived
// from that description.
//
// Builtin names ("cpc", "ex-3-10", ...) are a stable CLI contract.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "conseq/finite_structure.hpp"
#include "conseq/formula.hpp"
#include "conseq/matrix.hpp"
#include "conseq/rule_structure.hpp"

namespace conseq {

// Connectives ¬ ∧ ∨ → ⊥ with ASCII aliases ~  /\  \/  ->  _|_ .
Signature full_signature();
// ¬ ∧ ∨ → (no falsity constant).
Signature bottom_free_signature();
// ¬ ∧ ∨.
Signature lp_signature();
// ¬ →.
Signature p1_signature();

Matrix cpc_matrix();
Matrix pwk_matrix();
Matrix b3_matrix();
Matrix lp_matrix();
Matrix pac_matrix();
Matrix p1_matrix();

// C(Γ) = Γ for every Γ.
FiniteStructure pure_reflexive(int n);

// A finite partial order on {0..n-1}. The order relation must be given in
// full (reflexive pairs included); the constructor validates reflexivity,
// antisymmetry, and transitivity and throws std::invalid_argument on any
// violation.
class Poset {
 public:
  Poset(int size, const std::vector<std::pair<int, int>>& order);

  int size() const { return size_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size_ + b] != 0; }

  static Poset antichain(int n);  // only the reflexive pairs
  static Poset chain(int n);      // 0 <= 1 <= ... <= n-1

 private:
  int size_;
  std::vector<char> leq_;
};

enum class PosetDirection { Forward, Backward };

// Carrier = the poset's elements; Γ entails φ iff every γ in Γ satisfies
// γ <= φ (Forward) or φ <= γ (Backward). Note C(∅) is the full carrier
// (vacuous quantification), so the empty set always explodes here.
FiniteStructure poset_logic(const Poset& p, PosetDirection direction);

// Γ entails α iff v(β) <= v(α) for every valuation v in vs and every β in
// Γ. Each valuation maps the carrier {0..carrier_size-1} into the poset and
// must be total; vs must be nonempty.
FiniteStructure poset_valuation_logic(int carrier_size, const Poset& p,
                                      const std::vector<std::vector<int>>& vs);

struct QConsResult {
  FiniteStructure structure;  // consequence table = w itself
  // Whether w is monotone and satisfies w(Γ ∪ w(Γ)) = w(Γ) for all Γ;
  // both conditions checked exactly over the whole table.
  bool is_valid_qcons = false;
};

QConsResult qcons_structure(int n, std::vector<std::uint32_t> w_table);

// Rule structures (builtin names in parentheses).
//
// Positive naturals; trivial sets: the blocks {n,...,2n} and the full
// carrier. ("ex-3-5")
RuleStructure doubling_block_structure();
// Naturals; trivial sets: exactly the infinite ones. ("ex-3-9")
RuleStructure infinite_trigger_structure();
// Naturals; trivial sets: the adjacent pairs {n,n+1} and the full carrier.
// ("ex-3-10")
RuleStructure adjacent_pair_structure();
// Integers with unary operator f(n) = -n; trivial sets: the nonempty sets
// closed under f. ("ex-3-13")
RuleStructure negation_closed_structure();
// Naturals; finite sets are fixed points, infinite sets explode. Same
// operator as infinite_trigger_structure, kept as a separate builtin
// because it plays a different role (a logic that is not finitely
// trivializable yet satisfies the set-based explosion principles).
// ("ex-3-17")
RuleStructure finite_fixed_point_structure();

struct BuiltinInfo {
  std::string name;         // stable CLI name
  std::string params;       // parameter help text, empty when none
  std::string kind;         // "matrix" | "finite" | "rule"
  std::string description;  // behavior summary
};

const std::vector<BuiltinInfo>& list_builtins();

using Logic = std::variant<FiniteStructure, Matrix, RuleStructure>;

const char* logic_kind_name(const Logic& logic);  // "finite" | "matrix" | "rule"

// Loads "name" or "name:param" (integer parameters only; structured
// parameters go through the JSON logic-spec format). Unknown names or
// malformed parameters throw std::invalid_argument.
Logic load_builtin(const std::string& id);

}  // namespace conseq
