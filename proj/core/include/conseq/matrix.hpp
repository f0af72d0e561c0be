// Finite logical matrices: a finite algebra of truth values with a proper
// designated subset. Entailment is designation preservation over all
// valuations of the occurring variables.
//
// Triviality ("C(Γ) = everything") reduces to unsatisfiability: because
// the designated set is a proper subset of the values, a fresh variable
// can always take an undesignated value, so Γ entails every formula iff
// no valuation of vars(Γ) designates all of Γ. The constructor enforces
// designated ⊊ values precisely because this reduction is unsound
// without it.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conseq/formula.hpp"

namespace conseq {

class Matrix {
 public:
  // tables: one entry per connective, flattened row-major
  // (index = v1*n^(k-1) + ... + vk for arity k; a single entry for
  // constants). designated must be nonempty and a proper subset of
  // {0..num_values-1}.
  Matrix(Signature sig, int num_values, std::vector<int> designated,
         std::map<std::string, std::vector<std::uint8_t>> tables,
         std::vector<std::string> value_names = {});

  const Signature& signature() const { return sig_; }
  int num_values() const { return num_values_; }
  bool is_designated(int v) const { return designated_mask_ >> v & 1; }
  const std::vector<std::string>& value_names() const { return value_names_; }
  const std::map<std::string, std::vector<std::uint8_t>>& tables() const { return tables_; }

  int evaluate(const Formula& f, const std::map<std::string, int>& valuation) const;

  // Values of f under all |values|^k valuations of var_order, the i-th
  // entry corresponding to the base-|values| digits of i (var_order[0] is
  // the least significant digit).
  std::vector<std::uint8_t> value_vector(const Formula& f,
                                         const std::vector<std::string>& var_order) const;

  bool entails(const std::vector<Formula>& premises, const Formula& conclusion) const;
  bool trivializes(const std::vector<Formula>& gamma) const;
  // Equal to trivializes: unsatisfiability is substitution-stable (v∘σ is
  // again a valuation), and the identity substitution gives the converse.
  bool is_antitheorem(const std::vector<Formula>& sigma) const;

  // Valuation-space cap: entails/trivializes refuse more distinct
  // variables than this (cost is |values|^k).
  int var_cap() const { return var_cap_; }
  void set_var_cap(int cap) { var_cap_ = cap; }

 private:
  const std::vector<std::uint8_t>& table_for(const std::string& conn) const;
  int eval_node(const Formula& f, const std::vector<int>& assignment,
                const std::map<std::string, int>& var_index) const;

  Signature sig_;
  int num_values_;
  std::uint32_t designated_mask_ = 0;
  std::map<std::string, std::vector<std::uint8_t>> tables_;
  std::vector<std::string> value_names_;
  int var_cap_ = 8;
};

}  // namespace conseq
