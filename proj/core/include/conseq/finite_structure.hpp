// Explicit consequence tables over a finite carrier.
//
// Subsets of the carrier {0..n-1} are bitmasks; the consequence operator is
// stored as a table indexed by mask. A set is trivial ("explodes") when its
// consequence is the full carrier. Structures may name unary operators on
// the carrier (for operator-relative explosion checks) and constants.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conseq/sets.hpp"

namespace conseq {

struct TarskianReport {
  bool reflexive = false;
  bool monotonic = false;
  bool transitive = false;
  bool monotonic_for_trivial_sets = false;
};

class FiniteStructure {
 public:
  // table must have exactly 2^n entries, each a subset mask of {0..n-1}.
  // Carrier size is capped at 16 (65536-entry tables); exhaustive
  // quantifier-pair checks elsewhere are only advertised up to n = 6.
  FiniteStructure(int n, std::vector<std::uint32_t> table,
                  std::map<std::string, std::vector<std::uint8_t>> unary_ops = {},
                  std::map<std::string, std::uint8_t> constants = {},
                  std::vector<std::string> element_names = {});

  int size() const { return n_; }
  std::uint32_t full_mask() const { return (1u << n_) - 1u; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  std::uint32_t consequence_mask(std::uint32_t gamma) const { return table_[gamma]; }
  bool is_trivial_mask(std::uint32_t gamma) const { return table_[gamma] == full_mask(); }

  SentenceSet consequence(const SentenceSet& gamma) const;
  bool is_trivial(const SentenceSet& gamma) const;

  std::uint32_t mask_of(const SentenceSet& gamma) const;
  SentenceSet set_of(std::uint32_t mask) const;

  const std::map<std::string, std::vector<std::uint8_t>>& unary_ops() const { return unary_ops_; }
  const std::map<std::string, std::uint8_t>& constants() const { return constants_; }
  const std::vector<std::string>& element_names() const { return element_names_; }
  const std::string& element_name(int i) const { return element_names_[i]; }

  // Bit m set iff the subset with mask m is trivial. Requires n <= 6
  // (at most 64 subsets).
  std::uint64_t trivial_pattern() const;

  std::string describe_mask(std::uint32_t mask) const;

 private:
  int n_;
  std::vector<std::uint32_t> table_;
  std::map<std::string, std::vector<std::uint8_t>> unary_ops_;
  std::map<std::string, std::uint8_t> constants_;
  std::vector<std::string> element_names_;
};

// All four flags exact, by full enumeration over subset pairs.
TarskianReport tarskian_report(const FiniteStructure& s);

// Default element names a, b, c, ... (falling back to e<i> past 26).
std::vector<std::string> default_element_names(int n);

}  // namespace conseq
