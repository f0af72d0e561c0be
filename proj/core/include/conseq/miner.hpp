#pragma once
// Small-carrier search for structures separating explosion principles.
//
// The searcher works on bare structures ⟨carrier, consequence table⟩. Every
// supported principle depends only on WHICH subsets explode (the structure's
// trivial pattern), so minimal witnesses are found by scanning the 2^(2^n)
// patterns instead of the (2^n)^(2^n) tables; realize_trivial_pattern turns
// any pattern into a concrete table. Operator requirements (ecq) additionally
// search the n^n unary operator tables. Finds are canonicalized up to carrier
// relabeling and re-verified with the exact checkers before being returned.
//
// Not supported in queries: gentle_explosion and lfi (they need a formula
// algebra), bot_ecq required Proven (mining does not synthesize constants).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conseq/finite_structure.hpp"
#include "conseq/principles.hpp"

namespace conseq {

// Requirements on the Tarskian character of candidate structures. An engaged
// flag must match exactly; disengaged flags are unconstrained.
struct StructuralFilters {
  std::optional<bool> reflexive;
  std::optional<bool> monotonic;
  std::optional<bool> transitive;

  bool any() const { return reflexive || monotonic || transitive; }
};

struct SeparationQuery {
  // Each entry pairs a principle with the status the witness must have.
  // At least one entry; statuses must be Proven or Refuted.
  std::vector<std::pair<PrincipleId, Status>> require;
  StructuralFilters structural_filters;
  int max_carrier = 4;  // sizes 1..4 scan exhaustively, 5..6 by random sampling
};

struct SeparationResult {
  std::optional<FiniteStructure> structure;  // empty when no witness was found
  int carrier_size = 0;                      // carrier of the witness, 0 when none
  // True when the outcome is conclusive: a found witness is carrier-minimal,
  // an empty result means no structure in range satisfies the query. Sampled
  // sizes and structural filters downgrade this to false (see detail).
  bool exhaustive = false;
  std::string detail;  // human-readable account of the scan
};

// Builds a structure whose exploding subsets are exactly the set bits of
// `pattern` (bit m describes the subset with element mask m). Every pattern
// is realizable: non-exploding subsets map to themselves, except that when
// the full set must not explode it maps to full-minus-one-element.
FiniteStructure realize_trivial_pattern(int n, std::uint64_t pattern);

// Lexicographically least consequence table over the n! carrier relabelings;
// unary operator tables and constants are relabeled along, ties pick the
// first permutation in lexicographic order. Element names are positional
// labels and stay put. Principle statuses are invariant under relabeling.
FiniteStructure canonicalize_structure(const FiniteStructure& s);

// Raw view of a candidate consequence table during enumeration: 2^size
// entries, entry m holding the consequence mask of the subset with mask m.
struct TableView {
  int size = 0;
  const std::uint32_t* table = nullptr;
};

struct EnumerationOptions {
  std::optional<std::uint64_t> sample;  // visit this many random tables instead
  std::uint64_t seed = 0;               // sampling is deterministic per seed
};

struct StreamSummary {
  std::uint64_t visited = 0;  // candidate tables generated
  std::uint64_t emitted = 0;  // candidates that passed the filters
  bool exhaustive = true;     // false when sampled or stopped early
};

// Streams consequence tables over an n-element carrier to `visit` (return
// false to stop early). n ≤ 3 may run the full space; n = 4 needs sampling
// or the generation-narrowing reflexive=true filter; n in {5, 6} needs
// sampling. Other sizes, or a missing sample where one is needed, raise
// std::invalid_argument.
StreamSummary enumerate_structures(int n, const StructuralFilters& filters,
                                   const std::function<bool(const TableView&)>& visit,
                                   const EnumerationOptions& options = {});

// Scans carrier sizes in ascending order for a structure meeting every
// requirement, so a hit is carrier-minimal among the conclusively scanned
// sizes. `seed` drives the sampling pass over sizes 5 and 6 when
// max_carrier exceeds 4.
SeparationResult find_separation(const SeparationQuery& query, std::uint64_t seed = 0);

}  // namespace conseq
