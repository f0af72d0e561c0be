// Carriers and finite/cofinite sentence sets.
//
// A logical structure lives over a carrier of sentences: either a finite
// index set {0..n-1} or one of three countable tags (naturals, naturals
// starting at 1, integers). Sets of sentences are represented exactly as
// either a finite list of members or a cofinite set given by its finite
// list of excluded members, so complementation and the usual set algebra
// stay closed and decidable.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conseq {

enum class CarrierKind {
  Finite,           // {0, 1, ..., size-1}
  NaturalsFromOne,  // {1, 2, 3, ...}
  Naturals,         // {0, 1, 2, ...}
  Integers,         // {..., -1, 0, 1, ...}
};

struct Carrier {
  CarrierKind kind = CarrierKind::Finite;
  int size = 0;  // meaningful only when kind == Finite

  static Carrier finite(int n);
  static Carrier naturals_from_one() { return {CarrierKind::NaturalsFromOne, 0}; }
  static Carrier naturals() { return {CarrierKind::Naturals, 0}; }
  static Carrier integers() { return {CarrierKind::Integers, 0}; }

  bool is_finite() const { return kind == CarrierKind::Finite; }
  bool contains(std::int64_t v) const;
  std::string to_string() const;

  friend bool operator==(const Carrier&, const Carrier&) = default;
};

// A finite or cofinite set of sentences over a fixed carrier.
//
// values() is always sorted and duplicate-free. For Kind::Finite it lists
// the members; for Kind::Cofinite it lists the excluded carrier elements.
// Cofinite representation is only used on countable carriers; constructors
// normalize cofinite input over finite carriers into the finite form.
class SentenceSet {
 public:
  enum class Kind { Finite, Cofinite };

  static SentenceSet finite(Carrier carrier, std::vector<std::int64_t> members);
  static SentenceSet cofinite(Carrier carrier, std::vector<std::int64_t> excluded);
  static SentenceSet empty(Carrier carrier) { return finite(carrier, {}); }
  static SentenceSet full(Carrier carrier);

  Kind kind() const { return kind_; }
  const Carrier& carrier() const { return carrier_; }
  const std::vector<std::int64_t>& values() const { return values_; }

  bool contains(std::int64_t v) const;
  bool is_empty() const;
  bool is_full() const;
  bool is_proper_subset_of_carrier() const { return !is_full(); }
  // Number of members; nullopt when the set is infinite.
  std::optional<std::size_t> member_count() const;

  SentenceSet complement() const;
  SentenceSet with(std::int64_t v) const;     // this ∪ {v}
  SentenceSet without(std::int64_t v) const;  // this \ {v}

  std::string to_string() const;

  friend SentenceSet set_union(const SentenceSet& a, const SentenceSet& b);
  friend SentenceSet set_intersection(const SentenceSet& a, const SentenceSet& b);
  friend SentenceSet set_difference(const SentenceSet& a, const SentenceSet& b);
  friend bool is_subset(const SentenceSet& a, const SentenceSet& b);
  friend bool operator==(const SentenceSet& a, const SentenceSet& b);

 private:
  SentenceSet(Kind kind, Carrier carrier, std::vector<std::int64_t> values);
  static void require_same_carrier(const SentenceSet& a, const SentenceSet& b);

  Kind kind_ = Kind::Finite;
  Carrier carrier_;
  std::vector<std::int64_t> values_;
};

}  // namespace conseq
