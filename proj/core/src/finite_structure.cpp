#include "conseq/finite_structure.hpp"

#include <sstream>
#include <stdexcept>

namespace conseq {

std::vector<std::string> default_element_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i < 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("e" + std::to_string(i));
    }
  }
  return names;
}

FiniteStructure::FiniteStructure(int n, std::vector<std::uint32_t> table,
                                 std::map<std::string, std::vector<std::uint8_t>> unary_ops,
                                 std::map<std::string, std::uint8_t> constants,
                                 std::vector<std::string> element_names)
    : n_(n),
      table_(std::move(table)),
      unary_ops_(std::move(unary_ops)),
      constants_(std::move(constants)),
      element_names_(std::move(element_names)) {
  if (n < 1 || n > 16) throw std::invalid_argument("carrier size must be in [1,16]");
  const std::size_t want = std::size_t{1} << n;
  if (table_.size() != want) {
    throw std::invalid_argument("consequence table must have 2^n entries, got " +
                                std::to_string(table_.size()));
  }
  for (std::uint32_t row : table_) {
    if (row > full_mask()) throw std::invalid_argument("table row is not a subset of the carrier");
  }
  for (const auto& [name, op] : unary_ops_) {
    if (op.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("unary op '" + name + "' must map every carrier element");
    }
    for (std::uint8_t v : op) {
      if (v >= n) throw std::invalid_argument("unary op '" + name + "' maps outside the carrier");
    }
  }
  for (const auto& [name, c] : constants_) {
    if (c >= n) throw std::invalid_argument("constant '" + name + "' is outside the carrier");
  }
  if (element_names_.empty()) {
    element_names_ = default_element_names(n);
  } else if (element_names_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("element_names must name every carrier element");
  }
}

std::uint32_t FiniteStructure::mask_of(const SentenceSet& gamma) const {
  if (!(gamma.carrier() == Carrier::finite(n_))) {
    throw std::domain_error("sentence set carrier does not match this structure");
  }
  std::uint32_t mask = 0;
  for (int i = 0; i < n_; ++i) {
    if (gamma.contains(i)) mask |= 1u << i;
  }
  return mask;
}

SentenceSet FiniteStructure::set_of(std::uint32_t mask) const {
  std::vector<std::int64_t> members;
  for (int i = 0; i < n_; ++i) {
    if (mask & (1u << i)) members.push_back(i);
  }
  return SentenceSet::finite(Carrier::finite(n_), std::move(members));
}

SentenceSet FiniteStructure::consequence(const SentenceSet& gamma) const {
  return set_of(consequence_mask(mask_of(gamma)));
}

bool FiniteStructure::is_trivial(const SentenceSet& gamma) const {
  return is_trivial_mask(mask_of(gamma));
}

std::uint64_t FiniteStructure::trivial_pattern() const {
  if (n_ > 6) throw std::invalid_argument("trivial_pattern requires carrier size <= 6");
  std::uint64_t pattern = 0;
  for (std::uint32_t m = 0; m <= full_mask(); ++m) {
    if (is_trivial_mask(m)) pattern |= std::uint64_t{1} << m;
  }
  return pattern;
}

std::string FiniteStructure::describe_mask(std::uint32_t mask) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (mask & (1u << i)) {
      if (!first) os << ',';
      os << element_names_[i];
      first = false;
    }
  }
  os << '}';
  return os.str();
}

TarskianReport tarskian_report(const FiniteStructure& s) {
  TarskianReport r{true, true, true, true};
  const std::uint32_t full = s.full_mask();
  for (std::uint32_t g = 0; g <= full; ++g) {
    const std::uint32_t cg = s.consequence_mask(g);
    if ((g & cg) != g) r.reflexive = false;
    // Monotonicity over supersets of g: enumerate sigma ⊇ g directly.
    const std::uint32_t rest = full & ~g;
    for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
      const std::uint32_t sigma = g | extra;
      if ((cg & s.consequence_mask(sigma)) != cg) {
        r.monotonic = false;
        if (cg == full) r.monotonic_for_trivial_sets = false;
      }
      if (extra == 0) break;
    }
    // Transitivity: sigma ⊆ C(g) implies C(sigma) ⊆ C(g).
    for (std::uint32_t sigma = cg;; sigma = (sigma - 1) & cg) {
      if ((s.consequence_mask(sigma) & ~cg) != 0) {
        r.transitive = false;
      }
      if (sigma == 0) break;
    }
    if (!r.reflexive && !r.monotonic && !r.transitive && !r.monotonic_for_trivial_sets) break;
  }
  return r;
}

}  // namespace conseq
