#include "conseq/companions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace conseq {

std::string to_string(CompanionMode mode) {
  switch (mode) {
    case CompanionMode::Left: return "left";
    case CompanionMode::PureLeft: return "pure_left";
    case CompanionMode::Right: return "right";
    case CompanionMode::PureRight: return "pure_right";
  }
  return "?";
}

bool parse_companion_mode(const std::string& text, CompanionMode& out) {
  if (text == "left") { out = CompanionMode::Left; return true; }
  if (text == "pure_left") { out = CompanionMode::PureLeft; return true; }
  if (text == "right") { out = CompanionMode::Right; return true; }
  if (text == "pure_right") { out = CompanionMode::PureRight; return true; }
  return false;
}

namespace {

bool vars_included(const std::set<std::string>& sub, const std::set<std::string>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

void check_subset_cap(std::size_t n, int cap) {
  if (n > static_cast<std::size_t>(cap)) {
    throw std::length_error("subset search over " + std::to_string(n) +
                            " premises exceeds the cap of " + std::to_string(cap));
  }
}

// Searches the subsets of `candidates` for one accepted by `good`.
// `allow_empty` controls whether the empty subset is tried.
template <typename Pred>
bool some_subset(const std::vector<Formula>& candidates, bool allow_empty, const Pred& good) {
  const std::size_t n = candidates.size();
  std::vector<Formula> subset;
  subset.reserve(n);
  const std::uint64_t first = allow_empty ? 0 : 1;
  for (std::uint64_t mask = first; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(candidates[i]);
    }
    if (good(subset)) return true;
  }
  return false;
}

}  // namespace

bool entails_companion(const Matrix& base, CompanionMode mode,
                       const std::vector<Formula>& premises, const Formula& conclusion,
                       const CompanionOptions& options) {
  const std::set<std::string> conclusion_vars = vars(conclusion);
  switch (mode) {
    case CompanionMode::Left:
    case CompanionMode::PureLeft: {
      std::vector<Formula> candidates;
      for (const Formula& p : premises) {
        if (vars_included(vars(p), conclusion_vars)) candidates.push_back(p);
      }
      check_subset_cap(candidates.size(), options.subset_cap);
      const bool allow_empty = mode == CompanionMode::Left;
      return some_subset(candidates, allow_empty, [&](const std::vector<Formula>& delta) {
        return base.entails(delta, conclusion);
      });
    }
    case CompanionMode::Right:
    case CompanionMode::PureRight: {
      const std::set<std::string> premise_vars = vars(premises);
      if (vars_included(conclusion_vars, premise_vars) && base.entails(premises, conclusion)) {
        return true;
      }
      if (mode == CompanionMode::PureRight) return false;
      if (options.strict_right_whole_set) return base.is_antitheorem(premises);
      check_subset_cap(premises.size(), options.subset_cap);
      return some_subset(premises, false, [&](const std::vector<Formula>& delta) {
        return base.is_antitheorem(delta);
      });
    }
  }
  return false;
}

bool companion_trivializes(const Matrix& base, CompanionMode mode,
                           const std::vector<Formula>& gamma,
                           const CompanionOptions& options) {
  const Formula fresh = Formula::var(fresh_variable(vars(gamma)));
  return entails_companion(base, mode, gamma, fresh, options);
}

}  // namespace conseq
