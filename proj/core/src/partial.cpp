#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "conseq/partial.hpp"

namespace conseq {

namespace {

std::uint32_t bit(int i) { return 1u << i; }

std::uint32_t mask_of_member(const FiniteStructure& s, const SentenceSet& set,
                             const char* which) {
  if (set.kind() != SentenceSet::Kind::Finite || !set.carrier().is_finite() ||
      set.carrier().size != s.size()) {
    throw std::invalid_argument(std::string(which) +
                                " must be a finite set over the structure's carrier");
  }
  std::uint32_t mask = 0;
  for (std::int64_t v : set.values()) mask |= bit(static_cast<int>(v));
  return mask;
}

bool pair_trivial(const FiniteStructure& s, int a, int b) {
  return s.is_trivial_mask(bit(a) | bit(b));
}

// Weak complementarity on masks: every member of g explodes with some
// member of d.
bool weakly_complementary_masks(const FiniteStructure& s, std::uint32_t g, std::uint32_t d) {
  for (int a = 0; a < s.size(); ++a) {
    if (!((g >> a) & 1u)) continue;
    bool found = false;
    for (int b = 0; b < s.size() && !found; ++b) {
      if ((d >> b) & 1u) found = pair_trivial(s, a, b);
    }
    if (!found) return false;
  }
  return true;
}

PairCandidate make_pair(const FiniteStructure& s, std::uint32_t g, std::uint32_t d) {
  const Carrier carrier = Carrier::finite(s.size());
  std::vector<std::int64_t> gv;
  std::vector<std::int64_t> dv;
  for (int i = 0; i < s.size(); ++i) {
    if ((g >> i) & 1u) gv.push_back(i);
    if ((d >> i) & 1u) dv.push_back(i);
  }
  return PairCandidate{SentenceSet::finite(carrier, gv), SentenceSet::finite(carrier, dv)};
}

void require_small(const FiniteStructure& s) {
  if (s.size() > 6) {
    throw std::length_error("pair-lattice enumeration is limited to carriers of size 6");
  }
}

// Enumerates the disjoint weakly complementary pairs with nonempty gamma as
// (g, d) mask pairs, flagging the maximal ones. A pair has a successor
// exactly when some element outside g∪d can join d (always allowed) or can
// join g (needs a partner in d); hence maximal pairs cover the carrier.
std::vector<std::pair<std::uint32_t, std::uint32_t>> member_masks(const FiniteStructure& s,
                                                                  bool only_maximal) {
  const std::uint32_t full = s.full_mask();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t g = 1; g <= full; ++g) {
    // d ranges over subsets of the complement of g.
    const std::uint32_t rest = full & ~g;
    std::uint32_t d = 0;
    while (true) {
      if (weakly_complementary_masks(s, g, d)) {
        // Maximal ⟺ covering: any outside element could always join d,
        // so a pair with outside elements has a strictly larger member.
        const bool maximal = (g | d) == full;
        if (!only_maximal || maximal) out.emplace_back(g, d);
      }
      if (d == rest) break;
      d = (d - rest) & rest;  // next subset of rest
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_complementary(const FiniteStructure& s, const PairCandidate& p, bool weak) {
  const std::uint32_t g = mask_of_member(s, p.gamma, "gamma");
  const std::uint32_t d = mask_of_member(s, p.delta, "delta");
  if (weak) return weakly_complementary_masks(s, g, d);
  for (int a = 0; a < s.size(); ++a) {
    if (!((g >> a) & 1u)) continue;
    for (int b = 0; b < s.size(); ++b) {
      if (((d >> b) & 1u) && !pair_trivial(s, a, b)) return false;
    }
  }
  return true;
}

bool pair_preceq(const PairCandidate& a, const PairCandidate& b) {
  return is_subset(a.gamma, b.gamma) && is_subset(a.delta, b.delta);
}

std::vector<PairCandidate> weakly_complementary_disjoint_pairs(const FiniteStructure& s) {
  require_small(s);
  std::vector<PairCandidate> out;
  for (const auto& [g, d] : member_masks(s, false)) out.push_back(make_pair(s, g, d));
  return out;
}

std::vector<PairCandidate> maximal_complementary_pairs(const FiniteStructure& s) {
  require_small(s);
  // Saturation from seed pairs ({α}, {β}) with {α, β} exploding and α ≠ β:
  // every member of the poset lies above such a seed, and single-element
  // growth steps reach all of it. Rather than materializing the BFS queue we
  // use the successor analysis directly: a pair is maximal iff it covers the
  // carrier, because any outside element can always join delta.
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> reached;
  const std::uint32_t full = s.full_mask();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> frontier;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (a != b && pair_trivial(s, a, b)) frontier.emplace_back(bit(a), bit(b));
    }
  }
  for (const auto& seed : frontier) reached[seed] = true;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> maximal;
  while (!frontier.empty()) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
    for (const auto& [g, d] : frontier) {
      bool grew = false;
      const std::uint32_t outside = full & ~(g | d);
      for (int e = 0; e < s.size(); ++e) {
        if (!((outside >> e) & 1u)) continue;
        grew = true;
        // e can always join delta.
        const auto dgrow = std::make_pair(g, d | bit(e));
        if (!reached[dgrow]) {
          reached[dgrow] = true;
          next.push_back(dgrow);
        }
        // e can join gamma if it has a partner in delta.
        bool has_partner = false;
        for (int b = 0; b < s.size() && !has_partner; ++b) {
          if ((d >> b) & 1u) has_partner = pair_trivial(s, e, b);
        }
        if (has_partner) {
          const auto ggrow = std::make_pair(g | bit(e), d);
          if (!reached[ggrow]) {
            reached[ggrow] = true;
            next.push_back(ggrow);
          }
        }
      }
      if (!grew) maximal.emplace_back(g, d);  // covers the carrier
    }
    frontier = std::move(next);
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  std::vector<PairCandidate> out;
  out.reserve(maximal.size());
  for (const auto& [g, d] : maximal) out.push_back(make_pair(s, g, d));
  return out;
}

}  // namespace conseq
