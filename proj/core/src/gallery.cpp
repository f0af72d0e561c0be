#include "conseq/gallery.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace conseq {

Signature full_signature() {
  return Signature({
      {"¬", 1, Fixity::Prefix, {"~"}},
      {"∧", 2, Fixity::Infix, {"/\\"}},
      {"∨", 2, Fixity::Infix, {"\\/"}},
      {"→", 2, Fixity::Infix, {"->"}},
      {"⊥", 0, Fixity::Constant, {"_|_"}},
  });
}

Signature bottom_free_signature() {
  return Signature({
      {"¬", 1, Fixity::Prefix, {"~"}},
      {"∧", 2, Fixity::Infix, {"/\\"}},
      {"∨", 2, Fixity::Infix, {"\\/"}},
      {"→", 2, Fixity::Infix, {"->"}},
  });
}

Signature lp_signature() {
  return Signature({
      {"¬", 1, Fixity::Prefix, {"~"}},
      {"∧", 2, Fixity::Infix, {"/\\"}},
      {"∨", 2, Fixity::Infix, {"\\/"}},
  });
}

Signature p1_signature() {
  return Signature({
      {"¬", 1, Fixity::Prefix, {"~"}},
      {"→", 2, Fixity::Infix, {"->"}},
  });
}

Matrix cpc_matrix() {
  return Matrix(full_signature(), 2, {1},
                {
                    {"¬", {1, 0}},
                    {"∧", {0, 0, 0, 1}},
                    {"∨", {0, 1, 1, 1}},
                    {"→", {1, 1, 0, 1}},
                    {"⊥", {0}},
                },
                {"0", "1"});
}

namespace {

// Weak Kleene over f=0, e=1, t=2: any operation with an e input yields e,
// otherwise the classical value.
std::map<std::string, std::vector<std::uint8_t>> weak_kleene_tables() {
  return {
      {"¬", {2, 1, 0}},
      {"∧", {0, 1, 0, 1, 1, 1, 0, 1, 2}},
      {"∨", {0, 1, 2, 1, 1, 1, 2, 1, 2}},
      {"→", {2, 1, 2, 1, 1, 1, 0, 1, 2}},
      {"⊥", {0}},
  };
}

// Strong Kleene over f=0, b=1, t=2: ∧ = min, ∨ = max, ¬ reverses.
std::map<std::string, std::vector<std::uint8_t>> strong_kleene_tables() {
  return {
      {"¬", {2, 1, 0}},
      {"∧", {0, 0, 0, 0, 1, 1, 0, 1, 2}},
      {"∨", {0, 1, 2, 1, 1, 2, 2, 2, 2}},
  };
}

}  // namespace

Matrix pwk_matrix() {
  return Matrix(full_signature(), 3, {1, 2}, weak_kleene_tables(), {"f", "e", "t"});
}

Matrix b3_matrix() {
  return Matrix(full_signature(), 3, {2}, weak_kleene_tables(), {"f", "e", "t"});
}

Matrix lp_matrix() {
  return Matrix(lp_signature(), 3, {1, 2}, strong_kleene_tables(), {"f", "b", "t"});
}

Matrix pac_matrix() {
  auto tables = strong_kleene_tables();
  // Detaching conditional: f→y = t, b→y = y, t→y = y.
  tables["→"] = {2, 2, 2, 0, 1, 2, 0, 1, 2};
  return Matrix(bottom_free_signature(), 3, {1, 2}, std::move(tables), {"f", "b", "t"});
}

Matrix p1_matrix() {
  // Values T=0, T*=1, F=2; designated {T, T*}. Compound formulas only ever
  // take the classical values T and F, so explosion can fail only at
  // variables.
  return Matrix(p1_signature(), 3, {0, 1},
                {
                    {"¬", {2, 0, 0}},
                    {"→", {0, 0, 2, 0, 0, 2, 0, 0, 0}},
                },
                {"T", "T*", "F"});
}

FiniteStructure pure_reflexive(int n) {
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (std::size_t m = 0; m < table.size(); ++m) table[m] = static_cast<std::uint32_t>(m);
  return FiniteStructure(n, std::move(table));
}

Poset::Poset(int size, const std::vector<std::pair<int, int>>& order) : size_(size) {
  if (size_ < 1) throw std::invalid_argument("poset needs at least one element");
  leq_.assign(static_cast<std::size_t>(size_) * size_, 0);
  for (const auto& [a, b] : order) {
    if (a < 0 || a >= size_ || b < 0 || b >= size_) {
      throw std::invalid_argument("order pair outside the element range");
    }
    leq_[static_cast<std::size_t>(a) * size_ + b] = 1;
  }
  for (int i = 0; i < size_; ++i) {
    if (!leq(i, i)) {
      throw std::invalid_argument("order is not reflexive (missing " + std::to_string(i) +
                                  " <= " + std::to_string(i) + ")");
    }
  }
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        throw std::invalid_argument("order is not antisymmetric (" + std::to_string(i) +
                                    " and " + std::to_string(j) + " are mutually related)");
      }
    }
  }
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      if (!leq(i, j)) continue;
      for (int k = 0; k < size_; ++k) {
        if (leq(j, k) && !leq(i, k)) {
          throw std::invalid_argument("order is not transitive (" + std::to_string(i) + " <= " +
                                      std::to_string(j) + " <= " + std::to_string(k) +
                                      " but not " + std::to_string(i) + " <= " +
                                      std::to_string(k) + ")");
        }
      }
    }
  }
}

Poset Poset::antichain(int n) {
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < n; ++i) order.emplace_back(i, i);
  return Poset(n, order);
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) order.emplace_back(i, j);
  }
  return Poset(n, order);
}

FiniteStructure poset_logic(const Poset& p, PosetDirection direction) {
  const int n = p.size();
  const std::uint32_t full = (1u << n) - 1u;
  // above[g] = the set of φ such that Γ={g} entails φ.
  std::vector<std::uint32_t> above(n, 0);
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      const bool ok = direction == PosetDirection::Forward ? p.leq(g, f) : p.leq(f, g);
      if (ok) above[g] |= 1u << f;
    }
  }
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (std::uint32_t m = 0; m <= full; ++m) {
    std::uint32_t result = full;
    for (int g = 0; g < n; ++g) {
      if (m & (1u << g)) result &= above[g];
    }
    table[m] = result;
  }
  return FiniteStructure(n, std::move(table));
}

FiniteStructure poset_valuation_logic(int carrier_size, const Poset& p,
                                      const std::vector<std::vector<int>>& vs) {
  if (carrier_size < 1 || carrier_size > 16) {
    throw std::invalid_argument("carrier size must be in [1,16]");
  }
  if (vs.empty()) throw std::invalid_argument("the valuation set must be nonempty");
  for (const auto& v : vs) {
    if (v.size() != static_cast<std::size_t>(carrier_size)) {
      throw std::invalid_argument("each valuation must be total on the carrier");
    }
    for (int x : v) {
      if (x < 0 || x >= p.size()) {
        throw std::invalid_argument("valuation maps outside the poset");
      }
    }
  }
  const int n = carrier_size;
  const std::uint32_t full = (1u << n) - 1u;
  // above[b] = the set of α such that v(b) <= v(α) for every valuation v.
  std::vector<std::uint32_t> above(n, 0);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      bool ok = true;
      for (const auto& v : vs) {
        if (!p.leq(v[b], v[a])) {
          ok = false;
          break;
        }
      }
      if (ok) above[b] |= 1u << a;
    }
  }
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (std::uint32_t m = 0; m <= full; ++m) {
    std::uint32_t result = full;
    for (int b = 0; b < n; ++b) {
      if (m & (1u << b)) result &= above[b];
    }
    table[m] = result;
  }
  return FiniteStructure(n, std::move(table));
}

QConsResult qcons_structure(int n, std::vector<std::uint32_t> w_table) {
  FiniteStructure structure(n, std::move(w_table));
  const auto& w = structure.table();
  const std::uint32_t full = structure.full_mask();
  bool monotone = true;
  for (std::uint32_t gamma = 0; gamma <= full && monotone; ++gamma) {
    // Supersets of gamma: gamma | extra over submasks extra of ~gamma.
    const std::uint32_t rest = full & ~gamma;
    for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
      if ((w[gamma] & ~w[gamma | extra]) != 0) {
        monotone = false;
        break;
      }
      if (extra == 0) break;
    }
  }
  bool fixpoint = true;
  for (std::uint32_t gamma = 0; gamma <= full; ++gamma) {
    if (w[gamma | w[gamma]] != w[gamma]) {
      fixpoint = false;
      break;
    }
  }
  return {std::move(structure), monotone && fixpoint};
}

namespace {

bool is_contiguous_run(const std::vector<std::int64_t>& sorted_values) {
  for (std::size_t i = 1; i < sorted_values.size(); ++i) {
    if (sorted_values[i] != sorted_values[i - 1] + 1) return false;
  }
  return true;
}

// {n, n+1, ..., 2n} for some n >= 1.
bool is_doubling_block(const SentenceSet& s) {
  if (s.kind() != SentenceSet::Kind::Finite || s.is_empty()) return false;
  const auto& v = s.values();
  return is_contiguous_run(v) && v.back() == 2 * v.front();
}

bool is_adjacent_pair(const SentenceSet& s) {
  if (s.kind() != SentenceSet::Kind::Finite) return false;
  const auto& v = s.values();
  return v.size() == 2 && v[1] == v[0] + 1;
}

// Closed under x -> -x. Applies to the finite list at hand, so it tests the
// members of a Finite set or the excluded elements of a Cofinite one.
bool list_is_sign_symmetric(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [&](std::int64_t x) {
    return std::binary_search(v.begin(), v.end(), -x);
  });
}

bool is_nonempty_sign_symmetric(const SentenceSet& s) {
  if (s.is_empty()) return false;
  // A cofinite set is closed under negation iff its excluded list is.
  return list_is_sign_symmetric(s.values());
}

SentenceSet full_or_same(bool trivial, const SentenceSet& gamma) {
  return trivial ? SentenceSet::full(gamma.carrier()) : gamma;
}

}  // namespace

RuleStructure doubling_block_structure() {
  RuleStructure s;
  s.name = "ex-3-5";
  s.description =
      "positive naturals; a set explodes exactly when it is a block {n,...,2n} "
      "(or the whole carrier)";
  s.carrier = Carrier::naturals_from_one();
  // The consequence rule restates the block test inline so the oracle
  // consistency tests compare two independent transcriptions.
  s.consequence = [](const SentenceSet& gamma) {
    bool block = false;
    if (gamma.kind() == SentenceSet::Kind::Finite && !gamma.is_empty()) {
      const auto& v = gamma.values();
      block = is_contiguous_run(v) && v.back() == 2 * v.front();
    }
    return full_or_same(block, gamma);
  };
  s.oracle.is_trivial = [](const SentenceSet& g) { return g.is_full() || is_doubling_block(g); };
  s.oracle.exists_trivial_superset = [](const SentenceSet& gamma, bool proper) {
    if (!proper) return true;  // the full carrier always explodes
    if (gamma.kind() != SentenceSet::Kind::Finite) return false;
    if (gamma.is_empty()) return true;  // e.g. {1,2}
    // A block {n..2n} contains gamma iff ceil(max/2) <= n <= min.
    const std::int64_t lo = gamma.values().front();
    const std::int64_t hi = gamma.values().back();
    return (hi + 1) / 2 <= lo;
  };
  s.oracle.exists_trivial_one_extension = [](const SentenceSet& gamma) {
    if (gamma.kind() != SentenceSet::Kind::Finite || gamma.is_empty()) return false;
    const auto& v = gamma.values();
    const std::int64_t k = static_cast<std::int64_t>(v.size());
    // Already a block (then any α already in gamma works).
    if (is_contiguous_run(v) && v.back() == 2 * v.front()) return true;
    // Otherwise the extension must be the block {k..2k} (k+1 elements)
    // containing gamma with exactly one element missing.
    if (v.front() < k || v.back() > 2 * k) return false;
    return true;  // gamma ⊆ {k..2k} with |gamma| = k = |block| - 1
  };
  s.oracle.exists_trivial_pair_containing = [](std::int64_t alpha) {
    // The only trivial set of size <= 2 is the block {1,2}.
    return alpha == 1 || alpha == 2;
  };
  s.oracle_complete = true;
  return s;
}

namespace {

RuleStructure infinite_sets_explode(std::string name, std::string description) {
  RuleStructure s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.carrier = Carrier::naturals();
  s.consequence = [](const SentenceSet& gamma) {
    const bool infinite = gamma.kind() == SentenceSet::Kind::Cofinite;
    return full_or_same(infinite, gamma);
  };
  s.oracle.is_trivial = [](const SentenceSet& g) {
    return g.kind() == SentenceSet::Kind::Cofinite;
  };
  s.oracle.exists_trivial_superset = [](const SentenceSet& gamma, bool proper) {
    if (!proper) return true;
    if (gamma.is_full()) return false;
    // Cofinite gamma is itself an infinite proper subset; finite gamma
    // extends to the complement of any missing point.
    return true;
  };
  s.oracle.exists_trivial_one_extension = [](const SentenceSet& gamma) {
    // Adding one element to a finite set leaves it finite; adding one to a
    // proper cofinite set leaves it cofinite (and it stays proper for some
    // choice of α unless gamma misses only one point and α is that point).
    if (gamma.kind() != SentenceSet::Kind::Cofinite) return false;
    if (gamma.is_full()) return false;
    // α already in gamma keeps gamma ∪ {α} = gamma, proper and infinite.
    return true;
  };
  s.oracle.exists_trivial_pair_containing = [](std::int64_t) { return false; };
  s.oracle_complete = true;
  return s;
}

}  // namespace

RuleStructure infinite_trigger_structure() {
  return infinite_sets_explode("ex-3-9",
                               "naturals; a set explodes exactly when it is infinite");
}

RuleStructure finite_fixed_point_structure() {
  return infinite_sets_explode(
      "ex-3-17",
      "naturals; finite sets are consequence fixed points, infinite sets explode "
      "(not finitely trivializable, yet every proper set extends to an exploding one)");
}

RuleStructure adjacent_pair_structure() {
  RuleStructure s;
  s.name = "ex-3-10";
  s.description =
      "naturals; a set explodes exactly when it is an adjacent pair {n,n+1} "
      "(or the whole carrier)";
  s.carrier = Carrier::naturals();
  s.consequence = [](const SentenceSet& gamma) {
    bool pair = false;
    if (gamma.kind() == SentenceSet::Kind::Finite) {
      const auto& v = gamma.values();
      pair = v.size() == 2 && v[1] == v[0] + 1;
    }
    return full_or_same(pair, gamma);
  };
  s.oracle.is_trivial = [](const SentenceSet& g) { return g.is_full() || is_adjacent_pair(g); };
  s.oracle.exists_trivial_superset = [](const SentenceSet& gamma, bool proper) {
    if (!proper) return true;
    if (gamma.kind() != SentenceSet::Kind::Finite) return false;
    const auto& v = gamma.values();
    if (v.empty()) return true;       // {0,1}
    if (v.size() == 1) return true;   // {m,m+1}
    return is_adjacent_pair(gamma);   // only pairs fit inside a pair
  };
  s.oracle.exists_trivial_one_extension = [](const SentenceSet& gamma) {
    if (gamma.kind() != SentenceSet::Kind::Finite) return false;
    const auto& v = gamma.values();
    if (v.size() == 1) return true;  // α = m+1 gives {m,m+1}
    return is_adjacent_pair(gamma);  // α inside gamma keeps it the same pair
  };
  s.oracle.exists_trivial_pair_containing = [](std::int64_t) {
    return true;  // {α, α+1}
  };
  s.oracle_complete = true;
  return s;
}

RuleStructure negation_closed_structure() {
  RuleStructure s;
  s.name = "ex-3-13";
  s.description =
      "integers with f(n) = -n; a set explodes exactly when it is nonempty and "
      "closed under f";
  s.carrier = Carrier::integers();
  s.consequence = [](const SentenceSet& gamma) {
    // Finite: members must come in +/- pairs. Cofinite: the excluded
    // elements must, since the complement of a symmetric set is symmetric.
    bool closed = !gamma.is_empty();
    if (closed) {
      const auto& v = gamma.values();
      for (std::int64_t x : v) {
        if (!std::binary_search(v.begin(), v.end(), -x)) {
          closed = false;
          break;
        }
      }
    }
    return full_or_same(closed, gamma);
  };
  s.oracle.is_trivial = is_nonempty_sign_symmetric;
  s.oracle.exists_trivial_superset = [](const SentenceSet& gamma, bool proper) {
    if (!proper) return true;
    if (gamma.kind() == SentenceSet::Kind::Finite) {
      // The symmetric closure gamma ∪ -gamma is finite, hence proper; for
      // empty gamma take {0}.
      return true;
    }
    if (gamma.is_full()) return false;
    // Proper supersets of a cofinite set exclude a nonempty subset E' of
    // the excluded set E; such a superset is symmetric iff E' is, and a
    // nonempty symmetric E' ⊆ E exists iff some e in E has -e in E.
    const auto& e = gamma.values();
    return std::any_of(e.begin(), e.end(), [&](std::int64_t x) {
      return std::binary_search(e.begin(), e.end(), -x);
    });
  };
  s.oracle.exists_trivial_one_extension = [](const SentenceSet& gamma) {
    if (gamma.kind() == SentenceSet::Kind::Finite) {
      // One addition can repair at most one asymmetric member.
      const auto& v = gamma.values();
      std::int64_t asymmetric = 0;
      for (std::int64_t x : v) {
        if (!std::binary_search(v.begin(), v.end(), -x)) ++asymmetric;
      }
      if (asymmetric >= 2) return false;
      if (asymmetric == 1) return true;  // α = the missing negation
      // Already symmetric: reuse a member, or {0} when empty.
      return true;
    }
    if (gamma.is_full()) return false;
    // gamma ∪ {α} = complement of E \ {α}: need nonempty symmetric E \ {α}.
    const auto& e = gamma.values();
    if (list_is_sign_symmetric(e)) return true;  // α outside E, E nonempty
    for (std::int64_t a : e) {
      std::vector<std::int64_t> rest;
      for (std::int64_t x : e) {
        if (x != a) rest.push_back(x);
      }
      if (!rest.empty() && list_is_sign_symmetric(rest)) return true;
    }
    return false;
  };
  s.oracle.exists_trivial_pair_containing = [](std::int64_t) {
    return true;  // {α, -α}
  };
  s.oracle_complete = true;
  s.unary_ops["f"] = [](std::int64_t n) { return -n; };
  return s;
}

const std::vector<BuiltinInfo>& list_builtins() {
  static const std::vector<BuiltinInfo> infos = {
      {"cpc", "", "matrix", "two-valued Boolean matrix over ¬ ∧ ∨ → ⊥"},
      {"pwk", "", "matrix",
       "three-valued weak Kleene matrix (any operation with an e input yields e), "
       "designated {e,t}"},
      {"b3", "", "matrix", "three-valued weak Kleene matrix, designated {t}"},
      {"lp", "", "matrix", "three-valued strong Kleene matrix over ¬ ∧ ∨, designated {b,t}"},
      {"pac", "", "matrix", "strong Kleene matrix plus a detaching conditional, designated {b,t}"},
      {"p1", "", "matrix",
       "three-valued matrix over ¬ → with designated {T,T*}; compound formulas "
       "only take classical values"},
      {"pure-reflexive", "n (default 3)", "finite", "C(Γ) = Γ on an n-element carrier"},
      {"poset-forward", "n = antichain size (default 2)", "finite",
       "Γ entails φ iff γ <= φ for every γ in Γ, over an n-element antichain"},
      {"poset-backward", "n = antichain size (default 2)", "finite",
       "Γ entails φ iff φ <= γ for every γ in Γ, over an n-element antichain"},
      {"poset-valuation", "", "finite",
       "entailment through valuation maps into a two-element antichain (two sentences, "
       "one injective valuation); custom posets/valuations via the JSON logic spec"},
      {"qcons", "n (default 3)", "finite",
       "structure induced by the operator W(Γ) = ∅ (every consequence set empty); "
       "custom tables via the JSON logic spec"},
      {"ex-3-5", "", "rule",
       "positive naturals; trivial sets are the blocks {n,...,2n} and the carrier"},
      {"ex-3-9", "", "rule", "naturals; trivial sets are exactly the infinite sets"},
      {"ex-3-10", "", "rule",
       "naturals; trivial sets are the adjacent pairs {n,n+1} and the carrier"},
      {"ex-3-13", "", "rule",
       "integers with f(n) = -n; trivial sets are the nonempty f-closed sets"},
      {"ex-3-17", "", "rule",
       "naturals; finite sets are fixed points, infinite sets explode"},
  };
  return infos;
}

const char* logic_kind_name(const Logic& logic) {
  switch (logic.index()) {
    case 0: return "finite";
    case 1: return "matrix";
    default: return "rule";
  }
}

namespace {

int parse_int_param(const std::string& name, const std::string& text, int lo, int hi) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("builtin '" + name + "': parameter '" + text +
                                "' is not an integer");
  }
  if (pos != text.size()) {
    throw std::invalid_argument("builtin '" + name + "': parameter '" + text +
                                "' is not an integer");
  }
  if (value < lo || value > hi) {
    throw std::invalid_argument("builtin '" + name + "': parameter must be in [" +
                                std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  return value;
}

}  // namespace

Logic load_builtin(const std::string& id) {
  std::string name = id;
  std::string param;
  if (auto colon = id.find(':'); colon != std::string::npos) {
    name = id.substr(0, colon);
    param = id.substr(colon + 1);
  }
  const bool has_param = !param.empty();
  auto no_param = [&] {
    if (has_param) {
      throw std::invalid_argument("builtin '" + name + "' takes no parameter");
    }
  };

  if (name == "cpc") { no_param(); return cpc_matrix(); }
  if (name == "pwk") { no_param(); return pwk_matrix(); }
  if (name == "b3") { no_param(); return b3_matrix(); }
  if (name == "lp") { no_param(); return lp_matrix(); }
  if (name == "pac") { no_param(); return pac_matrix(); }
  if (name == "p1") { no_param(); return p1_matrix(); }
  if (name == "pure-reflexive") {
    const int n = has_param ? parse_int_param(name, param, 1, 16) : 3;
    return pure_reflexive(n);
  }
  if (name == "poset-forward" || name == "poset-backward") {
    const int n = has_param ? parse_int_param(name, param, 1, 16) : 2;
    const auto dir =
        name == "poset-forward" ? PosetDirection::Forward : PosetDirection::Backward;
    return poset_logic(Poset::antichain(n), dir);
  }
  if (name == "poset-valuation") {
    no_param();
    return poset_valuation_logic(2, Poset::antichain(2), {{0, 1}});
  }
  if (name == "qcons") {
    const int n = has_param ? parse_int_param(name, param, 1, 16) : 3;
    return qcons_structure(n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)).structure;
  }
  if (name == "ex-3-5") { no_param(); return doubling_block_structure(); }
  if (name == "ex-3-9") { no_param(); return infinite_trigger_structure(); }
  if (name == "ex-3-10") { no_param(); return adjacent_pair_structure(); }
  if (name == "ex-3-13") { no_param(); return negation_closed_structure(); }
  if (name == "ex-3-17") { no_param(); return finite_fixed_point_structure(); }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

}  // namespace conseq
