#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "conseq/miner.hpp"

namespace conseq {

namespace {

std::uint32_t bit(int i) { return 1u << i; }

// ---------------------------------------------------------------------------
// Raw-table Tarskian checks, mirroring tarskian_report but allocation-free so
// the full n=3 space stays cheap. Cross-checked against tarskian_report in
// the test suite.

bool table_reflexive(int n, const std::uint32_t* t) {
  const std::uint32_t full = bit(n) - 1;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if ((m & t[m]) != m) return false;
  }
  return true;
}

bool table_monotonic(int n, const std::uint32_t* t) {
  const std::uint32_t full = bit(n) - 1;
  for (std::uint32_t g = 0; g <= full; ++g) {
    const std::uint32_t cg = t[g];
    const std::uint32_t rest = full & ~g;
    for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
      if ((cg & t[g | extra]) != cg) return false;
      if (extra == 0) break;
    }
  }
  return true;
}

bool table_transitive(int n, const std::uint32_t* t) {
  const std::uint32_t full = bit(n) - 1;
  for (std::uint32_t g = 0; g <= full; ++g) {
    const std::uint32_t cg = t[g];
    for (std::uint32_t sigma = cg;; sigma = (sigma - 1) & cg) {
      if ((t[sigma] & ~cg) != 0) return false;
      if (sigma == 0) break;
    }
  }
  return true;
}

bool filters_pass(const StructuralFilters& f, int n, const std::uint32_t* t) {
  if (f.reflexive && *f.reflexive != table_reflexive(n, t)) return false;
  if (f.monotonic && *f.monotonic != table_monotonic(n, t)) return false;
  if (f.transitive && *f.transitive != table_transitive(n, t)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Query validation and helpers.

bool is_pattern_principle(PrincipleKind k) {
  switch (k) {
    case PrincipleKind::Gecq:
    case PrincipleKind::NfPara:
    case PrincipleKind::Secq:
    case PrincipleKind::SecqPrime:
    case PrincipleKind::Specq:
    case PrincipleKind::Pfecq:
    case PrincipleKind::Pfecq2:
    case PrincipleKind::Pfecq3:
    case PrincipleKind::Parecq:
    case PrincipleKind::Parecq2:
    case PrincipleKind::KPara:
    case PrincipleKind::FinTriv:
      return true;
    default:
      return false;
  }
}

void validate_query(const SeparationQuery& q) {
  if (q.require.empty()) {
    throw std::invalid_argument("separation query needs at least one requirement");
  }
  if (q.max_carrier < 1 || q.max_carrier > 6) {
    throw std::invalid_argument("max_carrier must lie between 1 and 6");
  }
  for (const auto& [id, status] : q.require) {
    if (status == Status::Unknown) {
      throw std::invalid_argument("requirements must ask for proven or refuted");
    }
    if (id.kind == PrincipleKind::GentleExplosion || id.kind == PrincipleKind::Lfi) {
      throw std::invalid_argument("principle " + id.to_string() +
                                  " needs a formula algebra and cannot be mined");
    }
    if (id.kind == PrincipleKind::BotEcq && status == Status::Proven) {
      throw std::invalid_argument("mining does not synthesize constants, so bot_ecq "
                                  "can only be required refuted");
    }
    if (!is_pattern_principle(id.kind) && id.kind != PrincipleKind::Ecq &&
        id.kind != PrincipleKind::BotEcq) {
      throw std::invalid_argument("principle " + id.to_string() + " cannot be mined");
    }
  }
}

// k_para requirements mention concrete carrier elements; sizes that cannot
// contain them are skipped (the principle is not even posable there).
bool size_admits_query(const SeparationQuery& q, int n) {
  for (const auto& [id, status] : q.require) {
    if (id.kind != PrincipleKind::KPara) continue;
    for (std::int64_t e : id.k_elements) {
      if (e < 0 || e >= n) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operator search for ecq requirements. Whether ecq(op) holds is determined
// by the trivial pattern alone once the operator table is fixed: it asks that
// {a, op(a)} explodes for every carrier element a.

bool ecq_on_pattern(int n, std::uint64_t pattern, const std::vector<std::uint8_t>& op) {
  for (int a = 0; a < n; ++a) {
    const std::uint32_t m = bit(a) | bit(op[a]);
    if (!((pattern >> m) & 1u)) return false;
  }
  return true;
}

struct OpRequirement {
  std::string name;
  std::vector<Status> statuses;  // every status this operator must realize
};

std::vector<OpRequirement> group_op_requirements(const SeparationQuery& q) {
  std::vector<OpRequirement> groups;
  for (const auto& [id, status] : q.require) {
    if (id.kind != PrincipleKind::Ecq) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const OpRequirement& g) { return g.name == id.op_name; });
    if (it == groups.end()) {
      groups.push_back({id.op_name, {status}});
    } else {
      it->statuses.push_back(status);
    }
  }
  return groups;
}

// Finds, for each named operator, a table meeting all of its required ecq
// statuses on this pattern. Exhaustive over the n^n tables in odometer order.
std::optional<std::map<std::string, std::vector<std::uint8_t>>> solve_operators(
    int n, std::uint64_t pattern, const std::vector<OpRequirement>& groups) {
  std::map<std::string, std::vector<std::uint8_t>> out;
  for (const auto& g : groups) {
    std::vector<std::uint8_t> op(static_cast<std::size_t>(n), 0);
    bool found = false;
    while (true) {
      const bool holds = ecq_on_pattern(n, pattern, op);
      bool all = true;
      for (Status st : g.statuses) {
        if ((st == Status::Proven) != holds) all = false;
      }
      if (all) {
        found = true;
        break;
      }
      int i = 0;
      while (i < n && op[i] == n - 1) op[i++] = 0;
      if (i == n) break;
      ++op[i];
    }
    if (!found) return std::nullopt;
    out[g.name] = std::move(op);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Candidate assembly and verification.

FiniteStructure with_operators(const FiniteStructure& s,
                               std::map<std::string, std::vector<std::uint8_t>> ops) {
  return FiniteStructure(s.size(), s.table(), std::move(ops), {}, s.element_names());
}

// Runs the exact checkers on the finished candidate; a mismatch here would
// mean the fast pattern-level screening disagrees with the reference
// implementation, which is a bug rather than a search miss.
bool verify_candidate(const FiniteStructure& s, const SeparationQuery& q) {
  Budget budget;
  budget.carrier_cap = 6;
  for (const auto& [id, status] : q.require) {
    if (check(s, id, budget).status != status) return false;
  }
  if (q.structural_filters.any()) {
    const TarskianReport r = tarskian_report(s);
    const auto& f = q.structural_filters;
    if (f.reflexive && *f.reflexive != r.reflexive) return false;
    if (f.monotonic && *f.monotonic != r.monotonic) return false;
    if (f.transitive && *f.transitive != r.transitive) return false;
  }
  return true;
}

SeparationResult emit(FiniteStructure s, const SeparationQuery& q, bool exhaustive,
                      std::string detail) {
  FiniteStructure canon = canonicalize_structure(s);
  if (!verify_candidate(canon, q)) {
    throw std::logic_error("separation candidate failed re-verification: " + detail);
  }
  SeparationResult r;
  r.carrier_size = canon.size();
  r.structure = std::move(canon);
  r.exhaustive = exhaustive;
  r.detail = std::move(detail);
  return r;
}

// Non-operator requirements, decided by the exact checkers on the realized
// structure. ecq entries are skipped here (handled by solve_operators) and
// bot_ecq refuted holds for every bare structure, which check() confirms at
// re-verification time.
bool pattern_requirements_hold(const FiniteStructure& s, const SeparationQuery& q,
                               const Budget& budget) {
  for (const auto& [id, status] : q.require) {
    if (id.kind == PrincipleKind::Ecq) continue;
    if (id.kind == PrincipleKind::BotEcq) continue;
    if (check(s, id, budget).status != status) return false;
  }
  return true;
}

constexpr std::uint64_t kRandomSamplesPerSize = 2000;

}  // namespace

FiniteStructure realize_trivial_pattern(int n, std::uint64_t pattern) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("pattern realization supports carriers of size 1..6");
  }
  const std::uint32_t full = bit(n) - 1;
  if (n < 6 && pattern >= (std::uint64_t{1} << (full + 1))) {
    throw std::invalid_argument("pattern has bits beyond the subset lattice");
  }
  std::vector<std::uint32_t> table(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t m = 0; m <= full; ++m) {
    table[m] = ((pattern >> m) & 1u) ? full : m;
  }
  if (!((pattern >> full) & 1u)) table[full] = full & ~1u;
  return FiniteStructure(n, std::move(table));
}

FiniteStructure canonicalize_structure(const FiniteStructure& s) {
  const int n = s.size();
  const std::uint32_t full = s.full_mask();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<std::uint32_t> best = s.table();
  std::vector<int> best_perm = perm;
  std::vector<std::uint32_t> candidate(best.size());
  const auto apply_mask = [&](const std::vector<int>& p, std::uint32_t m) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1u) out |= bit(p[static_cast<std::size_t>(i)]);
    }
    return out;
  };
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::uint32_t m = 0; m <= full; ++m) {
      candidate[apply_mask(perm, m)] = apply_mask(perm, s.table()[m]);
    }
    if (candidate < best) {
      best = candidate;
      best_perm = perm;
    }
  }

  std::map<std::string, std::vector<std::uint8_t>> ops;
  for (const auto& [name, op] : s.unary_ops()) {
    std::vector<std::uint8_t> moved(op.size());
    for (int a = 0; a < n; ++a) {
      moved[static_cast<std::size_t>(best_perm[static_cast<std::size_t>(a)])] =
          static_cast<std::uint8_t>(best_perm[op[static_cast<std::size_t>(a)]]);
    }
    ops[name] = std::move(moved);
  }
  std::map<std::string, std::uint8_t> constants;
  for (const auto& [name, c] : s.constants()) {
    constants[name] = static_cast<std::uint8_t>(best_perm[c]);
  }
  return FiniteStructure(n, std::move(best), std::move(ops), std::move(constants),
                         s.element_names());
}

StreamSummary enumerate_structures(int n, const StructuralFilters& filters,
                                   const std::function<bool(const TableView&)>& visit,
                                   const EnumerationOptions& options) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("enumeration supports carriers of size 1..6");
  }
  const std::uint32_t full = bit(n) - 1;
  const std::size_t entries = static_cast<std::size_t>(full) + 1;
  std::vector<std::uint32_t> table(entries, 0);
  StreamSummary summary;
  const TableView view{n, table.data()};

  const auto offer = [&](bool generated_reflexive) {
    ++summary.visited;
    if (!generated_reflexive || filters.monotonic || filters.transitive ||
        (filters.reflexive && !*filters.reflexive)) {
      if (!filters_pass(filters, n, table.data())) return true;
    }
    ++summary.emitted;
    if (!visit(view)) {
      summary.exhaustive = false;
      return false;
    }
    return true;
  };

  if (options.sample) {
    summary.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, full);
    for (std::uint64_t i = 0; i < *options.sample; ++i) {
      for (auto& entry : table) entry = dist(rng);
      if (!offer(false)) break;
    }
    return summary;
  }

  const bool narrow_reflexive = filters.reflexive && *filters.reflexive;
  if (n > 4 || (n == 4 && !narrow_reflexive)) {
    throw std::invalid_argument("full enumeration at this carrier size needs sampling");
  }

  if (narrow_reflexive) {
    // Reflexive tables decompose per entry as m | extra with extra ⊆ ∁m;
    // run an odometer over the extras so only reflexive tables are built.
    std::vector<std::uint32_t> extra(entries, 0);
    for (std::uint32_t m = 0; m <= full; ++m) table[m] = m;
    while (true) {
      if (!offer(true)) return summary;
      std::size_t i = 0;
      while (i < entries) {
        const std::uint32_t rest = full & ~static_cast<std::uint32_t>(i);
        if (extra[i] == rest) {
          extra[i] = 0;
          table[i] = static_cast<std::uint32_t>(i);
          ++i;
        } else {
          extra[i] = (extra[i] - rest) & rest;  // next subset of rest
          table[i] = static_cast<std::uint32_t>(i) | extra[i];
          break;
        }
      }
      if (i == entries) break;
    }
    return summary;
  }

  while (true) {
    if (!offer(false)) return summary;
    std::size_t i = 0;
    while (i < entries && table[i] == full) table[i++] = 0;
    if (i == entries) break;
    ++table[i];
  }
  return summary;
}

SeparationResult find_separation(const SeparationQuery& query, std::uint64_t seed) {
  validate_query(query);
  const std::vector<OpRequirement> op_groups = group_op_requirements(query);
  Budget budget;
  budget.carrier_cap = 6;
  const bool filtered = query.structural_filters.any();

  std::ostringstream scanned;
  const int exhaustive_top = std::min(query.max_carrier, 4);
  for (int n = 1; n <= exhaustive_top; ++n) {
    if (!size_admits_query(query, n)) {
      scanned << "size " << n << " skipped (k_para elements out of range); ";
      continue;
    }
    const std::uint64_t patterns = std::uint64_t{1} << (std::uint64_t{1} << n);
    std::uint64_t admitted = 0;
    for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
      FiniteStructure s = realize_trivial_pattern(n, pattern);
      if (filtered && !filters_pass(query.structural_filters, n, s.table().data())) {
        continue;
      }
      ++admitted;
      if (!pattern_requirements_hold(s, query, budget)) continue;
      auto ops = solve_operators(n, pattern, op_groups);
      if (!ops) continue;
      std::ostringstream detail;
      detail << "carrier-minimal witness at size " << n
             << " after scanning trivial patterns of sizes 1.." << n << " ("
             << scanned.str() << "hit in pattern " << pattern << " of " << patterns
             << " at size " << n << ")";
      if (filtered) {
        detail << "; structural filters were checked on realized candidates only, "
                  "so smaller filtered structures may exist";
      }
      return emit(with_operators(s, std::move(*ops)), query, !filtered,
                  detail.str());
    }
    scanned << "size " << n << ": " << patterns << " patterns"
            << (filtered ? (", " + std::to_string(admitted) + " past filters") : "")
            << "; ";
  }

  if (query.max_carrier > 4) {
    for (int n = 5; n <= query.max_carrier; ++n) {
      if (!size_admits_query(query, n)) {
        scanned << "size " << n << " skipped (k_para elements out of range); ";
        continue;
      }
      const std::uint32_t full = bit(n) - 1;
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ull);
      std::uniform_int_distribution<std::uint32_t> dist(0, full);
      std::vector<std::uint32_t> table(static_cast<std::size_t>(full) + 1);
      for (std::uint64_t i = 0; i < kRandomSamplesPerSize; ++i) {
        for (auto& entry : table) entry = dist(rng);
        if (!filters_pass(query.structural_filters, n, table.data())) continue;
        FiniteStructure s(n, table);
        std::uint64_t pattern = s.trivial_pattern();
        if (!pattern_requirements_hold(s, query, budget)) continue;
        auto ops = solve_operators(n, pattern, op_groups);
        if (!ops) continue;
        std::ostringstream detail;
        detail << "witness at size " << n << " found by random sampling (seed " << seed
               << ", sample " << i << "); sizes 1..4 were scanned first (" << scanned.str()
               << ") so no smaller unfiltered witness exists, but sampled sizes are "
                  "not conclusive";
        return emit(with_operators(s, std::move(*ops)), query, false, detail.str());
      }
      scanned << "size " << n << ": " << kRandomSamplesPerSize << " random tables; ";
    }
  }

  SeparationResult none;
  none.exhaustive = !filtered && query.max_carrier <= 4;
  std::ostringstream detail;
  detail << "no witness found (" << scanned.str() << "scan "
         << (none.exhaustive ? "exhaustive over the trivial-pattern quotient"
                             : "inconclusive: sampling or structural filters were involved")
         << ")";
  none.detail = detail.str();
  return none;
}

}  // namespace conseq
