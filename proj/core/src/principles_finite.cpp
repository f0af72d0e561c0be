#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "conseq/principles.hpp"

namespace conseq {

namespace {

std::uint32_t bit(int i) { return 1u << i; }

Verdict exact(Status st, std::string detail) {
  Verdict v;
  v.status = st;
  v.scope = ScopeKind::Exact;
  v.scope_detail = std::move(detail);
  return v;
}

std::string pair_scan_detail(const FiniteStructure& s) {
  return "all element pairs of a " + std::to_string(s.size()) + "-element carrier";
}

std::string subset_scan_detail(const FiniteStructure& s) {
  return "all " + std::to_string((1u << s.size())) + " subsets of the carrier";
}

// Index of an element with no b such that {a, b} explodes, or -1 if every
// element has such a partner. Shared kernel of the gecq and nf_para checks.
int first_unpartnered(const FiniteStructure& s) {
  for (int a = 0; a < s.size(); ++a) {
    bool found = false;
    for (int b = 0; b < s.size() && !found; ++b) {
      found = s.is_trivial_mask(bit(a) | bit(b));
    }
    if (!found) return a;
  }
  return -1;
}

Verdict check_ecq(const FiniteStructure& s, const PrincipleId& id) {
  const auto it = s.unary_ops().find(id.op_name);
  if (it == s.unary_ops().end()) {
    throw std::domain_error("structure declares no unary operator named '" + id.op_name + "'");
  }
  const std::vector<std::uint8_t>& op = it->second;
  for (int a = 0; a < s.size(); ++a) {
    if (!s.is_trivial_mask(bit(a) | bit(op[a]))) {
      Verdict v = exact(Status::Refuted, "every element checked against its operator image");
      v.witness.description = "element whose pair with its operator image does not explode";
      v.witness.data["alpha"] = s.element_name(a);
      v.witness.data[id.op_name + "(alpha)"] = s.element_name(op[a]);
      return v;
    }
  }
  return exact(Status::Proven, "every element checked against its operator image");
}

Verdict check_bot_ecq(const FiniteStructure& s) {
  if (s.constants().empty()) {
    Verdict v = exact(Status::Refuted, "declared constants");
    v.note = "structure declares no constants";
    return v;
  }
  for (const auto& [name, c] : s.constants()) {
    if (s.is_trivial_mask(bit(c))) {
      Verdict v = exact(Status::Proven, "declared constants");
      v.witness.description = "constant that explodes on its own";
      v.witness.data["constant"] = name;
      v.witness.data["element"] = s.element_name(c);
      return v;
    }
  }
  Verdict v = exact(Status::Refuted, "declared constants");
  v.note = "no declared constant explodes on its own";
  return v;
}

Verdict check_gecq(const FiniteStructure& s) {
  const int a = first_unpartnered(s);
  if (a < 0) return exact(Status::Proven, pair_scan_detail(s));
  Verdict v = exact(Status::Refuted, pair_scan_detail(s));
  v.witness.description = "element with no exploding two-element partner";
  v.witness.data["alpha"] = s.element_name(a);
  return v;
}

Verdict check_nf_para(const FiniteStructure& s) {
  const int a = first_unpartnered(s);
  if (a >= 0) {
    Verdict v = exact(Status::Proven, pair_scan_detail(s));
    v.witness.description = "element forming no exploding pair";
    v.witness.data["alpha"] = s.element_name(a);
    return v;
  }
  Verdict v = exact(Status::Refuted, pair_scan_detail(s));
  v.note = "every element has an exploding two-element partner";
  return v;
}

Verdict check_secq(const FiniteStructure& s) {
  // Union of all proper exploding subsets; an element is covered iff some
  // proper exploding set contains it.
  std::uint32_t covered = 0;
  for (std::uint32_t m = 0; m < s.full_mask(); ++m) {
    if (s.is_trivial_mask(m)) covered |= m;
  }
  if (covered == s.full_mask()) return exact(Status::Proven, subset_scan_detail(s));
  Verdict v = exact(Status::Refuted, subset_scan_detail(s));
  v.witness.description = "element contained in no proper exploding set";
  v.witness.data["alpha"] = s.element_name(std::countr_one(covered));
  return v;
}

Verdict check_secq_prime(const FiniteStructure& s) {
  for (int a = 0; a < s.size(); ++a) {
    bool ok = false;
    for (std::uint32_t g = 0; g < s.full_mask() && !ok; ++g) {
      const std::uint32_t u = g | bit(a);
      ok = u != s.full_mask() && s.is_trivial_mask(u);
    }
    if (!ok) {
      Verdict v = exact(Status::Refuted, subset_scan_detail(s));
      v.witness.description = "element with no proper set whose extension by it explodes";
      v.witness.data["alpha"] = s.element_name(a);
      return v;
    }
  }
  return exact(Status::Proven, subset_scan_detail(s));
}

Verdict check_specq(const FiniteStructure& s) {
  for (std::uint32_t g = 0; g < s.full_mask(); ++g) {
    bool ok = false;
    for (int a = 0; a < s.size() && !ok; ++a) {
      const std::uint32_t u = g | bit(a);
      ok = u != s.full_mask() && s.is_trivial_mask(u);
    }
    if (!ok) {
      Verdict v = exact(Status::Refuted, subset_scan_detail(s));
      v.witness.description = "proper set with no exploding proper one-element extension";
      v.witness.data["gamma"] = s.describe_mask(g);
      return v;
    }
  }
  return exact(Status::Proven, subset_scan_detail(s));
}

Verdict check_pfecq(const FiniteStructure& s) {
  std::vector<std::uint32_t> exploding;
  for (std::uint32_t d = 0; d < s.full_mask(); ++d) {
    if (s.is_trivial_mask(d)) exploding.push_back(d);
  }
  for (std::uint32_t g = 0; g < s.full_mask(); ++g) {
    bool ok = false;
    for (std::uint32_t d : exploding) {
      if ((g & ~d) == 0) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      Verdict v = exact(Status::Refuted, subset_scan_detail(s));
      v.witness.description = "proper set with no proper exploding superset";
      v.witness.data["gamma"] = s.describe_mask(g);
      return v;
    }
  }
  return exact(Status::Proven, subset_scan_detail(s));
}

Verdict check_pfecq2(const FiniteStructure& s) {
  for (std::uint32_t g = 0; g < s.full_mask(); ++g) {
    bool ok = false;
    for (std::uint32_t d = 0; d <= s.full_mask() && !ok; ++d) {
      const std::uint32_t u = g | d;
      ok = u != s.full_mask() && s.is_trivial_mask(u);
    }
    if (!ok) {
      Verdict v = exact(Status::Refuted, subset_scan_detail(s));
      v.witness.description = "proper set exploding with no added proper set";
      v.witness.data["gamma"] = s.describe_mask(g);
      return v;
    }
  }
  return exact(Status::Proven, subset_scan_detail(s));
}

Verdict check_pfecq3(const FiniteStructure& s) {
  for (std::uint32_t g = 0; g < s.full_mask(); ++g) {
    bool ok = false;
    for (std::uint32_t d = 1; d <= s.full_mask() && !ok; ++d) {
      if ((g | d) == s.full_mask()) continue;
      bool hereditary = true;
      for (std::uint32_t dp = d; dp != 0 && hereditary; dp = (dp - 1) & d) {
        hereditary = s.is_trivial_mask(g | dp);
      }
      ok = hereditary;
    }
    if (!ok) {
      Verdict v = exact(Status::Refuted, subset_scan_detail(s));
      v.witness.description =
          "proper set with no nonempty addition exploding together with every nonempty part";
      v.witness.data["gamma"] = s.describe_mask(g);
      return v;
    }
  }
  return exact(Status::Proven, subset_scan_detail(s));
}

Verdict check_parecq(const FiniteStructure& s) {
  for (int a = 0; a < s.size(); ++a) {
    for (int b = a; b < s.size(); ++b) {
      if (s.is_trivial_mask(bit(a) | bit(b))) {
        Verdict v = exact(Status::Proven, pair_scan_detail(s));
        v.witness.description = "exploding pair of elements";
        v.witness.data["alpha"] = s.element_name(a);
        v.witness.data["beta"] = s.element_name(b);
        return v;
      }
    }
  }
  Verdict v = exact(Status::Refuted, pair_scan_detail(s));
  v.note = "no pair of elements explodes";
  return v;
}

Verdict check_parecq2(const FiniteStructure& s) {
  for (int b = 0; b < s.size(); ++b) {
    for (int a = 0; a < s.size(); ++a) {
      if (s.is_trivial_mask(bit(a) | bit(b))) {
        Verdict v = exact(Status::Proven, pair_scan_detail(s));
        v.witness.description = "exploding pair of elements";
        v.witness.data["alpha"] = s.element_name(a);
        v.witness.data["beta"] = s.element_name(b);
        return v;
      }
    }
  }
  Verdict v = exact(Status::Refuted, pair_scan_detail(s));
  v.note = "no pair of elements explodes";
  return v;
}

Verdict check_k_para(const FiniteStructure& s, const PrincipleId& id) {
  std::uint32_t k_mask = 0;
  for (std::int64_t e : id.k_elements) {
    if (e < 0 || e >= s.size()) {
      throw std::invalid_argument("k_para element " + std::to_string(e) +
                                  " is outside the carrier");
    }
    k_mask |= bit(static_cast<int>(e));
  }
  for (int a = 0; a < s.size(); ++a) {
    bool survives = true;
    for (int b = 0; b < s.size() && survives; ++b) {
      if ((k_mask >> b) & 1u) survives = !s.is_trivial_mask(bit(a) | bit(b));
    }
    if (survives) {
      Verdict v = exact(Status::Proven, pair_scan_detail(s));
      v.witness.description = "element exploding with no member of the given set";
      v.witness.data["alpha"] = s.element_name(a);
      return v;
    }
  }
  Verdict v = exact(Status::Refuted, pair_scan_detail(s));
  v.note = "every element explodes with some member of the given set";
  return v;
}

Verdict check_fin_triv(const FiniteStructure& s, const PrincipleId& id) {
  const std::string detail =
      "all subsets of size at most " + std::to_string(id.bound);
  for (int size = 0; size <= id.bound; ++size) {
    for (std::uint32_t m = 0; m <= s.full_mask(); ++m) {
      if (std::popcount(m) == size && s.is_trivial_mask(m)) {
        Verdict v = exact(Status::Proven, detail);
        v.witness.description = "exploding set of minimal size within the bound";
        v.witness.data["gamma"] = s.describe_mask(m);
        return v;
      }
    }
  }
  Verdict v = exact(Status::Refuted, detail);
  v.note = "no set of size at most " + std::to_string(id.bound) + " explodes";
  return v;
}

}  // namespace

Verdict check(const FiniteStructure& s, const PrincipleId& id, const Budget& b) {
  if (s.size() > b.carrier_cap) {
    Verdict v;
    v.status = Status::Unknown;
    v.scope = ScopeKind::Bounded;
    v.budget_exceeded = true;
    v.note = "carrier size " + std::to_string(s.size()) + " exceeds the budget cap of " +
             std::to_string(b.carrier_cap) + "; exhaustive subset checks refused";
    return v;
  }
  switch (id.kind) {
    case PrincipleKind::Ecq: return check_ecq(s, id);
    case PrincipleKind::BotEcq: return check_bot_ecq(s);
    case PrincipleKind::Gecq: return check_gecq(s);
    case PrincipleKind::Secq: return check_secq(s);
    case PrincipleKind::SecqPrime: return check_secq_prime(s);
    case PrincipleKind::Specq: return check_specq(s);
    case PrincipleKind::Pfecq: return check_pfecq(s);
    case PrincipleKind::Pfecq2: return check_pfecq2(s);
    case PrincipleKind::Pfecq3: return check_pfecq3(s);
    case PrincipleKind::Parecq: return check_parecq(s);
    case PrincipleKind::Parecq2: return check_parecq2(s);
    case PrincipleKind::KPara: return check_k_para(s, id);
    case PrincipleKind::NfPara: return check_nf_para(s);
    case PrincipleKind::FinTriv: return check_fin_triv(s, id);
    case PrincipleKind::GentleExplosion:
    case PrincipleKind::Lfi:
      throw std::invalid_argument(
          "controlled-explosion principles need a formula language; explicit finite structures "
          "have none");
  }
  throw std::invalid_argument("unhandled principle kind");
}

SentenceSet quasi_negations(const FiniteStructure& s, std::int64_t alpha) {
  if (alpha < 0 || alpha >= s.size()) {
    throw std::invalid_argument("element " + std::to_string(alpha) + " is outside the carrier");
  }
  std::vector<std::int64_t> members;
  for (int b = 0; b < s.size(); ++b) {
    if (s.is_trivial_mask(bit(static_cast<int>(alpha)) | bit(b))) members.push_back(b);
  }
  return SentenceSet::finite(Carrier::finite(s.size()), members);
}

bool parecq1_literal(const FiniteStructure& s) {
  const std::uint32_t full = s.full_mask();
  for (std::uint32_t mg = 1; mg <= full; ++mg) {
    for (std::uint32_t md = 0; md <= full; ++md) {
      bool all = true;
      for (int a = 0; a < s.size() && all; ++a) {
        if (!((mg >> a) & 1u)) continue;
        bool ex = false;
        for (int b = 0; b < s.size() && !ex; ++b) {
          if ((md >> b) & 1u) ex = s.is_trivial_mask(bit(a) | bit(b));
        }
        all = ex;
      }
      if (all) return true;
    }
  }
  return false;
}

bool parecq2_literal(const FiniteStructure& s) {
  const std::uint32_t full = s.full_mask();
  for (std::uint32_t mg = 1; mg <= full; ++mg) {
    for (std::uint32_t md = 1; md <= full; ++md) {
      bool all = true;
      for (int a = 0; a < s.size() && all; ++a) {
        if (!((mg >> a) & 1u)) continue;
        for (int b = 0; b < s.size() && all; ++b) {
          if ((md >> b) & 1u) all = s.is_trivial_mask(bit(a) | bit(b));
        }
      }
      if (all) return true;
    }
  }
  return false;
}

}  // namespace conseq
