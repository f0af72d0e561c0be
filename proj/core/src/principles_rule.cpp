#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "conseq/principles.hpp"

// Rule-structure checkers. Inner existentials are answered by the
// structure's triviality oracle (certified only when oracle_complete);
// outer universals range over the deterministic element sample and
// finite/cofinite set family, so positive universal verdicts are Bounded.
// Checks that only evaluate the consequence rule on concrete sets (ecq,
// named pair witnesses, k_para, fin_triv) need no certification.

namespace conseq {

namespace {

bool trivial_direct(const RuleStructure& s, const SentenceSet& gamma) {
  return s.consequence(gamma).is_full();
}

SentenceSet pair_set(const RuleStructure& s, std::int64_t a, std::int64_t b) {
  return SentenceSet::finite(s.carrier, {a, b});
}

Verdict make_verdict(Status st, ScopeKind sc, std::string detail = {}) {
  Verdict v;
  v.status = st;
  v.scope = sc;
  v.scope_detail = std::move(detail);
  return v;
}

// Oracle-dependent verdicts are only certified when the structure asserts
// its oracle characterizes all trivial sets.
Verdict certify(Verdict v, const RuleStructure& s) {
  if (!s.oracle_complete && v.status != Status::Unknown) {
    v.status = Status::Unknown;
    if (!v.note.empty()) v.note += "; ";
    v.note += "triviality oracle not marked complete, so its answers are not certified";
  }
  return v;
}

std::string sample_detail(std::size_t n) {
  return std::to_string(n) + " carrier elements in canonical order";
}

std::string family_detail(std::size_t n) {
  return "a finite/cofinite family of " + std::to_string(n) + " sets over a fixed carrier window";
}

Verdict check_ecq_r(const RuleStructure& s, const PrincipleId& id, const Budget& b) {
  const auto it = s.unary_ops.find(id.op_name);
  if (it == s.unary_ops.end()) {
    throw std::domain_error("structure declares no unary operator named '" + id.op_name + "'");
  }
  const auto& op = it->second;
  const std::vector<std::int64_t> sample = rule_element_sample(s.carrier, b);
  Witness shown;
  for (std::int64_t a : sample) {
    const std::int64_t fa = op(a);
    if (!trivial_direct(s, pair_set(s, a, fa))) {
      Verdict v = make_verdict(Status::Refuted, ScopeKind::Exact);
      v.witness.description = "element whose pair with its operator image does not explode";
      v.witness.data["alpha"] = std::to_string(a);
      v.witness.data[id.op_name + "(alpha)"] = std::to_string(fa);
      return v;
    }
    if (shown.empty()) {
      shown.description = "operator pair explodes for every sampled element; shown for the first";
      shown.data["alpha"] = std::to_string(a);
      shown.data[id.op_name + "(alpha)"] = std::to_string(fa);
    }
  }
  Verdict v = make_verdict(Status::Proven, ScopeKind::Bounded, sample_detail(sample.size()));
  v.witness = std::move(shown);
  return v;
}

Verdict check_bot_ecq_r() {
  Verdict v = make_verdict(Status::Refuted, ScopeKind::Exact);
  v.note = "rule structures declare no constant sentences";
  return v;
}

Verdict check_gecq_r(const RuleStructure& s, const Budget& b) {
  const std::vector<std::int64_t> sample = rule_element_sample(s.carrier, b);
  for (std::int64_t a : sample) {
    if (!s.oracle.exists_trivial_pair_containing(a)) {
      Verdict v = make_verdict(Status::Refuted, ScopeKind::Exact);
      v.witness.description = "element with no exploding two-element partner";
      v.witness.data["alpha"] = std::to_string(a);
      return certify(std::move(v), s);
    }
  }
  return certify(
      make_verdict(Status::Proven, ScopeKind::Bounded, sample_detail(sample.size())), s);
}

Verdict check_nf_para_r(const RuleStructure& s, const Budget& b) {
  const std::vector<std::int64_t> sample = rule_element_sample(s.carrier, b);
  for (std::int64_t a : sample) {
    if (!s.oracle.exists_trivial_pair_containing(a)) {
      Verdict v = make_verdict(Status::Proven, ScopeKind::Exact);
      v.witness.description = "element forming no exploding pair";
      v.witness.data["alpha"] = std::to_string(a);
      return certify(std::move(v), s);
    }
  }
  Verdict v = make_verdict(Status::Refuted, ScopeKind::Bounded, sample_detail(sample.size()));
  v.note = "every sampled element has an exploding two-element partner";
  return certify(std::move(v), s);
}

Verdict check_secq_like_r(const RuleStructure& s, const Budget& b, bool prime_reading) {
  const std::vector<std::int64_t> sample = rule_element_sample(s.carrier, b);
  for (std::int64_t a : sample) {
    const SentenceSet singleton = SentenceSet::finite(s.carrier, {a});
    if (!s.oracle.exists_trivial_superset(singleton, /*proper=*/true)) {
      Verdict v = make_verdict(Status::Refuted, ScopeKind::Exact);
      v.witness.description = "element contained in no proper exploding set";
      v.witness.data["alpha"] = std::to_string(a);
      return certify(std::move(v), s);
    }
  }
  Verdict v = make_verdict(Status::Proven, ScopeKind::Bounded, sample_detail(sample.size()));
  if (prime_reading) {
    v.note =
        "pointwise equivalent to the direct reading: take the proper exploding superset of "
        "{alpha} as Γ∪{alpha}";
  }
  return certify(std::move(v), s);
}

Verdict check_one_extension_family_r(const RuleStructure& s, const Budget& b,
                                     bool hereditary_reading) {
  const std::vector<SentenceSet> family = rule_set_family(s.carrier, b);
  std::size_t considered = 0;
  for (const SentenceSet& g : family) {
    if (g.is_full()) continue;  // the outer quantifier ranges over proper sets
    ++considered;
    if (!s.oracle.exists_trivial_one_extension(g)) {
      Verdict v = make_verdict(Status::Refuted, ScopeKind::Exact);
      v.witness.description = hereditary_reading
                                  ? "proper set with no hereditarily exploding nonempty addition"
                                  : "proper set with no exploding proper one-element extension";
      v.witness.data["gamma"] = g.to_string();
      return certify(std::move(v), s);
    }
  }
  Verdict v = make_verdict(Status::Proven, ScopeKind::Bounded, family_detail(considered));
  if (hereditary_reading) {
    v.note =
        "a one-element addition {alpha} is hereditary outright (its only nonempty subset is "
        "itself), and conversely any hereditary addition yields one";
  }
  return certify(std::move(v), s);
}

Verdict check_superset_family_r(const RuleStructure& s, const Budget& b, bool added_reading) {
  const std::vector<SentenceSet> family = rule_set_family(s.carrier, b);
  std::size_t considered = 0;
  for (const SentenceSet& g : family) {
    if (g.is_full()) continue;
    ++considered;
    if (!s.oracle.exists_trivial_superset(g, /*proper=*/true)) {
      Verdict v = make_verdict(Status::Refuted, ScopeKind::Exact);
      v.witness.description = added_reading
                                  ? "proper set exploding with no added proper set"
                                  : "proper set with no proper exploding superset";
      v.witness.data["gamma"] = g.to_string();
      return certify(std::move(v), s);
    }
  }
  Verdict v = make_verdict(Status::Proven, ScopeKind::Bounded, family_detail(considered));
  if (added_reading) {
    v.note = "equivalent to the superset reading: Γ∪Δ is the proper exploding superset";
  }
  return certify(std::move(v), s);
}

constexpr std::size_t kRulePairCandidates = 12;

Verdict check_parecq_r(const RuleStructure& s, const Budget& b, bool rectangle_reading) {
  const std::vector<std::int64_t> sample = rule_element_sample(s.carrier, b);
  const std::size_t ncand = std::min(sample.size(), kRulePairCandidates);
  for (std::size_t i = 0; i < ncand; ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      if (trivial_direct(s, pair_set(s, sample[i], sample[j]))) {
        Verdict v = make_verdict(Status::Proven, ScopeKind::Exact);
        v.witness.description = rectangle_reading
                                    ? "one-by-one rectangle of exploding pairs"
                                    : "singleton witness sets with an exploding pair";
        v.witness.data["gamma"] = "{" + std::to_string(sample[i]) + "}";
        v.witness.data["delta"] = "{" + std::to_string(sample[j]) + "}";
        return v;
      }
    }
  }
  // No concrete partner inside the sample; the oracle may still guarantee one.
  for (std::size_t i = 0; i < ncand; ++i) {
    if (s.oracle.exists_trivial_pair_containing(sample[i])) {
      Verdict v = make_verdict(Status::Proven, ScopeKind::Exact);
      v.witness.description = "element with an exploding partner outside the sample";
      v.witness.data["alpha"] = std::to_string(sample[i]);
      v.note = "partner guaranteed by the triviality rule";
      return certify(std::move(v), s);
    }
  }
  Verdict v = make_verdict(Status::Refuted, ScopeKind::Bounded,
                           "pairs over " + sample_detail(sample.size()));
  v.note = "no exploding pair found within the sample";
  return certify(std::move(v), s);
}

Verdict check_k_para_r(const RuleStructure& s, const PrincipleId& id, const Budget& b) {
  for (std::int64_t e : id.k_elements) {
    if (!s.carrier.contains(e)) {
      throw std::invalid_argument("k_para element " + std::to_string(e) +
                                  " is outside the carrier");
    }
  }
  const std::vector<std::int64_t> sample = rule_element_sample(s.carrier, b);
  for (std::int64_t a : sample) {
    bool survives = true;
    for (std::int64_t e : id.k_elements) {
      if (trivial_direct(s, pair_set(s, a, e))) {
        survives = false;
        break;
      }
    }
    if (survives) {
      Verdict v = make_verdict(Status::Proven, ScopeKind::Exact);
      v.witness.description = "element exploding with no member of the given set";
      v.witness.data["alpha"] = std::to_string(a);
      return v;
    }
  }
  Verdict v = make_verdict(Status::Refuted, ScopeKind::Bounded, sample_detail(sample.size()));
  v.note = "every sampled element explodes with some member of the given set";
  return v;
}

Verdict check_fin_triv_r(const RuleStructure& s, const PrincipleId& id, const Budget& b) {
  const std::vector<SentenceSet> family = rule_set_family(s.carrier, b);
  std::size_t considered = 0;
  for (const SentenceSet& g : family) {
    if (g.kind() != SentenceSet::Kind::Finite) continue;
    if (g.values().size() > static_cast<std::size_t>(id.bound)) continue;
    ++considered;
    if (trivial_direct(s, g)) {
      Verdict v = make_verdict(Status::Proven, ScopeKind::Exact);
      v.witness.description = "finite exploding set";
      v.witness.data["gamma"] = g.to_string();
      return v;
    }
  }
  Verdict v = make_verdict(
      Status::Refuted, ScopeKind::Bounded,
      std::to_string(considered) + " finite sets of size at most " + std::to_string(id.bound) +
          " over a fixed carrier window");
  v.note = "no searched finite set explodes";
  return v;
}

}  // namespace

Verdict check(const RuleStructure& s, const PrincipleId& id, const Budget& b) {
  switch (id.kind) {
    case PrincipleKind::Ecq: return check_ecq_r(s, id, b);
    case PrincipleKind::BotEcq: return check_bot_ecq_r();
    case PrincipleKind::Gecq: return check_gecq_r(s, b);
    case PrincipleKind::Secq: return check_secq_like_r(s, b, false);
    case PrincipleKind::SecqPrime: return check_secq_like_r(s, b, true);
    case PrincipleKind::Specq: return check_one_extension_family_r(s, b, false);
    case PrincipleKind::Pfecq: return check_superset_family_r(s, b, false);
    case PrincipleKind::Pfecq2: return check_superset_family_r(s, b, true);
    case PrincipleKind::Pfecq3: return check_one_extension_family_r(s, b, true);
    case PrincipleKind::Parecq: return check_parecq_r(s, b, false);
    case PrincipleKind::Parecq2: return check_parecq_r(s, b, true);
    case PrincipleKind::KPara: return check_k_para_r(s, id, b);
    case PrincipleKind::NfPara: return check_nf_para_r(s, b);
    case PrincipleKind::FinTriv: return check_fin_triv_r(s, id, b);
    case PrincipleKind::GentleExplosion:
    case PrincipleKind::Lfi:
      throw std::invalid_argument(
          "controlled-explosion principles need a formula language; rule structures have none");
  }
  throw std::invalid_argument("unhandled principle kind");
}

}  // namespace conseq
