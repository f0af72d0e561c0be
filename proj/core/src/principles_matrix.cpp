#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "conseq/principles.hpp"

// Matrix-backend checkers. Universal quantifiers over the whole language are
// sampled from a deterministic formula pool (verdict scope Bounded); purely
// existential principles become Exact the moment a concrete witness is found,
// and a few principles are decided exactly at the variable p because the sets
// involved are substitution instances of their p-versions and matrix
// triviality is substitution-stable.

namespace conseq {

namespace {

using TrivialFn = std::function<bool(const std::vector<Formula>&)>;

constexpr std::size_t kPartnerPrefix = 400;   // pool prefix for per-formula partner searches
constexpr std::size_t kPairSources = 12;      // sampled formulas feeding 2-element outer sets
constexpr std::size_t kTripleSources = 8;     // sampled formulas feeding 3-element outer sets
constexpr std::size_t kParaCandidates = 12;   // candidate witnesses for nf_para / parecq
constexpr std::size_t kComboPrefix = 120;     // scan prefix for fin_triv pairs and triples

struct SearchContext {
  const Signature* sig = nullptr;
  TrivialFn trivial;
  std::optional<PoolEnumerator> pool;
  std::vector<Formula> constants;
  std::optional<std::string> neg;    // unary ¬ when declared
  std::optional<std::string> conj;   // binary ∧ when declared
  std::optional<std::string> arrow;  // binary → when declared
  std::vector<Formula> outer;        // the variable p, then the pool sample
  std::string outer_desc;
  std::vector<Formula> partners;     // pool prefix used as inner candidates
  std::string partner_desc;
  std::vector<Formula> scan;         // lazily materialized capped pool
  std::string scan_desc;
  int max_set_size = 3;
  int jobs = 1;

  std::string fmt(const Formula& f) const { return print(f, *sig); }
  std::string fmt_set(const std::vector<Formula>& fs) const {
    if (fs.empty()) return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += ", ";
      out += fmt(fs[i]);
    }
    return out + "}";
  }
};

SearchContext make_context(const Signature& sig, TrivialFn trivial, const Budget& b) {
  SearchContext cx;
  cx.sig = &sig;
  cx.trivial = std::move(trivial);
  cx.max_set_size = b.max_set_size;
  cx.jobs = b.jobs;
  for (const Connective& c : sig.connectives()) {
    if (c.arity == 0) cx.constants.push_back(Formula::app(c.name, {}));
  }
  if (const Connective* c = sig.find("¬"); c != nullptr && c->arity == 1) cx.neg = "¬";
  if (const Connective* c = sig.find("∧"); c != nullptr && c->arity == 2) cx.conj = "∧";
  if (const Connective* c = sig.find("→"); c != nullptr && c->arity == 2) cx.arrow = "→";

  cx.pool.emplace(sig, pool_variable_names(b.pool_vars), b.pool_depth);
  cx.outer.push_back(Formula::var("p"));
  cx.outer_desc = "the variable p plus ";
  for (Formula& f : sample_pool_formulas(*cx.pool, b, cx.outer_desc)) {
    if (!(f == cx.outer.front())) cx.outer.push_back(std::move(f));
  }
  const std::size_t np =
      static_cast<std::size_t>(std::min<unsigned long long>(cx.pool->total(), kPartnerPrefix));
  cx.partners = cx.pool->prefix(np);
  cx.partner_desc = "the first " + std::to_string(np) + " pool formulas";

  const std::size_t ns =
      static_cast<std::size_t>(std::min<unsigned long long>(cx.pool->total(), b.pool_cap));
  cx.scan_desc = "the first " + std::to_string(ns) + " of " + std::to_string(cx.pool->total()) +
                 " pool formulas";
  return cx;
}

const std::vector<Formula>& full_scan(SearchContext& cx, const Budget& b) {
  if (cx.scan.empty()) {
    const std::size_t ns =
        static_cast<std::size_t>(std::min<unsigned long long>(cx.pool->total(), b.pool_cap));
    cx.scan = cx.pool->prefix(ns);
  }
  return cx.scan;
}

// Index of the first formula satisfying pred, or v.size(). With jobs > 1 the
// scan is striped across threads; the atomic minimum keeps the result equal
// to the sequential one.
std::size_t find_first_hit(const std::vector<Formula>& v, int jobs,
                           const std::function<bool(const Formula&)>& pred) {
  const std::size_t none = v.size();
  if (jobs <= 1 || v.size() < 2048) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (pred(v[i])) return i;
    }
    return none;
  }
  std::atomic<std::size_t> best{none};
  const int nthreads = std::max(1, std::min(jobs, 16));
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < v.size();
           i += static_cast<std::size_t>(nthreads)) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (pred(v[i])) {
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    });
  }
  for (std::thread& th : threads) th.join();
  return best.load();
}

// Witness-first partner candidates for alpha: alpha itself (covers
// single-formula antitheorems), declared constants, ¬alpha, ¬(alpha→alpha),
// then the pool prefix.
std::vector<Formula> partner_ladder(const SearchContext& cx, const Formula& alpha) {
  std::vector<Formula> out;
  out.push_back(alpha);
  out.insert(out.end(), cx.constants.begin(), cx.constants.end());
  if (cx.neg) {
    out.push_back(Formula::app(*cx.neg, {alpha}));
    if (cx.arrow) {
      out.push_back(Formula::app(*cx.neg, {Formula::app(*cx.arrow, {alpha, alpha})}));
    }
  }
  out.insert(out.end(), cx.partners.begin(), cx.partners.end());
  return out;
}

std::optional<Formula> exploding_partner(const SearchContext& cx, const Formula& alpha) {
  for (const Formula& beta : partner_ladder(cx, alpha)) {
    if (cx.trivial({alpha, beta})) return beta;
  }
  return std::nullopt;
}

std::string partner_detail(const SearchContext& cx) {
  return "partners tried per formula: itself, declared constants, negation schemas, then " +
         cx.partner_desc;
}

const char* kPropernessNote =
    "finite premise sets are always proper subsets of the infinite language";

Verdict bounded(Status st, std::string detail) {
  Verdict v;
  v.status = st;
  v.scope = ScopeKind::Bounded;
  v.scope_detail = std::move(detail);
  return v;
}

Verdict exact(Status st, std::string note = {}) {
  Verdict v;
  v.status = st;
  v.note = std::move(note);
  return v;
}

// Candidate one-element extensions for an outer set: declared constants, the
// never-designated schema ¬(p→p), per-member schemas ¬γ and ¬(γ→γ), then the
// pool prefix.
std::vector<Formula> extension_ladder(const SearchContext& cx,
                                      const std::vector<Formula>& gamma) {
  std::vector<Formula> out = cx.constants;
  if (cx.neg && cx.arrow) {
    const Formula p = Formula::var("p");
    out.push_back(Formula::app(*cx.neg, {Formula::app(*cx.arrow, {p, p})}));
  }
  if (cx.neg) {
    for (const Formula& g : gamma) {
      out.push_back(Formula::app(*cx.neg, {g}));
      if (cx.arrow) {
        out.push_back(Formula::app(*cx.neg, {Formula::app(*cx.arrow, {g, g})}));
      }
    }
  }
  out.insert(out.end(), cx.partners.begin(), cx.partners.end());
  return out;
}

std::vector<std::vector<Formula>> build_outer_sets(const SearchContext& cx) {
  std::vector<std::vector<Formula>> sets;
  sets.push_back({});
  if (cx.max_set_size >= 1) {
    for (const Formula& f : cx.outer) sets.push_back({f});
  }
  if (cx.max_set_size >= 2) {
    const std::size_t n = std::min(cx.outer.size(), kPairSources);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) sets.push_back({cx.outer[i], cx.outer[j]});
    }
  }
  if (cx.max_set_size >= 3) {
    const std::size_t n = std::min(cx.outer.size(), kTripleSources);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          sets.push_back({cx.outer[i], cx.outer[j], cx.outer[k]});
        }
      }
    }
  }
  return sets;
}

std::string outer_sets_detail(const SearchContext& cx) {
  return "outer sets: empty set, singletons over " + cx.outer_desc + ", pairs over the first " +
         std::to_string(kPairSources) + " and triples over the first " +
         std::to_string(kTripleSources) + " of those";
}

std::vector<Formula> with_extension(const std::vector<Formula>& gamma, const Formula& delta) {
  std::vector<Formula> out = gamma;
  out.push_back(delta);
  return out;
}

Verdict check_gecq_m(SearchContext& cx) {
  const std::string detail = "formulas: " + cx.outer_desc + "; " + partner_detail(cx);
  Witness shown;
  for (const Formula& alpha : cx.outer) {
    const std::optional<Formula> beta = exploding_partner(cx, alpha);
    if (!beta) {
      Verdict v = bounded(Status::Refuted, detail);
      v.witness.description = "formula with no exploding partner within the search";
      v.witness.data["alpha"] = cx.fmt(alpha);
      return v;
    }
    if (shown.empty()) {
      shown.description = "every sampled formula found an exploding partner; shown for p";
      shown.data["alpha"] = cx.fmt(alpha);
      shown.data["beta"] = cx.fmt(*beta);
    }
  }
  Verdict v = bounded(Status::Proven, detail);
  v.witness = std::move(shown);
  return v;
}

Verdict check_nf_para_m(SearchContext& cx, const Budget& b) {
  const std::vector<Formula>& scan = full_scan(cx, b);
  const std::size_t ncand = std::min(cx.outer.size(), kParaCandidates);
  const std::string detail = "candidates: the first " + std::to_string(ncand) + " of " +
                             cx.outer_desc + "; partners scanned over " + cx.scan_desc;
  for (std::size_t i = 0; i < ncand; ++i) {
    const Formula& alpha = cx.outer[i];
    // Cheap witness-first rejection before the full scan.
    if (exploding_partner(cx, alpha)) continue;
    const std::size_t hit = find_first_hit(scan, cx.jobs, [&](const Formula& beta) {
      return cx.trivial({alpha, beta});
    });
    if (hit == scan.size()) {
      Verdict v = bounded(Status::Proven, detail);
      v.witness.description = "formula exploding with no scanned partner";
      v.witness.data["alpha"] = cx.fmt(alpha);
      return v;
    }
  }
  Verdict v = bounded(Status::Refuted, detail);
  v.note = "every candidate formula found an exploding partner";
  return v;
}

Verdict check_secq_m(SearchContext& cx) {
  const std::string detail = "exploding sets containing alpha searched among pairs; formulas: " +
                             cx.outer_desc + "; " + partner_detail(cx);
  Witness shown;
  for (const Formula& alpha : cx.outer) {
    const std::optional<Formula> beta = exploding_partner(cx, alpha);
    if (!beta) {
      Verdict v = bounded(Status::Refuted, detail);
      v.witness.description = "formula for which no small exploding set containing it was found";
      v.witness.data["alpha"] = cx.fmt(alpha);
      return v;
    }
    if (shown.empty()) {
      shown.description = "every sampled formula lies in an exploding pair; shown for p";
      shown.data["alpha"] = cx.fmt(alpha);
      shown.data["gamma"] = cx.fmt_set({alpha, *beta});
    }
  }
  Verdict v = bounded(Status::Proven, detail);
  v.witness = std::move(shown);
  v.note = kPropernessNote;
  return v;
}

Verdict check_secq_prime_m(SearchContext& cx) {
  const std::string detail =
      "side sets tried: empty set and singletons; formulas: " + cx.outer_desc + "; " +
      partner_detail(cx);
  Witness shown;
  for (const Formula& alpha : cx.outer) {
    std::optional<Formula> side;
    bool empty_side = cx.trivial({alpha});  // Γ = ∅ already explodes together with α
    bool found = empty_side;
    if (!found) {
      for (const Formula& beta : partner_ladder(cx, alpha)) {
        if (cx.trivial({beta, alpha})) {
          side = beta;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      Verdict v = bounded(Status::Refuted, detail);
      v.witness.description = "formula for which no side set Γ with Γ∪{alpha} exploding was found";
      v.witness.data["alpha"] = cx.fmt(alpha);
      return v;
    }
    if (shown.empty()) {
      shown.description = "side set found for every sampled formula; shown for p";
      shown.data["alpha"] = cx.fmt(alpha);
      shown.data["gamma"] = empty_side ? "∅" : cx.fmt_set({*side});
    }
  }
  Verdict v = bounded(Status::Proven, detail);
  v.witness = std::move(shown);
  v.note = kPropernessNote;
  return v;
}

Verdict check_specq_m(SearchContext& cx) {
  const std::string detail = outer_sets_detail(cx) +
                             "; extensions tried: declared constants, negation schemas, then " +
                             cx.partner_desc;
  Witness shown;
  for (const std::vector<Formula>& gamma : build_outer_sets(cx)) {
    std::optional<Formula> delta;
    for (const Formula& cand : extension_ladder(cx, gamma)) {
      if (cx.trivial(with_extension(gamma, cand))) {
        delta = cand;
        break;
      }
    }
    if (!delta) {
      Verdict v = bounded(Status::Refuted, detail);
      v.witness.description = "set with no exploding one-element extension within the search";
      v.witness.data["gamma"] = cx.fmt_set(gamma);
      return v;
    }
    if (shown.empty()) {
      shown.description = "exploding one-element extension found for every outer set; shown for ∅";
      shown.data["gamma"] = cx.fmt_set(gamma);
      shown.data["alpha"] = cx.fmt(*delta);
    }
  }
  Verdict v = bounded(Status::Proven, detail);
  v.witness = std::move(shown);
  v.note = kPropernessNote;
  return v;
}

Verdict check_pfecq_m(SearchContext& cx) {
  const std::string detail = outer_sets_detail(cx) +
                             "; supersets tried: the set itself, then one-element extensions by "
                             "declared constants, negation schemas, and " +
                             cx.partner_desc;
  Witness shown;
  for (const std::vector<Formula>& gamma : build_outer_sets(cx)) {
    std::optional<std::vector<Formula>> delta;
    if (cx.trivial(gamma)) delta = gamma;
    if (!delta) {
      for (const Formula& cand : extension_ladder(cx, gamma)) {
        if (std::vector<Formula> ext = with_extension(gamma, cand); cx.trivial(ext)) {
          delta = std::move(ext);
          break;
        }
      }
    }
    if (!delta) {
      Verdict v = bounded(Status::Refuted, detail);
      v.witness.description = "set with no exploding superset within the search";
      v.witness.data["gamma"] = cx.fmt_set(gamma);
      return v;
    }
    if (shown.empty()) {
      shown.description = "exploding superset found for every outer set; shown for ∅";
      shown.data["gamma"] = cx.fmt_set(gamma);
      shown.data["delta"] = cx.fmt_set(*delta);
    }
  }
  Verdict v = bounded(Status::Proven, detail);
  v.witness = std::move(shown);
  v.note = kPropernessNote;
  return v;
}

Verdict check_pfecq2_m(SearchContext& cx) {
  const std::string detail = outer_sets_detail(cx) +
                             "; added sets tried: empty set, then singletons from declared "
                             "constants, negation schemas, and " +
                             cx.partner_desc;
  Witness shown;
  for (const std::vector<Formula>& gamma : build_outer_sets(cx)) {
    std::optional<std::vector<Formula>> added;
    if (cx.trivial(gamma)) added = std::vector<Formula>{};
    if (!added) {
      for (const Formula& cand : extension_ladder(cx, gamma)) {
        if (cx.trivial(with_extension(gamma, cand))) {
          added = std::vector<Formula>{cand};
          break;
        }
      }
    }
    if (!added) {
      Verdict v = bounded(Status::Refuted, detail);
      v.witness.description = "set exploding with no added set within the search";
      v.witness.data["gamma"] = cx.fmt_set(gamma);
      return v;
    }
    if (shown.empty()) {
      shown.description = "added set found for every outer set; shown for ∅";
      shown.data["gamma"] = cx.fmt_set(gamma);
      shown.data["delta"] = cx.fmt_set(*added);
    }
  }
  Verdict v = bounded(Status::Proven, detail);
  v.witness = std::move(shown);
  v.note = kPropernessNote;
  return v;
}

Verdict check_pfecq3_m(SearchContext& cx) {
  // A singleton Δ = {δ} settles the hereditary condition outright: its only
  // nonempty subset is itself.
  const std::string detail = outer_sets_detail(cx) +
                             "; additions tried: singletons from declared constants, negation "
                             "schemas, and " +
                             cx.partner_desc;
  Witness shown;
  for (const std::vector<Formula>& gamma : build_outer_sets(cx)) {
    std::optional<Formula> delta;
    for (const Formula& cand : extension_ladder(cx, gamma)) {
      if (cx.trivial(with_extension(gamma, cand))) {
        delta = cand;
        break;
      }
    }
    if (!delta) {
      Verdict v = bounded(Status::Refuted, detail);
      v.witness.description =
          "set with no hereditarily exploding nonempty addition within the search";
      v.witness.data["gamma"] = cx.fmt_set(gamma);
      return v;
    }
    if (shown.empty()) {
      shown.description = "hereditary singleton addition found for every outer set; shown for ∅";
      shown.data["gamma"] = cx.fmt_set(gamma);
      shown.data["delta"] = cx.fmt_set({*delta});
    }
  }
  Verdict v = bounded(Status::Proven, detail);
  v.witness = std::move(shown);
  v.note = kPropernessNote;
  return v;
}

Verdict check_parecq_m(SearchContext& cx) {
  const std::size_t ncand = std::min(cx.outer.size(), kParaCandidates);
  const std::string detail = "pairs searched from the first " + std::to_string(ncand) + " of " +
                             cx.outer_desc + "; " + partner_detail(cx);
  for (std::size_t i = 0; i < ncand; ++i) {
    const Formula& alpha = cx.outer[i];
    if (const std::optional<Formula> beta = exploding_partner(cx, alpha)) {
      Verdict v = exact(Status::Proven);
      v.witness.description = "singleton witness sets: every member of Γ explodes with a member of Δ";
      v.witness.data["gamma"] = cx.fmt_set({alpha});
      v.witness.data["delta"] = cx.fmt_set({*beta});
      return v;
    }
  }
  Verdict v = bounded(Status::Refuted, detail);
  v.note = "no exploding pair found within the search";
  return v;
}

Verdict check_parecq2_m(SearchContext& cx) {
  const std::size_t ncand = std::min(cx.outer.size(), kParaCandidates);
  const std::string detail = "rectangles searched from the first " + std::to_string(ncand) +
                             " of " + cx.outer_desc + "; " + partner_detail(cx);
  for (std::size_t i = 0; i < ncand; ++i) {
    const Formula& alpha = cx.outer[i];
    for (const Formula& beta : partner_ladder(cx, alpha)) {
      if (cx.trivial({alpha, beta})) {
        Verdict v = exact(Status::Proven);
        v.witness.description = "one-by-one rectangle of exploding pairs";
        v.witness.data["gamma"] = cx.fmt_set({alpha});
        v.witness.data["delta"] = cx.fmt_set({beta});
        return v;
      }
    }
  }
  Verdict v = bounded(Status::Refuted, detail);
  v.note = "no exploding rectangle found within the search";
  return v;
}

Verdict check_fin_triv_m(SearchContext& cx, const PrincipleId& id, const Budget& b) {
  const std::vector<Formula>& scan = full_scan(cx, b);
  const std::size_t prefix = std::min(scan.size(), kComboPrefix);
  const std::string detail =
      "singletons over " + cx.scan_desc + "; pairs and triples over its first " +
      std::to_string(prefix) + " formulas; declared constants and collapse schemas first";
  auto proven = [&](std::vector<Formula> gamma) {
    Verdict v = exact(Status::Proven);
    v.witness.description = "finite exploding set";
    v.witness.data["gamma"] = cx.fmt_set(gamma);
    return v;
  };
  if (id.bound >= 1) {
    for (const Formula& c : cx.constants) {
      if (cx.trivial({c})) return proven({c});
    }
    std::vector<Formula> schemas;
    const Formula p = Formula::var("p");
    if (cx.neg && cx.conj) {
      schemas.push_back(Formula::app(*cx.conj, {p, Formula::app(*cx.neg, {p})}));
    }
    if (cx.neg && cx.arrow) {
      schemas.push_back(Formula::app(*cx.neg, {Formula::app(*cx.arrow, {p, p})}));
    }
    for (const Formula& s : schemas) {
      if (cx.trivial({s})) return proven({s});
    }
    const std::size_t hit = find_first_hit(scan, cx.jobs, [&](const Formula& f) {
      return cx.trivial({f});
    });
    if (hit < scan.size()) return proven({scan[hit]});
  }
  if (id.bound >= 2) {
    for (std::size_t i = 0; i < prefix; ++i) {
      for (std::size_t j = i + 1; j < prefix; ++j) {
        if (cx.trivial({scan[i], scan[j]})) return proven({scan[i], scan[j]});
      }
    }
  }
  if (id.bound >= 3) {
    for (std::size_t i = 0; i < prefix; ++i) {
      for (std::size_t j = i + 1; j < prefix; ++j) {
        for (std::size_t k = j + 1; k < prefix; ++k) {
          if (cx.trivial({scan[i], scan[j], scan[k]})) {
            return proven({scan[i], scan[j], scan[k]});
          }
        }
      }
    }
  }
  Verdict v = bounded(Status::Refuted, detail);
  v.note = "no searched set of size up to " + std::to_string(std::min(id.bound, 3)) + " explodes";
  return v;
}

const Connective* require_unary(const Signature& sig, const std::string& name) {
  const Connective* c = sig.find(name);
  if (c == nullptr || c->arity != 1) {
    throw std::domain_error("no unary connective named '" + name + "' in the signature");
  }
  return c;
}

// ecq(op) is decided exactly at the variable p: {α, op(α)} is the
// substitution instance of {p, op(p)} under p ↦ α, and an exploding set
// stays exploding under substitution, while p itself is one of the α.
Verdict ecq_at_variable(const TrivialFn& trivial, const Signature& sig,
                        const std::string& op_name) {
  require_unary(sig, op_name);
  const Formula p = Formula::var("p");
  const Formula op_p = Formula::app(op_name, {p});
  if (trivial({p, op_p})) {
    return exact(Status::Proven, "decided at the variable p; instances follow by substitution");
  }
  Verdict v = exact(Status::Refuted);
  v.witness.description = "the pair at the variable p does not explode";
  v.witness.data["gamma"] = "{p, " + print(op_p, sig) + "}";
  v.witness.data["not_entailed"] = "q";
  return v;
}

Verdict bot_ecq_over_constants(const TrivialFn& trivial, const Signature& sig) {
  std::vector<const Connective*> consts;
  for (const Connective& c : sig.connectives()) {
    if (c.arity == 0) consts.push_back(&c);
  }
  if (consts.empty()) {
    return exact(Status::Refuted, "signature declares no constants");
  }
  for (const Connective* c : consts) {
    if (trivial({Formula::app(c->name, {})})) {
      Verdict v = exact(Status::Proven);
      v.witness.description = "constant that explodes on its own";
      v.witness.data["constant"] = c->name;
      return v;
    }
  }
  return exact(Status::Refuted, "no declared constant explodes on its own");
}

std::vector<Formula> parse_circle(const Signature& sig, const std::vector<std::string>& texts) {
  if (texts.empty()) throw std::invalid_argument("the consistency set must be nonempty");
  std::vector<Formula> circle;
  circle.reserve(texts.size());
  for (const std::string& t : texts) circle.push_back(parse(t, sig));
  const std::set<std::string> used = vars(circle);
  for (const std::string& vname : used) {
    if (vname != "p") {
      throw std::domain_error("consistency-set formulas may only use the variable p; found '" +
                              vname + "'");
    }
  }
  return circle;
}

Verdict gentle_explosion_at_variable(const TrivialFn& trivial, const Signature& sig,
                                     const std::vector<std::string>& circle_texts) {
  require_unary(sig, "¬");
  std::vector<Formula> set = parse_circle(sig, circle_texts);
  const Formula p = Formula::var("p");
  set.push_back(p);
  set.push_back(Formula::app("¬", {p}));
  if (trivial(set)) {
    return exact(Status::Proven, "decided at the variable p; instances follow by substitution");
  }
  Verdict v = exact(Status::Refuted);
  v.witness.description = "the controlled set at the variable p does not explode";
  std::string listed;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) listed += ", ";
    listed += print(set[i], sig);
  }
  v.witness.data["gamma"] = "{" + listed + "}";
  return v;
}

Verdict dispatch_bounded(SearchContext& cx, const PrincipleId& id, const Budget& b) {
  switch (id.kind) {
    case PrincipleKind::Gecq: return check_gecq_m(cx);
    case PrincipleKind::Secq: return check_secq_m(cx);
    case PrincipleKind::SecqPrime: return check_secq_prime_m(cx);
    case PrincipleKind::Specq: return check_specq_m(cx);
    case PrincipleKind::Pfecq: return check_pfecq_m(cx);
    case PrincipleKind::Pfecq2: return check_pfecq2_m(cx);
    case PrincipleKind::Pfecq3: return check_pfecq3_m(cx);
    case PrincipleKind::Parecq: return check_parecq_m(cx);
    case PrincipleKind::Parecq2: return check_parecq2_m(cx);
    case PrincipleKind::NfPara: return check_nf_para_m(cx, b);
    case PrincipleKind::FinTriv: return check_fin_triv_m(cx, id, b);
    default: break;
  }
  throw std::invalid_argument("unhandled principle kind");
}

}  // namespace

Verdict check(const Matrix& m, const PrincipleId& id, const Budget& b) {
  const Signature& sig = m.signature();
  const TrivialFn trivial = [&m](const std::vector<Formula>& g) { return m.trivializes(g); };
  switch (id.kind) {
    case PrincipleKind::Ecq: return ecq_at_variable(trivial, sig, id.op_name);
    case PrincipleKind::BotEcq: return bot_ecq_over_constants(trivial, sig);
    case PrincipleKind::GentleExplosion: return gentle_explosion_at_variable(trivial, sig, id.circle);
    case PrincipleKind::Lfi: {
      const std::vector<Formula> circle = parse_circle(sig, id.circle);
      const LfiReport report = verify_lfi(m, "¬", circle);
      return report.overall;
    }
    case PrincipleKind::KPara:
      throw std::invalid_argument(
          "k_para fixes a finite set of carrier elements; matrix logics have none");
    default: break;
  }
  SearchContext cx = make_context(sig, trivial, b);
  return dispatch_bounded(cx, id, b);
}

Verdict check_companion(const Matrix& base, CompanionMode mode, const PrincipleId& id,
                        const Budget& b, const CompanionOptions& options) {
  const Signature& sig = base.signature();
  const TrivialFn trivial = [&base, mode, options](const std::vector<Formula>& g) {
    return companion_trivializes(base, mode, g, options);
  };
  switch (id.kind) {
    case PrincipleKind::Ecq:
      // Exact at p for every mode: a refutation at p is a genuine
      // counterexample, and the only way {p, op(p)} can companion-explode is
      // through an exploding subset route, which is substitution-stable.
      return ecq_at_variable(trivial, sig, id.op_name);
    case PrincipleKind::BotEcq: return bot_ecq_over_constants(trivial, sig);
    case PrincipleKind::GentleExplosion:
    case PrincipleKind::Lfi:
    case PrincipleKind::KPara:
      throw std::invalid_argument("principle not supported for companion relations");
    default: break;
  }
  SearchContext cx = make_context(sig, trivial, b);
  return dispatch_bounded(cx, id, b);
}

std::vector<Formula> quasi_negations(const Matrix& m, const Formula& alpha, const Budget& b) {
  PoolEnumerator pool(m.signature(), pool_variable_names(b.pool_vars), b.pool_depth);
  const std::vector<Formula> all = pool.materialize(b.pool_cap);
  std::vector<Formula> out;
  for (const Formula& beta : all) {
    if (m.trivializes({alpha, beta})) out.push_back(beta);
  }
  return out;
}

LfiReport verify_lfi(const Matrix& m, const std::string& neg_op,
                     const std::vector<Formula>& circle_p) {
  const Signature& sig = m.signature();
  require_unary(sig, neg_op);
  if (circle_p.empty()) throw std::invalid_argument("the consistency set must be nonempty");
  for (const std::string& vname : vars(circle_p)) {
    if (vname != "p") {
      throw std::domain_error("consistency-set formulas may only use the variable p; found '" +
                              vname + "'");
    }
  }
  const Formula p = Formula::var("p");
  const Formula np = Formula::app(neg_op, {p});
  const char* at_p = "decided at the variable p; instances follow by substitution";

  LfiReport r;

  // Clause (i): some φ with {φ, ¬φ} not exploding. The variable p is the
  // canonical candidate; if {p, ¬p} explodes, so does every instance.
  if (!m.trivializes({p, np})) {
    r.paraconsistency = exact(Status::Proven, at_p);
    r.paraconsistency.witness.description = "non-exploding contradictory pair";
    r.paraconsistency.witness.data["phi"] = "p";
  } else {
    r.paraconsistency = exact(Status::Refuted, at_p);
    r.paraconsistency.witness.description = "the contradictory pair at p explodes";
  }

  // Clause (ii): some α, β with β outside both C(○(α)∪{α}) and C(○(α)∪{¬α}).
  // A fresh variable q lies outside a consequence set exactly when the set
  // does not explode, so the clause holds at α = p iff neither side explodes;
  // if either side explodes at p, it explodes at every α.
  std::vector<Formula> left = circle_p;
  left.push_back(p);
  std::vector<Formula> right = circle_p;
  right.push_back(np);
  const bool left_explodes = m.trivializes(left);
  const bool right_explodes = m.trivializes(right);
  if (!left_explodes && !right_explodes) {
    r.controlled_pair = exact(Status::Proven, at_p);
    r.controlled_pair.witness.description =
        "alpha = p, beta = q: q escapes both controlled consequence sets";
  } else {
    r.controlled_pair = exact(Status::Refuted, at_p);
    r.controlled_pair.witness.description =
        left_explodes ? "the controlled set with p already explodes"
                      : "the controlled set with ¬p already explodes";
  }

  // Clause (iii): ○(φ) ∪ {φ, ¬φ} explodes for every φ; exact at p again.
  std::vector<Formula> full = circle_p;
  full.push_back(p);
  full.push_back(np);
  if (m.trivializes(full)) {
    r.gentle_explosion = exact(Status::Proven, at_p);
  } else {
    r.gentle_explosion = exact(Status::Refuted, at_p);
    r.gentle_explosion.witness.description = "the controlled contradictory set at p does not explode";
  }

  const bool all = r.paraconsistency.status == Status::Proven &&
                   r.controlled_pair.status == Status::Proven &&
                   r.gentle_explosion.status == Status::Proven;
  r.overall = exact(all ? Status::Proven : Status::Refuted);
  std::string clauses;
  clauses += "paraconsistency ";
  clauses += to_string(r.paraconsistency.status);
  clauses += ", controlled pair ";
  clauses += to_string(r.controlled_pair.status);
  clauses += ", controlled explosion ";
  clauses += to_string(r.gentle_explosion.status);
  r.overall.note = clauses;
  return r;
}

std::optional<Formula> find_consistency_set(const Matrix& m, const std::string& neg_op,
                                            int depth_bound) {
  require_unary(m.signature(), neg_op);
  PoolEnumerator pool(m.signature(), {"p"}, depth_bound);
  std::optional<Formula> found;
  pool.stream([&](const Formula& psi) {
    const LfiReport r = verify_lfi(m, neg_op, {psi});
    if (r.overall.status == Status::Proven) {
      found = psi;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace conseq
