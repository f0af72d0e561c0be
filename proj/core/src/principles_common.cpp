#include "conseq/principles.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace conseq {

namespace {

PrincipleId make(PrincipleKind kind) {
  PrincipleId p;
  p.kind = kind;
  return p;
}

}  // namespace

PrincipleId PrincipleId::ecq(std::string op) {
  PrincipleId p = make(PrincipleKind::Ecq);
  p.op_name = std::move(op);
  return p;
}
PrincipleId PrincipleId::bot_ecq() { return make(PrincipleKind::BotEcq); }
PrincipleId PrincipleId::gecq() { return make(PrincipleKind::Gecq); }
PrincipleId PrincipleId::secq() { return make(PrincipleKind::Secq); }
PrincipleId PrincipleId::secq_prime() { return make(PrincipleKind::SecqPrime); }
PrincipleId PrincipleId::specq() { return make(PrincipleKind::Specq); }
PrincipleId PrincipleId::pfecq() { return make(PrincipleKind::Pfecq); }
PrincipleId PrincipleId::pfecq2() { return make(PrincipleKind::Pfecq2); }
PrincipleId PrincipleId::pfecq3() { return make(PrincipleKind::Pfecq3); }
PrincipleId PrincipleId::parecq() { return make(PrincipleKind::Parecq); }
PrincipleId PrincipleId::parecq2() { return make(PrincipleKind::Parecq2); }
PrincipleId PrincipleId::k_para(std::vector<std::int64_t> k) {
  PrincipleId p = make(PrincipleKind::KPara);
  p.k_elements = std::move(k);
  return p;
}
PrincipleId PrincipleId::nf_para() { return make(PrincipleKind::NfPara); }
PrincipleId PrincipleId::fin_triv(int bound) {
  PrincipleId p = make(PrincipleKind::FinTriv);
  p.bound = bound;
  return p;
}
PrincipleId PrincipleId::gentle_explosion(std::vector<std::string> circle) {
  PrincipleId p = make(PrincipleKind::GentleExplosion);
  p.circle = std::move(circle);
  return p;
}
PrincipleId PrincipleId::lfi(std::vector<std::string> circle) {
  PrincipleId p = make(PrincipleKind::Lfi);
  p.circle = std::move(circle);
  return p;
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string PrincipleId::to_string() const {
  switch (kind) {
    case PrincipleKind::Ecq: return "ecq:" + op_name;
    case PrincipleKind::BotEcq: return "bot_ecq";
    case PrincipleKind::Gecq: return "gecq";
    case PrincipleKind::Secq: return "secq";
    case PrincipleKind::SecqPrime: return "secq_prime";
    case PrincipleKind::Specq: return "specq";
    case PrincipleKind::Pfecq: return "pfecq";
    case PrincipleKind::Pfecq2: return "pfecq2";
    case PrincipleKind::Pfecq3: return "pfecq3";
    case PrincipleKind::Parecq: return "parecq";
    case PrincipleKind::Parecq2: return "parecq2";
    case PrincipleKind::KPara: {
      std::vector<std::string> parts;
      for (std::int64_t v : k_elements) parts.push_back(std::to_string(v));
      return "k_para:" + join(parts, ',');
    }
    case PrincipleKind::NfPara: return "nf_para";
    case PrincipleKind::FinTriv: return "fin_triv:" + std::to_string(bound);
    case PrincipleKind::GentleExplosion: return "gentle_explosion:" + join(circle, ';');
    case PrincipleKind::Lfi: return "lfi:" + join(circle, ';');
  }
  return "?";
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

bool parse_i64(const std::string& text, std::int64_t& out) {
  try {
    std::size_t pos = 0;
    out = std::stoll(text, &pos);
    return pos == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::optional<PrincipleId> parse_principle(const std::string& text) {
  std::string head = text;
  std::string param;
  bool has_param = false;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    param = text.substr(colon + 1);
    has_param = true;
  }

  if (head == "ecq") {
    std::string op = has_param ? param : "¬";
    if (op == "neg") op = "¬";
    if (op.empty()) return std::nullopt;
    return PrincipleId::ecq(op);
  }
  if (head == "k_para") {
    std::vector<std::int64_t> k;
    if (has_param && !param.empty()) {
      for (const std::string& part : split(param, ',')) {
        std::int64_t v = 0;
        if (!parse_i64(part, v)) return std::nullopt;
        k.push_back(v);
      }
    }
    return PrincipleId::k_para(std::move(k));
  }
  if (head == "fin_triv") {
    int bound = 3;
    if (has_param) {
      std::int64_t v = 0;
      if (!parse_i64(param, v) || v < 1 || v > 16) return std::nullopt;
      bound = static_cast<int>(v);
    }
    return PrincipleId::fin_triv(bound);
  }
  if (head == "gentle_explosion" || head == "lfi") {
    if (!has_param || param.empty()) return std::nullopt;
    std::vector<std::string> circle = split(param, ';');
    for (const std::string& f : circle) {
      if (f.empty()) return std::nullopt;
    }
    return head == "lfi" ? PrincipleId::lfi(std::move(circle))
                         : PrincipleId::gentle_explosion(std::move(circle));
  }
  if (has_param) return std::nullopt;
  if (head == "bot_ecq") return PrincipleId::bot_ecq();
  if (head == "gecq") return PrincipleId::gecq();
  if (head == "secq") return PrincipleId::secq();
  if (head == "secq_prime") return PrincipleId::secq_prime();
  if (head == "specq") return PrincipleId::specq();
  if (head == "pfecq") return PrincipleId::pfecq();
  if (head == "pfecq2") return PrincipleId::pfecq2();
  if (head == "pfecq3") return PrincipleId::pfecq3();
  if (head == "parecq") return PrincipleId::parecq();
  if (head == "parecq2") return PrincipleId::parecq2();
  if (head == "nf_para") return PrincipleId::nf_para();
  return std::nullopt;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Proven: return "proven";
    case Status::Refuted: return "refuted";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(ScopeKind k) {
  return k == ScopeKind::Exact ? "exact" : "bounded";
}

std::vector<std::string> pool_variable_names(int count) {
  static const char* leading[] = {"p", "q", "r", "s"};
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    if (i < 4) {
      names.emplace_back(leading[i]);
    } else {
      names.push_back("v" + std::to_string(i));
    }
  }
  return names;
}

std::vector<Formula> sample_pool_formulas(const PoolEnumerator& pool, const Budget& b,
                                          std::string& description) {
  const unsigned long long total = pool.total();
  const std::size_t limit =
      static_cast<std::size_t>(std::min<unsigned long long>(total, b.pool_cap));
  const std::size_t want = b.sample_formulas < 0 ? 0 : static_cast<std::size_t>(b.sample_formulas);
  const std::string universe = limit < total
                                   ? "the first " + std::to_string(limit) + " of " +
                                         std::to_string(total) + " pool formulas"
                                   : "all " + std::to_string(total) + " pool formulas";
  if (want >= limit) {
    description += universe;
    return pool.prefix(limit);
  }
  description += std::to_string(want) + " formulas drawn (seed " + std::to_string(b.seed) +
                 ") from " + universe;
  std::mt19937_64 rng(b.seed);
  std::uniform_int_distribution<std::size_t> dist(0, limit - 1);
  std::set<std::size_t> picks;
  while (picks.size() < want) picks.insert(dist(rng));
  std::vector<Formula> out;
  out.reserve(want);
  std::size_t index = 0;
  auto next = picks.begin();
  pool.stream([&](const Formula& f) {
    if (next == picks.end()) return false;
    if (index == *next) {
      out.push_back(f);
      ++next;
    }
    ++index;
    return true;
  });
  return out;
}

namespace {

std::vector<std::int64_t> carrier_window(const Carrier& carrier) {
  switch (carrier.kind) {
    case CarrierKind::NaturalsFromOne: return {1, 2, 3, 4, 5, 6, 7};
    case CarrierKind::Naturals: return {0, 1, 2, 3, 4, 5, 6};
    case CarrierKind::Integers: return {-3, -2, -1, 0, 1, 2, 3};
    case CarrierKind::Finite: break;
  }
  throw std::invalid_argument("rule families need a countable carrier");
}

}  // namespace

std::vector<SentenceSet> rule_set_family(const Carrier& carrier, const Budget& b) {
  const std::vector<std::int64_t> window = carrier_window(carrier);
  const std::size_t cap = b.sample_sets < 0 ? 0 : static_cast<std::size_t>(b.sample_sets);
  const int max_size = std::min<int>(b.max_set_size, static_cast<int>(window.size()));
  std::vector<SentenceSet> family;
  for (int s = 0; s <= max_size && family.size() < cap; ++s) {
    // All size-s subsets of the window, in lexicographic index order.
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    std::vector<std::vector<std::int64_t>> chosen;
    while (true) {
      std::vector<std::int64_t> values;
      values.reserve(s);
      for (int i : idx) values.push_back(window[i]);
      chosen.push_back(std::move(values));
      int i = s - 1;
      while (i >= 0 && idx[i] == static_cast<int>(window.size()) - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    for (const auto& values : chosen) {
      if (family.size() >= cap) break;
      family.push_back(SentenceSet::finite(carrier, values));
    }
    for (const auto& values : chosen) {
      if (family.size() >= cap) break;
      family.push_back(SentenceSet::cofinite(carrier, values));
    }
  }
  return family;
}

std::vector<std::int64_t> rule_element_sample(const Carrier& carrier, const Budget& b) {
  const std::size_t count = b.sample_elements < 0 ? 0 : static_cast<std::size_t>(b.sample_elements);
  std::vector<std::int64_t> out;
  out.reserve(count);
  switch (carrier.kind) {
    case CarrierKind::NaturalsFromOne:
      for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<std::int64_t>(i) + 1);
      break;
    case CarrierKind::Naturals:
      for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<std::int64_t>(i));
      break;
    case CarrierKind::Integers:
      for (std::int64_t i = 0; out.size() < count; ++i) {
        if (i == 0) {
          out.push_back(0);
        } else {
          out.push_back(-i);
          if (out.size() < count) out.push_back(i);
        }
      }
      break;
    case CarrierKind::Finite:
      throw std::invalid_argument("rule element samples need a countable carrier");
  }
  return out;
}

}  // namespace conseq
