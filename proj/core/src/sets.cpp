#include "conseq/sets.hpp"

#include <algorithm>
#include <sstream>

namespace conseq {

Carrier Carrier::finite(int n) {
  if (n < 1) throw std::invalid_argument("finite carrier needs at least one element");
  return {CarrierKind::Finite, n};
}

bool Carrier::contains(std::int64_t v) const {
  switch (kind) {
    case CarrierKind::Finite: return v >= 0 && v < size;
    case CarrierKind::NaturalsFromOne: return v >= 1;
    case CarrierKind::Naturals: return v >= 0;
    case CarrierKind::Integers: return true;
  }
  return false;
}

std::string Carrier::to_string() const {
  switch (kind) {
    case CarrierKind::Finite: return "finite:" + std::to_string(size);
    case CarrierKind::NaturalsFromOne: return "naturals-from-1";
    case CarrierKind::Naturals: return "naturals";
    case CarrierKind::Integers: return "integers";
  }
  return "?";
}

namespace {

std::vector<std::int64_t> normalized(const Carrier& carrier, std::vector<std::int64_t> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (std::int64_t v : vs) {
    if (!carrier.contains(v)) {
      throw std::domain_error("sentence " + std::to_string(v) + " is outside carrier " +
                              carrier.to_string());
    }
  }
  return vs;
}

// Sorted-vector set primitives.
std::vector<std::int64_t> vec_union(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
std::vector<std::int64_t> vec_intersection(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
std::vector<std::int64_t> vec_difference(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
bool vec_subset(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SentenceSet::SentenceSet(Kind kind, Carrier carrier, std::vector<std::int64_t> values)
    : kind_(kind), carrier_(carrier), values_(std::move(values)) {}

SentenceSet SentenceSet::finite(Carrier carrier, std::vector<std::int64_t> members) {
  return SentenceSet(Kind::Finite, carrier, normalized(carrier, std::move(members)));
}

SentenceSet SentenceSet::cofinite(Carrier carrier, std::vector<std::int64_t> excluded) {
  auto vs = normalized(carrier, std::move(excluded));
  if (carrier.is_finite()) {
    // Normalize to the unambiguous finite representation.
    std::vector<std::int64_t> members;
    for (std::int64_t v = 0; v < carrier.size; ++v) {
      if (!std::binary_search(vs.begin(), vs.end(), v)) members.push_back(v);
    }
    return SentenceSet(Kind::Finite, carrier, std::move(members));
  }
  return SentenceSet(Kind::Cofinite, carrier, std::move(vs));
}

SentenceSet SentenceSet::full(Carrier carrier) { return cofinite(carrier, {}); }

bool SentenceSet::contains(std::int64_t v) const {
  if (!carrier_.contains(v)) return false;
  bool listed = std::binary_search(values_.begin(), values_.end(), v);
  return kind_ == Kind::Finite ? listed : !listed;
}

bool SentenceSet::is_empty() const {
  // A cofinite set over a countable carrier is never empty.
  return kind_ == Kind::Finite && values_.empty();
}

bool SentenceSet::is_full() const {
  if (kind_ == Kind::Cofinite) return values_.empty();
  return carrier_.is_finite() && values_.size() == static_cast<std::size_t>(carrier_.size);
}

std::optional<std::size_t> SentenceSet::member_count() const {
  if (kind_ == Kind::Finite) return values_.size();
  return std::nullopt;
}

SentenceSet SentenceSet::complement() const {
  if (carrier_.is_finite()) {
    std::vector<std::int64_t> members;
    for (std::int64_t v = 0; v < carrier_.size; ++v) {
      if (!contains(v)) members.push_back(v);
    }
    return SentenceSet(Kind::Finite, carrier_, std::move(members));
  }
  return SentenceSet(kind_ == Kind::Finite ? Kind::Cofinite : Kind::Finite, carrier_, values_);
}

SentenceSet SentenceSet::with(std::int64_t v) const {
  if (!carrier_.contains(v)) {
    throw std::domain_error("sentence " + std::to_string(v) + " is outside carrier " +
                            carrier_.to_string());
  }
  if (contains(v)) return *this;
  if (kind_ == Kind::Finite) {
    auto vs = values_;
    vs.insert(std::upper_bound(vs.begin(), vs.end(), v), v);
    return SentenceSet(Kind::Finite, carrier_, std::move(vs));
  }
  auto vs = values_;
  vs.erase(std::find(vs.begin(), vs.end(), v));
  return SentenceSet(Kind::Cofinite, carrier_, std::move(vs));
}

SentenceSet SentenceSet::without(std::int64_t v) const {
  if (!contains(v)) return *this;
  auto vs = values_;
  if (kind_ == Kind::Finite) {
    vs.erase(std::find(vs.begin(), vs.end(), v));
  } else {
    vs.insert(std::upper_bound(vs.begin(), vs.end(), v), v);
  }
  return SentenceSet(kind_, carrier_, std::move(vs));
}

std::string SentenceSet::to_string() const {
  std::ostringstream os;
  if (kind_ == Kind::Cofinite) os << "all-but";
  os << '{';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  os << '}';
  return os.str();
}

void SentenceSet::require_same_carrier(const SentenceSet& a, const SentenceSet& b) {
  if (!(a.carrier_ == b.carrier_)) {
    throw std::domain_error("set operation across different carriers (" +
                            a.carrier_.to_string() + " vs " + b.carrier_.to_string() + ")");
  }
}

SentenceSet set_union(const SentenceSet& a, const SentenceSet& b) {
  SentenceSet::require_same_carrier(a, b);
  using K = SentenceSet::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) {
    return SentenceSet(K::Finite, a.carrier_, vec_union(a.values_, b.values_));
  }
  if (a.kind_ == K::Cofinite && b.kind_ == K::Cofinite) {
    return SentenceSet(K::Cofinite, a.carrier_, vec_intersection(a.values_, b.values_));
  }
  const SentenceSet& fin = a.kind_ == K::Finite ? a : b;
  const SentenceSet& cof = a.kind_ == K::Finite ? b : a;
  // (L \ E) ∪ F = L \ (E \ F)
  return SentenceSet(K::Cofinite, a.carrier_, vec_difference(cof.values_, fin.values_));
}

SentenceSet set_intersection(const SentenceSet& a, const SentenceSet& b) {
  SentenceSet::require_same_carrier(a, b);
  using K = SentenceSet::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) {
    return SentenceSet(K::Finite, a.carrier_, vec_intersection(a.values_, b.values_));
  }
  if (a.kind_ == K::Cofinite && b.kind_ == K::Cofinite) {
    return SentenceSet(K::Cofinite, a.carrier_, vec_union(a.values_, b.values_));
  }
  const SentenceSet& fin = a.kind_ == K::Finite ? a : b;
  const SentenceSet& cof = a.kind_ == K::Finite ? b : a;
  // (L \ E) ∩ F = F \ E
  return SentenceSet(K::Finite, a.carrier_, vec_difference(fin.values_, cof.values_));
}

SentenceSet set_difference(const SentenceSet& a, const SentenceSet& b) {
  return set_intersection(a, b.complement());
}

bool is_subset(const SentenceSet& a, const SentenceSet& b) {
  SentenceSet::require_same_carrier(a, b);
  using K = SentenceSet::Kind;
  if (a.kind_ == K::Finite) {
    for (std::int64_t v : a.values_) {
      if (!b.contains(v)) return false;
    }
    return true;
  }
  // A cofinite set is only contained in another cofinite set.
  if (b.kind_ == K::Finite) return false;
  return vec_subset(b.values_, a.values_);
}

bool operator==(const SentenceSet& a, const SentenceSet& b) {
  SentenceSet::require_same_carrier(a, b);
  return a.kind_ == b.kind_ && a.values_ == b.values_;
}

}  // namespace conseq
