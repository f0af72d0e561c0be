#include "conseq/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace conseq {

Matrix::Matrix(Signature sig, int num_values, std::vector<int> designated,
               std::map<std::string, std::vector<std::uint8_t>> tables,
               std::vector<std::string> value_names)
    : sig_(std::move(sig)),
      num_values_(num_values),
      tables_(std::move(tables)),
      value_names_(std::move(value_names)) {
  if (num_values_ < 2 || num_values_ > 32) {
    throw std::invalid_argument("matrix needs between 2 and 32 truth values");
  }
  for (int v : designated) {
    if (v < 0 || v >= num_values_) throw std::invalid_argument("designated value out of range");
    designated_mask_ |= 1u << v;
  }
  if (designated_mask_ == 0) throw std::invalid_argument("designated set must be nonempty");
  if (designated_mask_ == (1u << num_values_) - 1u) {
    throw std::invalid_argument("designated set must be a proper subset of the values");
  }
  for (const Connective& c : sig_.connectives()) {
    auto it = tables_.find(c.name);
    if (it == tables_.end()) {
      throw std::invalid_argument("missing truth table for connective '" + c.name + "'");
    }
    std::size_t want = 1;
    for (int i = 0; i < c.arity; ++i) want *= num_values_;
    if (it->second.size() != want) {
      throw std::invalid_argument("truth table for '" + c.name + "' has wrong size");
    }
    for (std::uint8_t v : it->second) {
      if (v >= num_values_) {
        throw std::invalid_argument("truth table for '" + c.name + "' maps outside the values");
      }
    }
  }
  if (value_names_.empty()) {
    for (int i = 0; i < num_values_; ++i) value_names_.push_back(std::to_string(i));
  } else if (value_names_.size() != static_cast<std::size_t>(num_values_)) {
    throw std::invalid_argument("value_names must name every truth value");
  }
}

const std::vector<std::uint8_t>& Matrix::table_for(const std::string& conn) const {
  auto it = tables_.find(conn);
  if (it == tables_.end()) {
    throw std::invalid_argument("connective '" + conn + "' has no truth table in this matrix");
  }
  return it->second;
}

int Matrix::eval_node(const Formula& f, const std::vector<int>& assignment,
                      const std::map<std::string, int>& var_index) const {
  if (f.is_var()) {
    auto it = var_index.find(f.head());
    if (it == var_index.end()) {
      throw std::invalid_argument("variable '" + f.head() + "' missing from valuation");
    }
    return assignment[it->second];
  }
  const std::vector<std::uint8_t>& table = table_for(f.head());
  std::size_t index = 0;
  for (const Formula& c : f.children()) {
    index = index * num_values_ + eval_node(c, assignment, var_index);
  }
  return table[index];
}

int Matrix::evaluate(const Formula& f, const std::map<std::string, int>& valuation) const {
  std::map<std::string, int> var_index;
  std::vector<int> assignment;
  for (const auto& [name, value] : valuation) {
    if (value < 0 || value >= num_values_) {
      throw std::invalid_argument("valuation assigns an out-of-range value");
    }
    var_index.emplace(name, static_cast<int>(assignment.size()));
    assignment.push_back(value);
  }
  return eval_node(f, assignment, var_index);
}

std::vector<std::uint8_t> Matrix::value_vector(const Formula& f,
                                               const std::vector<std::string>& var_order) const {
  std::map<std::string, int> var_index;
  for (const std::string& v : var_order) {
    var_index.emplace(v, static_cast<int>(var_index.size()));
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < var_order.size(); ++i) count *= num_values_;
  std::vector<std::uint8_t> out(count);
  std::vector<int> assignment(var_order.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < var_order.size(); ++i) {
      assignment[i] = static_cast<int>(rest % num_values_);
      rest /= num_values_;
    }
    out[idx] = static_cast<std::uint8_t>(eval_node(f, assignment, var_index));
  }
  return out;
}

namespace {

std::vector<std::string> sorted_vars(const std::vector<Formula>& premises,
                                     const Formula* conclusion) {
  std::set<std::string> vs = vars(premises);
  if (conclusion != nullptr) {
    for (const std::string& v : vars(*conclusion)) vs.insert(v);
  }
  return {vs.begin(), vs.end()};
}

}  // namespace

bool Matrix::entails(const std::vector<Formula>& premises, const Formula& conclusion) const {
  const std::vector<std::string> order = sorted_vars(premises, &conclusion);
  if (static_cast<int>(order.size()) > var_cap_) {
    throw std::length_error("entailment over " + std::to_string(order.size()) +
                            " variables exceeds the valuation cap of " + std::to_string(var_cap_));
  }
  std::map<std::string, int> var_index;
  for (const std::string& v : order) var_index.emplace(v, static_cast<int>(var_index.size()));
  std::size_t count = 1;
  for (std::size_t i = 0; i < order.size(); ++i) count *= num_values_;
  std::vector<int> assignment(order.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < order.size(); ++i) {
      assignment[i] = static_cast<int>(rest % num_values_);
      rest /= num_values_;
    }
    bool premises_designated = true;
    for (const Formula& p : premises) {
      if (!is_designated(eval_node(p, assignment, var_index))) {
        premises_designated = false;
        break;
      }
    }
    if (premises_designated && !is_designated(eval_node(conclusion, assignment, var_index))) {
      return false;
    }
  }
  return true;
}

bool Matrix::trivializes(const std::vector<Formula>& gamma) const {
  const std::vector<std::string> order = sorted_vars(gamma, nullptr);
  if (static_cast<int>(order.size()) > var_cap_) {
    throw std::length_error("triviality check over " + std::to_string(order.size()) +
                            " variables exceeds the valuation cap of " + std::to_string(var_cap_));
  }
  std::map<std::string, int> var_index;
  for (const std::string& v : order) var_index.emplace(v, static_cast<int>(var_index.size()));
  std::size_t count = 1;
  for (std::size_t i = 0; i < order.size(); ++i) count *= num_values_;
  std::vector<int> assignment(order.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < order.size(); ++i) {
      assignment[i] = static_cast<int>(rest % num_values_);
      rest /= num_values_;
    }
    bool all_designated = true;
    for (const Formula& g : gamma) {
      if (!is_designated(eval_node(g, assignment, var_index))) {
        all_designated = false;
        break;
      }
    }
    if (all_designated) return false;
  }
  return true;
}

bool Matrix::is_antitheorem(const std::vector<Formula>& sigma) const { return trivializes(sigma); }

}  // namespace conseq
