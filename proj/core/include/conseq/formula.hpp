// Propositional formula algebra: signatures, immutable formula trees,
// a parser/printer pair, substitution, and deterministic bounded pools.
//
// Grammar: constants and variables are atoms; prefix connectives bind
// tighter than infix ones; all infix connectives share one precedence
// level and associate to the right; parentheses override. The printer
// emits canonical connective names with minimal parentheses, and its
// output reparses to an equal tree.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace conseq {

enum class Fixity { Prefix, Infix, Constant };

struct Connective {
  std::string name;  // canonical spelling, e.g. "¬"
  int arity = 0;
  Fixity fixity = Fixity::Prefix;
  std::vector<std::string> aliases;  // accepted by the parser, e.g. "~"
};

class Signature {
 public:
  explicit Signature(std::vector<Connective> connectives);

  const std::vector<Connective>& connectives() const { return connectives_; }
  // Lookup by canonical name or alias; nullptr when unknown.
  const Connective* find(const std::string& name_or_alias) const;
  bool has(const std::string& name_or_alias) const { return find(name_or_alias) != nullptr; }

 private:
  std::vector<Connective> connectives_;
  std::map<std::string, std::size_t> by_name_;
};

// Immutable shared formula tree. A node is a variable leaf or a connective
// application (constants are zero-ary applications). Equality is
// structural; hashes are cached per node.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula app(std::string connective, std::vector<Formula> children);

  bool is_var() const;
  // Variable name for leaves, connective name for applications.
  const std::string& head() const;
  const std::vector<Formula>& children() const;
  int depth() const;  // atoms and constants have depth 0
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " (at byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

Formula parse(const std::string& text, const Signature& sig);
std::string print(const Formula& f, const Signature& sig);

std::set<std::string> vars(const Formula& f);
std::set<std::string> vars(const std::vector<Formula>& fs);

using Substitution = std::map<std::string, Formula>;
Formula substitute(const Substitution& sigma, const Formula& f);

// Least "v<N>" not occurring in used.
std::string fresh_variable(const std::set<std::string>& used);

// Number of formulas over the given variables with depth <= max_depth.
// Satisfies N(0) = |vars| + #constants and
// N(d) = N(0) + Σ_{non-constant c} N(d-1)^arity(c).
unsigned long long pool_size(const Signature& sig, std::size_t num_vars, int max_depth);

// Deterministic bounded formula pool: depth layer by depth layer; within a
// layer, variables precede constants at depth 0, and applications are
// ordered by (connective order in the signature, then child indices into
// the previous layers, lexicographically).
class PoolEnumerator {
 public:
  PoolEnumerator(Signature sig, std::vector<std::string> variables, int max_depth);

  unsigned long long total() const;
  // Throws std::length_error (mentioning the computed size) when the pool
  // exceeds cap.
  std::vector<Formula> materialize(std::size_t cap) const;
  // Visits the pool in enumeration order until exhausted or the visitor
  // returns false; only materializes layers up to max_depth-1 internally.
  void stream(const std::function<bool(const Formula&)>& visit) const;
  std::vector<Formula> prefix(std::size_t k) const;

  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& variables() const { return vars_; }
  int max_depth() const { return max_depth_; }

 private:
  Signature sig_;
  std::vector<std::string> vars_;
  int max_depth_;
};

}  // namespace conseq
