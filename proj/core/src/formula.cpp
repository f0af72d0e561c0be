#include "conseq/formula.hpp"

#include <algorithm>

namespace conseq {

// ---------------------------------------------------------------- Signature

Signature::Signature(std::vector<Connective> connectives)
    : connectives_(std::move(connectives)) {
  for (std::size_t i = 0; i < connectives_.size(); ++i) {
    const Connective& c = connectives_[i];
    if (c.arity < 0) throw std::invalid_argument("negative arity");
    if ((c.fixity == Fixity::Constant) != (c.arity == 0)) {
      throw std::invalid_argument("constants are exactly the zero-ary connectives");
    }
    if (c.fixity == Fixity::Infix && c.arity != 2) {
      throw std::invalid_argument("infix connectives must be binary");
    }
    auto insert_name = [&](const std::string& name) {
      if (name.empty()) throw std::invalid_argument("empty connective name");
      if (!by_name_.emplace(name, i).second) {
        throw std::invalid_argument("duplicate connective name '" + name + "'");
      }
    };
    insert_name(c.name);
    for (const std::string& a : c.aliases) insert_name(a);
  }
}

const Connective* Signature::find(const std::string& name_or_alias) const {
  auto it = by_name_.find(name_or_alias);
  return it == by_name_.end() ? nullptr : &connectives_[it->second];
}

// ------------------------------------------------------------------ Formula

struct Formula::Node {
  std::string head;
  std::vector<Formula> children;
  bool is_var;
  int depth;
  std::size_t hash;
};

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto node = std::make_shared<Node>();
  node->head = std::move(name);
  node->is_var = true;
  node->depth = 0;
  node->hash = hash_combine(0x5bd1e995, std::hash<std::string>{}(node->head));
  return Formula(std::move(node));
}

Formula Formula::app(std::string connective, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->head = std::move(connective);
  node->children = std::move(children);
  node->is_var = false;
  int depth = 0;
  std::size_t h = hash_combine(0x87c37b91, std::hash<std::string>{}(node->head));
  for (const Formula& c : node->children) {
    depth = std::max(depth, c.depth() + 1);
    h = hash_combine(h, c.hash());
  }
  node->depth = depth;
  node->hash = h;
  return Formula(std::move(node));
}

bool Formula::is_var() const { return node_->is_var; }
const std::string& Formula::head() const { return node_->head; }
const std::vector<Formula>& Formula::children() const { return node_->children; }
int Formula::depth() const { return node_->depth; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  if (a.node_->is_var != b.node_->is_var || a.node_->head != b.node_->head) return false;
  if (a.node_->children.size() != b.node_->children.size()) return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  }
  return true;
}

// ------------------------------------------------------------------- Parser

namespace {

struct Token {
  enum Kind { Atom, Conn, LParen, RParen, End } kind;
  std::string text;    // identifier or connective canonical name
  std::size_t offset;  // byte offset in the input
};

class Lexer {
 public:
  Lexer(const std::string& text, const Signature& sig) : text_(text) {
    // Collect connective spellings for longest-match symbol scanning.
    for (const Connective& c : sig.connectives()) {
      spellings_.emplace_back(c.name, c.name);
      for (const std::string& a : c.aliases) spellings_.emplace_back(a, c.name);
    }
    std::sort(spellings_.begin(), spellings_.end(),
              [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  }

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) return {Token::End, "", at};
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      return {Token::LParen, "(", at};
    }
    if (ch == ')') {
      ++pos_;
      return {Token::RParen, ")", at};
    }
    for (const auto& [spelling, canonical] : spellings_) {
      if (text_.compare(pos_, spelling.size(), spelling) == 0) {
        pos_ += spelling.size();
        return {Token::Conn, canonical, at};
      }
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      Token t{Token::Atom, text_.substr(pos_, end - pos_), at};
      pos_ = end;
      return t;
    }
    throw ParseError("unknown symbol", at);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, std::string>> spellings_;
};

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig) : sig_(sig), lexer_(text, sig) {
    advance();
  }

  Formula parse_all() {
    Formula f = parse_infix();
    if (tok_.kind != Token::End) throw ParseError("unexpected trailing input", tok_.offset);
    return f;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  Formula parse_infix() {
    Formula left = parse_unary();
    if (tok_.kind == Token::Conn) {
      const Connective* c = sig_.find(tok_.text);
      if (c->fixity == Fixity::Infix) {
        advance();
        Formula right = parse_infix();  // right-associative
        return Formula::app(c->name, {std::move(left), std::move(right)});
      }
      throw ParseError("expected an infix connective or end of expression", tok_.offset);
    }
    return left;
  }

  Formula parse_unary() {
    if (tok_.kind == Token::Conn) {
      const Connective* c = sig_.find(tok_.text);
      if (c->fixity == Fixity::Prefix) {
        const std::size_t at = tok_.offset;
        advance();
        if (c->arity != 1) {
          throw ParseError("prefix connective '" + c->name + "' must be unary", at);
        }
        return Formula::app(c->name, {parse_unary()});
      }
      if (c->fixity == Fixity::Constant) {
        Formula f = Formula::app(c->name, {});
        advance();
        return f;
      }
      throw ParseError("infix connective '" + c->name + "' needs a left operand", tok_.offset);
    }
    if (tok_.kind == Token::LParen) {
      advance();
      Formula f = parse_infix();
      if (tok_.kind != Token::RParen) throw ParseError("expected ')'", tok_.offset);
      advance();
      return f;
    }
    if (tok_.kind == Token::Atom) {
      Formula f = Formula::var(tok_.text);
      advance();
      return f;
    }
    if (tok_.kind == Token::RParen) throw ParseError("unbalanced ')'", tok_.offset);
    throw ParseError("expected a formula", tok_.offset);
  }

  const Signature& sig_;
  Lexer lexer_;
  Token tok_;
};

}  // namespace

Formula parse(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse_all();
}

// ------------------------------------------------------------------ Printer

namespace {

void print_rec(const Formula& f, const Signature& sig, std::string& out) {
  if (f.is_var()) {
    out += f.head();
    return;
  }
  const Connective* c = sig.find(f.head());
  if (c == nullptr) throw std::invalid_argument("connective '" + f.head() + "' not in signature");
  switch (c->fixity) {
    case Fixity::Constant:
      out += c->name;
      return;
    case Fixity::Prefix: {
      out += c->name;
      const Formula& child = f.children()[0];
      const Connective* cc = child.is_var() ? nullptr : sig.find(child.head());
      const bool parens = cc != nullptr && cc->fixity == Fixity::Infix;
      if (parens) out += '(';
      print_rec(child, sig, out);
      if (parens) out += ')';
      return;
    }
    case Fixity::Infix: {
      const Formula& lhs = f.children()[0];
      const Connective* lc = lhs.is_var() ? nullptr : sig.find(lhs.head());
      // Right-associative grammar: an infix left child always needs parens.
      const bool lparens = lc != nullptr && lc->fixity == Fixity::Infix;
      if (lparens) out += '(';
      print_rec(lhs, sig, out);
      if (lparens) out += ')';
      out += ' ';
      out += c->name;
      out += ' ';
      print_rec(f.children()[1], sig, out);
      return;
    }
  }
}

}  // namespace

std::string print(const Formula& f, const Signature& sig) {
  std::string out;
  print_rec(f, sig, out);
  return out;
}

// ------------------------------------------------- vars and substitution

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.is_var()) {
    out.insert(f.head());
    return;
  }
  for (const Formula& c : f.children()) collect_vars(c, out);
}

}  // namespace

std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

std::set<std::string> vars(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const Formula& f : fs) collect_vars(f, out);
  return out;
}

Formula substitute(const Substitution& sigma, const Formula& f) {
  if (f.is_var()) {
    auto it = sigma.find(f.head());
    return it == sigma.end() ? f : it->second;
  }
  std::vector<Formula> children;
  children.reserve(f.children().size());
  for (const Formula& c : f.children()) children.push_back(substitute(sigma, c));
  return Formula::app(f.head(), std::move(children));
}

std::string fresh_variable(const std::set<std::string>& used) {
  for (unsigned long long i = 0;; ++i) {
    std::string candidate = "v" + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

// --------------------------------------------------------------- Pools

unsigned long long pool_size(const Signature& sig, std::size_t num_vars, int max_depth) {
  if (max_depth < 0) return 0;
  unsigned long long atoms = num_vars;
  for (const Connective& c : sig.connectives()) {
    if (c.arity == 0) ++atoms;
  }
  unsigned long long prev = atoms;
  for (int d = 1; d <= max_depth; ++d) {
    unsigned long long total = atoms;
    for (const Connective& c : sig.connectives()) {
      if (c.arity == 0) continue;
      unsigned long long apps = 1;
      for (int i = 0; i < c.arity; ++i) apps *= prev;
      total += apps;
    }
    prev = total;
  }
  return prev;
}

PoolEnumerator::PoolEnumerator(Signature sig, std::vector<std::string> variables, int max_depth)
    : sig_(std::move(sig)), vars_(std::move(variables)), max_depth_(max_depth) {
  if (max_depth < 0 || max_depth > 4) {
    throw std::invalid_argument("pool depth must be in [0,4]");
  }
}

unsigned long long PoolEnumerator::total() const {
  return pool_size(sig_, vars_.size(), max_depth_);
}

void PoolEnumerator::stream(const std::function<bool(const Formula&)>& visit) const {
  // Depth-0 layer: variables, then constants.
  std::vector<Formula> pool;  // all formulas of depth < current layer
  for (const std::string& v : vars_) {
    Formula f = Formula::var(v);
    if (!visit(f)) return;
    pool.push_back(std::move(f));
  }
  for (const Connective& c : sig_.connectives()) {
    if (c.arity == 0) {
      Formula f = Formula::app(c.name, {});
      if (!visit(f)) return;
      pool.push_back(std::move(f));
    }
  }
  std::size_t layer_begin = 0;  // start of the previous layer within pool
  for (int d = 1; d <= max_depth_; ++d) {
    const std::size_t layer_end = pool.size();
    std::vector<Formula> next_layer;
    const bool keep = d < max_depth_;  // the last layer need not be stored
    for (const Connective& c : sig_.connectives()) {
      if (c.arity == 0) continue;
      // Child tuples over pool[0..layer_end), at least one child from the
      // previous layer [layer_begin..layer_end), in lexicographic order.
      std::vector<std::size_t> idx(c.arity, 0);
      for (;;) {
        bool fresh = false;
        for (std::size_t i : idx) {
          if (i >= layer_begin) {
            fresh = true;
            break;
          }
        }
        if (fresh) {
          std::vector<Formula> children;
          children.reserve(c.arity);
          for (std::size_t i : idx) children.push_back(pool[i]);
          Formula f = Formula::app(c.name, std::move(children));
          if (!visit(f)) return;
          if (keep) next_layer.push_back(std::move(f));
        }
        // Advance the tuple odometer.
        int pos = c.arity - 1;
        while (pos >= 0) {
          if (++idx[pos] < layer_end) break;
          idx[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
    if (!keep) break;
    layer_begin = layer_end;
    pool.insert(pool.end(), std::make_move_iterator(next_layer.begin()),
                std::make_move_iterator(next_layer.end()));
  }
}

std::vector<Formula> PoolEnumerator::materialize(std::size_t cap) const {
  const unsigned long long n = total();
  if (n > cap) {
    throw std::length_error("pool of " + std::to_string(n) + " formulas exceeds cap " +
                            std::to_string(cap));
  }
  std::vector<Formula> out;
  out.reserve(static_cast<std::size_t>(n));
  stream([&](const Formula& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<Formula> PoolEnumerator::prefix(std::size_t k) const {
  std::vector<Formula> out;
  out.reserve(k);
  stream([&](const Formula& f) {
    if (out.size() >= k) return false;
    out.push_back(f);
    return out.size() < k;
  });
  return out;
}

}  // namespace conseq
