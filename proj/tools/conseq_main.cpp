// conseq: command-line workbench for abstract consequence relations.
//
// Subcommands: check (principle verdicts), qn (quasi-negation listings),
// entail (single entailment queries), companion (variable-inclusion
// companions of a matrix logic), mine (minimal separating structures),
// gallery-list (builtin inventory). Exit codes: 0 success, 1 input or
// schema errors, 2 exhausted budgets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conseq/companions.hpp"
#include "conseq/gallery.hpp"
#include "conseq/miner.hpp"
#include "conseq/principles.hpp"
#include "conseq/serialize.hpp"
#include "conseq/version.hpp"

namespace {

using namespace conseq;

struct CommonOpts {
  std::string logic;
  std::string format = "text";
  Budget budget;
};

void add_budget_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--pool-vars", o.budget.pool_vars, "Variables in the formula pool")
      ->capture_default_str();
  cmd->add_option("--pool-depth", o.budget.pool_depth, "Depth bound of the formula pool")
      ->capture_default_str();
  cmd->add_option("--max-size", o.budget.max_set_size, "Premise-set size bound")
      ->capture_default_str();
  cmd->add_option("--seed", o.budget.seed, "Seed for sampled searches")
      ->capture_default_str();
  cmd->add_option("--jobs", o.budget.jobs, "Worker threads for partitionable scans")
      ->capture_default_str();
  cmd->add_option("--carrier-cap", o.budget.carrier_cap,
                  "Largest carrier accepted for exact finite checks")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

// Splits a comma-separated principle list. k_para ids contain commas
// themselves ("k_para:0,1"), so numeric segments are folded back into a
// preceding k_para id.
std::vector<PrincipleId> parse_principle_list(const std::string& text) {
  std::vector<PrincipleId> out;
  const std::vector<std::string> segments = split(text, ',');
  for (std::size_t i = 0; i < segments.size(); ++i) {
    std::string id_text = segments[i];
    if (id_text.rfind("k_para", 0) == 0) {
      while (i + 1 < segments.size() && all_digits(segments[i + 1])) {
        id_text += "," + segments[++i];
      }
    }
    const auto id = parse_principle(id_text);
    if (!id) throw std::invalid_argument("unknown principle \"" + id_text + "\"");
    out.push_back(*id);
  }
  return out;
}

struct ResolvedLogic {
  LoadedLogic loaded;
  std::optional<std::string> document;  // spec file content, for embedding
};

ResolvedLogic load_logic(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) {
    return {resolve_logic_argument(arg), std::nullopt};
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read logic spec file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  LoadedLogic loaded = logic_from_json(text, arg);
  return {std::move(loaded), std::move(text)};
}

Report base_report(const std::string& command, const CommonOpts& o,
                   const ResolvedLogic* logic) {
  Report r;
  r.version = kVersion;
  r.inputs.command = command;
  r.inputs.logic_argument = logic ? o.logic : std::string{};
  if (logic && logic->document) r.inputs.logic_document = logic->document;
  r.inputs.budget = o.budget;
  return r;
}

int emit_report(Report& r, const CommonOpts& o) {
  seal_report(r);
  if (o.format == "json") {
    std::cout << report_to_json(r) << "\n";
  } else {
    std::cout << report_to_text(r);
  }
  for (const CheckRecord& c : r.checks) {
    if (c.verdict.budget_exceeded) return 2;
  }
  return 0;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// check

int cmd_check(const CommonOpts& o, const std::string& principles_text) {
  const ResolvedLogic logic = load_logic(o.logic);
  const std::vector<PrincipleId> ids = parse_principle_list(principles_text);
  Report r = base_report("check", o, &logic);
  for (const PrincipleId& id : ids) r.inputs.principles.push_back(id.to_string());
  for (const PrincipleId& id : ids) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = std::visit(
        [&](const auto& backend) { return check(backend, id, o.budget); },
        logic.loaded.logic);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    r.checks.push_back({id.to_string(), std::move(v), ms});
  }
  return emit_report(r, o);
}

// ---------------------------------------------------------------------------
// qn

int cmd_qn(const CommonOpts& o, const std::string& formula_text) {
  const ResolvedLogic logic = load_logic(o.logic);
  Report r = base_report("qn", o, &logic);
  r.inputs.extra.emplace_back("formula", formula_text);
  if (const auto* m = std::get_if<Matrix>(&logic.loaded.logic)) {
    const Formula alpha = parse(formula_text, m->signature());
    for (const Formula& f : quasi_negations(*m, alpha, o.budget)) {
      r.listing.push_back(print(f, m->signature()));
    }
    r.facts.emplace_back("pool", "formulas over " + std::to_string(o.budget.pool_vars) +
                                     " variables up to depth " +
                                     std::to_string(o.budget.pool_depth));
  } else if (const auto* s = std::get_if<FiniteStructure>(&logic.loaded.logic)) {
    std::int64_t alpha = -1;
    for (int i = 0; i < s->size(); ++i) {
      if (s->element_name(i) == formula_text) alpha = i;
    }
    if (alpha < 0 && all_digits(formula_text)) alpha = std::stoll(formula_text);
    if (alpha < 0 || alpha >= s->size()) {
      throw std::invalid_argument("\"" + formula_text +
                                  "\" names no element of the structure");
    }
    const SentenceSet qn = quasi_negations(*s, alpha);
    for (std::int64_t v : qn.values()) {
      r.listing.push_back(s->element_name(static_cast<int>(v)));
    }
  } else {
    throw std::invalid_argument(
        "quasi-negation listings need a finite or matrix-backed logic");
  }
  r.facts.emplace_back("count", std::to_string(r.listing.size()));
  return emit_report(r, o);
}

// ---------------------------------------------------------------------------
// entail

int cmd_entail(const CommonOpts& o, const std::string& premises_text,
               const std::string& conclusion_text) {
  const ResolvedLogic logic = load_logic(o.logic);
  Report r = base_report("entail", o, &logic);
  r.inputs.extra.emplace_back("premises", premises_text);
  r.inputs.extra.emplace_back("conclusion", conclusion_text);
  bool holds = false;
  if (const auto* m = std::get_if<Matrix>(&logic.loaded.logic)) {
    std::vector<Formula> premises;
    if (!premises_text.empty()) {
      for (const std::string& p : split(premises_text, ',')) {
        premises.push_back(parse(p, m->signature()));
      }
    }
    holds = m->entails(premises, parse(conclusion_text, m->signature()));
  } else if (const auto* s = std::get_if<FiniteStructure>(&logic.loaded.logic)) {
    const auto index_of = [&](const std::string& name) {
      for (int i = 0; i < s->size(); ++i) {
        if (s->element_name(i) == name) return i;
      }
      if (all_digits(name)) {
        const int i = std::stoi(name);
        if (i >= 0 && i < s->size()) return i;
      }
      throw std::invalid_argument("\"" + name + "\" names no element of the structure");
    };
    std::uint32_t gamma = 0;
    if (!premises_text.empty()) {
      for (const std::string& p : split(premises_text, ',')) gamma |= 1u << index_of(p);
    }
    holds = (s->consequence_mask(gamma) >> index_of(conclusion_text)) & 1u;
  } else {
    const auto& rule = std::get<RuleStructure>(logic.loaded.logic);
    std::vector<std::int64_t> gamma;
    if (!premises_text.empty()) {
      for (const std::string& p : split(premises_text, ',')) {
        if (!all_digits(p)) {
          throw std::invalid_argument("rule-structure premises are integers, got \"" + p +
                                      "\"");
        }
        gamma.push_back(std::stoll(p));
      }
    }
    if (!all_digits(conclusion_text)) {
      throw std::invalid_argument("rule-structure conclusions are integers");
    }
    holds = consequence(rule, SentenceSet::finite(rule.carrier, std::move(gamma)))
                .contains(std::stoll(conclusion_text));
  }
  r.facts.emplace_back("entails", bool_word(holds));
  return emit_report(r, o);
}

// ---------------------------------------------------------------------------
// companion

int cmd_companion(const CommonOpts& o, const std::string& mode_text,
                  const std::string& premises_text, const std::string& conclusion_text,
                  const std::string& principles_text) {
  const ResolvedLogic logic = load_logic(o.logic);
  const auto* m = std::get_if<Matrix>(&logic.loaded.logic);
  if (!m) {
    throw std::invalid_argument("companion construction needs a matrix-backed base logic");
  }
  CompanionMode mode;
  if (!parse_companion_mode(mode_text, mode)) {
    throw std::invalid_argument("unknown companion mode \"" + mode_text +
                                "\" (expected left, pure_left, right, pure_right)");
  }
  Report r = base_report("companion", o, &logic);
  r.inputs.extra.emplace_back("mode", mode_text);
  if (!principles_text.empty()) {
    r.inputs.extra.emplace_back("principles", principles_text);
    for (const PrincipleId& id : parse_principle_list(principles_text)) {
      r.inputs.principles.push_back(id.to_string());
      const auto start = std::chrono::steady_clock::now();
      Verdict v = check_companion(*m, mode, id, o.budget);
      const auto stop = std::chrono::steady_clock::now();
      r.checks.push_back(
          {id.to_string(), std::move(v),
           std::chrono::duration<double, std::milli>(stop - start).count()});
    }
  } else {
    r.inputs.extra.emplace_back("premises", premises_text);
    r.inputs.extra.emplace_back("conclusion", conclusion_text);
    std::vector<Formula> premises;
    if (!premises_text.empty()) {
      for (const std::string& p : split(premises_text, ',')) {
        premises.push_back(parse(p, m->signature()));
      }
    }
    const bool holds =
        entails_companion(*m, mode, premises, parse(conclusion_text, m->signature()));
    r.facts.emplace_back("entails", bool_word(holds));
  }
  return emit_report(r, o);
}

// ---------------------------------------------------------------------------
// mine

SeparationQuery query_from_require(const std::string& require_text) {
  SeparationQuery q;
  std::string buffer;
  for (const std::string& piece : split(require_text, ',')) {
    if (!buffer.empty()) buffer += ",";
    buffer += piece;
    if (buffer.find('=') == std::string::npos) continue;  // k_para commas
    const auto eq = buffer.find('=');
    const std::string id_text = buffer.substr(0, eq);
    const std::string status_text = buffer.substr(eq + 1);
    buffer.clear();
    const auto id = parse_principle(id_text);
    if (!id) throw std::invalid_argument("unknown principle \"" + id_text + "\"");
    Status status;
    if (status_text == "proven") {
      status = Status::Proven;
    } else if (status_text == "refuted") {
      status = Status::Refuted;
    } else {
      throw std::invalid_argument("requirement status must be proven or refuted, got \"" +
                                  status_text + "\"");
    }
    q.require.emplace_back(*id, status);
  }
  if (!buffer.empty()) {
    throw std::invalid_argument("dangling requirement \"" + buffer +
                                "\" (expected principle=proven|refuted)");
  }
  return q;
}

int cmd_mine(const CommonOpts& o, const std::string& require_text,
             const std::string& query_text, int max_carrier) {
  SeparationQuery q;
  Report r = base_report("mine", o, nullptr);
  if (!query_text.empty()) {
    std::string text = query_text;
    if (text.find('{') == std::string::npos) {
      std::ifstream in(text, std::ios::binary);
      if (!in) throw std::runtime_error("cannot read query file: " + text);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    q = separation_query_from_json(text);
    r.inputs.extra.emplace_back("query", text);
  } else if (!require_text.empty()) {
    q = query_from_require(require_text);
    q.max_carrier = max_carrier;
    r.inputs.extra.emplace_back("require", require_text);
    r.inputs.extra.emplace_back("max_carrier", std::to_string(max_carrier));
  } else {
    throw std::invalid_argument("mine needs --require or --query");
  }
  const SeparationResult result = find_separation(q, o.budget.seed);
  r.facts.emplace_back("found", bool_word(result.structure.has_value()));
  r.facts.emplace_back("carrier_size", std::to_string(result.carrier_size));
  r.facts.emplace_back("exhaustive", bool_word(result.exhaustive));
  r.facts.emplace_back("detail", result.detail);
  if (result.structure) {
    r.structure_json = logic_to_json(Logic{*result.structure});
  }
  return emit_report(r, o);
}

// ---------------------------------------------------------------------------
// gallery-list

int cmd_gallery_list(const CommonOpts& o) {
  Report r = base_report("gallery-list", o, nullptr);
  for (const BuiltinInfo& b : list_builtins()) {
    std::string line = b.name;
    if (!b.params.empty()) line += ":" + b.params;
    line += " [" + b.kind + "] " + b.description;
    r.listing.push_back(std::move(line));
  }
  r.facts.emplace_back("count", std::to_string(r.listing.size()));
  return emit_report(r, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conseq: a workbench for consequence relations, explosion principles, "
               "and paraconsistency"};
  app.require_subcommand(1);

  CommonOpts check_opts;
  std::string check_principles;
  CLI::App* check_cmd = app.add_subcommand("check", "Decide principles on a logic");
  check_cmd->add_option("--logic", check_opts.logic, "builtin:NAME[:param] or spec file path")
      ->required();
  check_cmd->add_option("--principle", check_principles,
                        "Comma-separated principle ids (e.g. ecq:neg,gecq,fin_triv:3)")
      ->required();
  add_budget_flags(check_cmd, check_opts);

  CommonOpts qn_opts;
  std::string qn_formula;
  CLI::App* qn_cmd = app.add_subcommand("qn", "List quasi-negations of a formula");
  qn_cmd->add_option("--logic", qn_opts.logic, "builtin:NAME[:param] or spec file path")
      ->required();
  qn_cmd->add_option("--formula", qn_formula, "Formula (matrix) or element name (finite)")
      ->required();
  add_budget_flags(qn_cmd, qn_opts);

  CommonOpts entail_opts;
  std::string entail_premises;
  std::string entail_conclusion;
  CLI::App* entail_cmd = app.add_subcommand("entail", "Decide a single entailment");
  entail_cmd->add_option("--logic", entail_opts.logic, "builtin:NAME[:param] or spec file path")
      ->required();
  entail_cmd->add_option("--premises", entail_premises,
                         "Comma-separated premises (may be empty)");
  entail_cmd->add_option("--conclusion", entail_conclusion, "Conclusion")->required();
  add_budget_flags(entail_cmd, entail_opts);

  CommonOpts comp_opts;
  std::string comp_mode;
  std::string comp_premises;
  std::string comp_conclusion;
  std::string comp_principles;
  CLI::App* comp_cmd =
      app.add_subcommand("companion", "Variable-inclusion companion of a matrix logic");
  comp_cmd->add_option("--base", comp_opts.logic, "Base logic (matrix-backed)")->required();
  comp_cmd->add_option("--mode", comp_mode, "left, pure_left, right, or pure_right")
      ->required();
  comp_cmd->add_option("--premises", comp_premises, "Comma-separated premises");
  comp_cmd->add_option("--conclusion", comp_conclusion, "Conclusion formula");
  comp_cmd->add_option("--principle", comp_principles,
                       "Check principles on the companion instead of an entailment");
  add_budget_flags(comp_cmd, comp_opts);

  CommonOpts mine_opts;
  std::string mine_require;
  std::string mine_query;
  int mine_max_carrier = 4;
  CLI::App* mine_cmd =
      app.add_subcommand("mine", "Search for minimal structures separating principles");
  mine_cmd->add_option("--require", mine_require,
                       "Comma-separated requirements (e.g. secq=proven,gecq=refuted)");
  mine_cmd->add_option("--query", mine_query, "Separation query as JSON text or file path");
  mine_cmd->add_option("--max-carrier", mine_max_carrier,
                       "Largest carrier size to scan (1-4 exhaustive, 5-6 sampled)")
      ->capture_default_str();
  add_budget_flags(mine_cmd, mine_opts);

  CommonOpts list_opts;
  CLI::App* list_cmd = app.add_subcommand("gallery-list", "List builtin logics");
  add_budget_flags(list_cmd, list_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check_opts, check_principles);
    if (qn_cmd->parsed()) return cmd_qn(qn_opts, qn_formula);
    if (entail_cmd->parsed()) return cmd_entail(entail_opts, entail_premises, entail_conclusion);
    if (comp_cmd->parsed()) {
      if (comp_principles.empty() && comp_conclusion.empty()) {
        throw std::invalid_argument("companion needs --conclusion or --principle");
      }
      return cmd_companion(comp_opts, comp_mode, comp_premises, comp_conclusion,
                           comp_principles);
    }
    if (mine_cmd->parsed()) return cmd_mine(mine_opts, mine_require, mine_query,
                                            mine_max_carrier);
    if (list_cmd->parsed()) return cmd_gallery_list(list_opts);
  } catch (const std::length_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
