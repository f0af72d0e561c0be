#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "conseq/serialize.hpp"

namespace conseq {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

ordered_json parse_document(const std::string& text, const std::string& label) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(label + ": malformed JSON");
  if (!j.is_object()) fail(label + ": top level must be an object");
  return j;
}

const ordered_json& need(const ordered_json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string need_string(const ordered_json& j, const char* key, const std::string& where) {
  const ordered_json& v = need(j, key, where);
  if (!v.is_string()) fail(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

int need_int(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + " must be an integer");
  return v.get<int>();
}

// ---------------------------------------------------------------------------
// Matrix documents.

std::string fixity_name(Fixity f) {
  switch (f) {
    case Fixity::Prefix: return "prefix";
    case Fixity::Infix: return "infix";
    case Fixity::Constant: return "constant";
  }
  return "prefix";
}

Fixity fixity_from(const std::string& s, const std::string& where) {
  if (s == "prefix") return Fixity::Prefix;
  if (s == "infix") return Fixity::Infix;
  if (s == "constant") return Fixity::Constant;
  fail(where + ": unknown fixity \"" + s + "\"");
}

ordered_json matrix_doc(const Matrix& m) {
  ordered_json sig = ordered_json::array();
  for (const Connective& c : m.signature().connectives()) {
    ordered_json e;
    e["name"] = c.name;
    e["arity"] = c.arity;
    e["fixity"] = fixity_name(c.fixity);
    e["aliases"] = c.aliases;
    sig.push_back(std::move(e));
  }
  ordered_json designated = ordered_json::array();
  for (int v = 0; v < m.num_values(); ++v) {
    if (m.is_designated(v)) designated.push_back(v);
  }
  ordered_json tables = ordered_json::object();
  for (const auto& [name, table] : m.tables()) {
    tables[name] = table;
  }
  ordered_json doc;
  doc["values"] = m.num_values();
  doc["value_names"] = m.value_names();
  doc["designated"] = std::move(designated);
  doc["signature"] = std::move(sig);
  doc["tables"] = std::move(tables);
  return doc;
}

Matrix matrix_from_doc(const ordered_json& doc, const std::string& where) {
  const int values = need_int(need(doc, "values", where), where + ".values");
  std::vector<std::string> value_names;
  if (auto it = doc.find("value_names"); it != doc.end()) {
    if (!it->is_array()) fail(where + ".value_names must be an array");
    for (const auto& v : *it) value_names.push_back(v.get<std::string>());
  }
  std::vector<int> designated;
  const ordered_json& des = need(doc, "designated", where);
  if (!des.is_array()) fail(where + ".designated must be an array");
  for (const auto& v : des) designated.push_back(need_int(v, where + ".designated entry"));
  const ordered_json& sig_doc = need(doc, "signature", where);
  if (!sig_doc.is_array()) fail(where + ".signature must be an array");
  std::vector<Connective> connectives;
  for (const auto& e : sig_doc) {
    Connective c;
    c.name = need_string(e, "name", where + ".signature entry");
    c.arity = need_int(need(e, "arity", where), where + ".signature arity");
    c.fixity = fixity_from(need_string(e, "fixity", where + ".signature entry"),
                           where + ".signature entry");
    if (auto it = e.find("aliases"); it != e.end()) {
      for (const auto& a : *it) c.aliases.push_back(a.get<std::string>());
    }
    connectives.push_back(std::move(c));
  }
  const ordered_json& tables_doc = need(doc, "tables", where);
  if (!tables_doc.is_object()) fail(where + ".tables must be an object");
  std::map<std::string, std::vector<std::uint8_t>> tables;
  for (const auto& [name, arr] : tables_doc.items()) {
    if (!arr.is_array()) fail(where + ".tables entries must be arrays");
    std::vector<std::uint8_t> t;
    for (const auto& v : arr) {
      const int x = need_int(v, where + ".tables value");
      if (x < 0 || x >= values) fail(where + ".tables value out of range");
      t.push_back(static_cast<std::uint8_t>(x));
    }
    tables[name] = std::move(t);
  }
  return Matrix(Signature(std::move(connectives)), values, std::move(designated),
                std::move(tables), std::move(value_names));
}

// ---------------------------------------------------------------------------
// Finite-structure documents. Tables are stored as [subset, consequence]
// pairs in sorted bitmask order, subsets as ascending index arrays, so
// totality is a positional check.

ordered_json indices_of(std::uint32_t mask) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

std::uint32_t mask_from_indices(const ordered_json& arr, int n, const std::string& where) {
  if (!arr.is_array()) fail(where + " must be an array of element indices");
  std::uint32_t mask = 0;
  for (const auto& v : arr) {
    const int i = need_int(v, where + " index");
    if (i < 0 || i >= n) fail(where + ": element index out of range");
    mask |= 1u << i;
  }
  return mask;
}

ordered_json finite_doc(const FiniteStructure& s) {
  ordered_json table = ordered_json::array();
  for (std::uint32_t m = 0; m <= s.full_mask(); ++m) {
    table.push_back(ordered_json::array(
        {indices_of(m), indices_of(s.consequence_mask(m))}));
  }
  ordered_json ops = ordered_json::object();
  for (const auto& [name, op] : s.unary_ops()) {
    ordered_json arr = ordered_json::array();
    for (std::uint8_t v : op) arr.push_back(static_cast<int>(v));
    ops[name] = std::move(arr);
  }
  ordered_json constants = ordered_json::object();
  for (const auto& [name, c] : s.constants()) {
    constants[name] = static_cast<int>(c);
  }
  ordered_json doc;
  doc["carrier"] = s.element_names();
  doc["table"] = std::move(table);
  doc["unary_ops"] = std::move(ops);
  doc["constants"] = std::move(constants);
  return doc;
}

FiniteStructure finite_from_doc(const ordered_json& doc, const std::string& where) {
  const ordered_json& carrier = need(doc, "carrier", where);
  if (!carrier.is_array() || carrier.empty()) {
    fail(where + ".carrier must be a nonempty array of element names");
  }
  std::vector<std::string> names;
  for (const auto& e : carrier) names.push_back(e.get<std::string>());
  const int n = static_cast<int>(names.size());
  const ordered_json& table_doc = need(doc, "table", where);
  if (!table_doc.is_array()) fail(where + ".table must be an array");
  const std::size_t expected = std::size_t{1} << n;
  if (table_doc.size() != expected) {
    fail(where + ".table must list all " + std::to_string(expected) +
         " subsets in sorted bitmask order");
  }
  std::vector<std::uint32_t> table(expected, 0);
  for (std::size_t i = 0; i < expected; ++i) {
    const ordered_json& entry = table_doc[i];
    if (!entry.is_array() || entry.size() != 2) {
      fail(where + ".table entries must be [subset, consequence] pairs");
    }
    const std::uint32_t subset = mask_from_indices(entry[0], n, where + ".table subset");
    if (subset != i) {
      fail(where + ".table entry " + std::to_string(i) +
           " is out of order (expected the subset with bitmask " + std::to_string(i) + ")");
    }
    table[i] = mask_from_indices(entry[1], n, where + ".table consequence");
  }
  std::map<std::string, std::vector<std::uint8_t>> ops;
  if (auto it = doc.find("unary_ops"); it != doc.end()) {
    if (!it->is_object()) fail(where + ".unary_ops must be an object");
    for (const auto& [name, arr] : it->items()) {
      if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n)) {
        fail(where + ".unary_ops." + name + " must list an image for every element");
      }
      std::vector<std::uint8_t> op;
      for (const auto& v : arr) {
        const int x = need_int(v, where + ".unary_ops value");
        if (x < 0 || x >= n) fail(where + ".unary_ops." + name + " image out of range");
        op.push_back(static_cast<std::uint8_t>(x));
      }
      ops[name] = std::move(op);
    }
  }
  std::map<std::string, std::uint8_t> constants;
  if (auto it = doc.find("constants"); it != doc.end()) {
    if (!it->is_object()) fail(where + ".constants must be an object");
    for (const auto& [name, v] : it->items()) {
      const int x = need_int(v, where + ".constants value");
      if (x < 0 || x >= n) fail(where + ".constants." + name + " out of range");
      constants[name] = static_cast<std::uint8_t>(x);
    }
  }
  return FiniteStructure(n, std::move(table), std::move(ops), std::move(constants),
                         std::move(names));
}

// ---------------------------------------------------------------------------
// Builtin documents.

ordered_json builtin_doc(const std::string& name) {
  ordered_json doc;
  doc["name"] = name;
  doc["params"] = ordered_json::object();
  return doc;
}

Logic builtin_from_doc(const ordered_json& doc, const std::string& where) {
  std::string id = need_string(doc, "name", where);
  if (auto it = doc.find("params"); it != doc.end()) {
    if (!it->is_object()) fail(where + ".params must be an object");
    if (auto pn = it->find("n"); pn != it->end()) {
      id += ":" + std::to_string(need_int(*pn, where + ".params.n"));
    }
  }
  return load_builtin(id);
}

// ---------------------------------------------------------------------------
// Verdicts, budgets, reports.

Status status_from(const std::string& s, const std::string& where) {
  if (s == "proven") return Status::Proven;
  if (s == "refuted") return Status::Refuted;
  if (s == "unknown") return Status::Unknown;
  fail(where + ": unknown status \"" + s + "\"");
}

ScopeKind scope_from(const std::string& s, const std::string& where) {
  if (s == "exact") return ScopeKind::Exact;
  if (s == "bounded") return ScopeKind::Bounded;
  fail(where + ": unknown scope \"" + s + "\"");
}

ordered_json verdict_doc(const Verdict& v) {
  ordered_json w;
  w["description"] = v.witness.description;
  ordered_json data = ordered_json::object();
  for (const auto& [k, val] : v.witness.data) data[k] = val;
  w["data"] = std::move(data);
  ordered_json doc;
  doc["status"] = to_string(v.status);
  doc["scope"] = to_string(v.scope);
  doc["scope_detail"] = v.scope_detail;
  doc["witness"] = std::move(w);
  doc["note"] = v.note;
  doc["budget_exceeded"] = v.budget_exceeded;
  return doc;
}

Verdict verdict_from_doc(const ordered_json& doc, const std::string& where) {
  Verdict v;
  v.status = status_from(need_string(doc, "status", where), where);
  v.scope = scope_from(need_string(doc, "scope", where), where);
  v.scope_detail = need_string(doc, "scope_detail", where);
  const ordered_json& w = need(doc, "witness", where);
  v.witness.description = need_string(w, "description", where + ".witness");
  for (const auto& [k, val] : need(w, "data", where + ".witness").items()) {
    v.witness.data[k] = val.get<std::string>();
  }
  v.note = need_string(doc, "note", where);
  v.budget_exceeded = need(doc, "budget_exceeded", where).get<bool>();
  return v;
}

ordered_json budget_doc(const Budget& b) {
  ordered_json doc;
  doc["pool_vars"] = b.pool_vars;
  doc["pool_depth"] = b.pool_depth;
  doc["max_set_size"] = b.max_set_size;
  doc["pool_cap"] = b.pool_cap;
  doc["sample_formulas"] = b.sample_formulas;
  doc["sample_sets"] = b.sample_sets;
  doc["sample_elements"] = b.sample_elements;
  doc["seed"] = b.seed;
  doc["subset_cap"] = b.subset_cap;
  doc["jobs"] = b.jobs;
  doc["carrier_cap"] = b.carrier_cap;
  return doc;
}

Budget budget_from_doc(const ordered_json& doc, const std::string& where) {
  Budget b;
  b.pool_vars = need_int(need(doc, "pool_vars", where), where);
  b.pool_depth = need_int(need(doc, "pool_depth", where), where);
  b.max_set_size = need_int(need(doc, "max_set_size", where), where);
  b.pool_cap = need(doc, "pool_cap", where).get<std::uint64_t>();
  b.sample_formulas = need_int(need(doc, "sample_formulas", where), where);
  b.sample_sets = need_int(need(doc, "sample_sets", where), where);
  b.sample_elements = need_int(need(doc, "sample_elements", where), where);
  b.seed = need(doc, "seed", where).get<std::uint64_t>();
  b.subset_cap = need_int(need(doc, "subset_cap", where), where);
  b.jobs = need_int(need(doc, "jobs", where), where);
  b.carrier_cap = need_int(need(doc, "carrier_cap", where), where);
  return b;
}

ordered_json inputs_doc(const ReportInputs& in) {
  ordered_json doc;
  doc["command"] = in.command;
  doc["logic"] = in.logic_argument;
  doc["logic_document"] =
      in.logic_document ? ordered_json(*in.logic_document) : ordered_json(nullptr);
  doc["principles"] = in.principles;
  ordered_json extra = ordered_json::object();
  for (const auto& [k, v] : in.extra) extra[k] = v;
  doc["extra"] = std::move(extra);
  doc["budget"] = budget_doc(in.budget);
  return doc;
}

ReportInputs inputs_from_doc(const ordered_json& doc, const std::string& where) {
  ReportInputs in;
  in.command = need_string(doc, "command", where);
  in.logic_argument = need_string(doc, "logic", where);
  const ordered_json& ld = need(doc, "logic_document", where);
  if (!ld.is_null()) in.logic_document = ld.get<std::string>();
  for (const auto& p : need(doc, "principles", where)) {
    in.principles.push_back(p.get<std::string>());
  }
  for (const auto& [k, v] : need(doc, "extra", where).items()) {
    in.extra.emplace_back(k, v.get<std::string>());
  }
  in.budget = budget_from_doc(need(doc, "budget", where), where + ".budget");
  return in;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

}  // namespace

LoadedLogic logic_from_json(const std::string& text, const std::string& label) {
  const ordered_json j = parse_document(text, label);
  const std::string kind = need_string(j, "kind", label);
  if (kind == "matrix") {
    return LoadedLogic{label, matrix_from_doc(need(j, "matrix", label), label + ".matrix")};
  }
  if (kind == "finite") {
    return LoadedLogic{label, finite_from_doc(need(j, "finite", label), label + ".finite")};
  }
  if (kind == "builtin") {
    return LoadedLogic{label, builtin_from_doc(need(j, "builtin", label), label + ".builtin")};
  }
  fail(label + ": unknown kind \"" + kind + "\" (expected matrix, finite, or builtin)");
}

LoadedLogic resolve_logic_argument(const std::string& arg) {
  constexpr std::string_view prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) {
    return LoadedLogic{arg, load_builtin(arg.substr(prefix.size()))};
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read logic spec file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return logic_from_json(buf.str(), arg);
}

std::string logic_to_json(const Logic& logic) {
  ordered_json doc;
  if (const auto* m = std::get_if<Matrix>(&logic)) {
    doc["kind"] = "matrix";
    doc["matrix"] = matrix_doc(*m);
  } else if (const auto* f = std::get_if<FiniteStructure>(&logic)) {
    doc["kind"] = "finite";
    doc["finite"] = finite_doc(*f);
  } else {
    doc["kind"] = "builtin";
    doc["builtin"] = builtin_doc(std::get<RuleStructure>(logic).name);
  }
  return doc.dump(2);
}

SeparationQuery separation_query_from_json(const std::string& text) {
  const ordered_json j = parse_document(text, "query");
  SeparationQuery q;
  const ordered_json& require = need(j, "require", "query");
  if (!require.is_array() || require.empty()) {
    fail("query.require must be a nonempty array");
  }
  for (const auto& e : require) {
    const std::string id_text = need_string(e, "principle", "query.require entry");
    const auto id = parse_principle(id_text);
    if (!id) fail("query.require: unknown principle \"" + id_text + "\"");
    const std::string st = need_string(e, "status", "query.require entry");
    if (st != "proven" && st != "refuted") {
      fail("query.require: status must be \"proven\" or \"refuted\"");
    }
    q.require.emplace_back(*id, st == "proven" ? Status::Proven : Status::Refuted);
  }
  if (auto it = j.find("structural_filters"); it != j.end()) {
    if (!it->is_object()) fail("query.structural_filters must be an object");
    const auto flag = [&](const char* key) -> std::optional<bool> {
      if (auto f = it->find(key); f != it->end()) {
        if (!f->is_boolean()) fail(std::string("query.structural_filters.") + key +
                                   " must be a boolean");
        return f->get<bool>();
      }
      return std::nullopt;
    };
    q.structural_filters.reflexive = flag("reflexive");
    q.structural_filters.monotonic = flag("monotonic");
    q.structural_filters.transitive = flag("transitive");
  }
  if (auto it = j.find("max_carrier"); it != j.end()) {
    q.max_carrier = need_int(*it, "query.max_carrier");
  }
  return q;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void seal_report(Report& r) {
  r.input_digest = hex16(fnv1a64(inputs_doc(r.inputs).dump()));
}

std::string report_to_json(const Report& r) {
  ordered_json doc;
  doc["version"] = r.version;
  doc["input_digest"] = r.input_digest;
  doc["inputs"] = inputs_doc(r.inputs);
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    ordered_json e;
    e["principle"] = c.principle;
    ordered_json v = verdict_doc(c.verdict);
    for (auto& [key, value] : v.items()) e[key] = std::move(value);
    e["milliseconds"] = c.milliseconds;
    checks.push_back(std::move(e));
  }
  doc["checks"] = std::move(checks);
  ordered_json facts = ordered_json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  doc["facts"] = std::move(facts);
  doc["listing"] = r.listing;
  doc["structure"] = r.structure_json
                         ? ordered_json::parse(*r.structure_json)
                         : ordered_json(nullptr);
  return doc.dump(2);
}

Report report_from_json(const std::string& text) {
  const ordered_json j = parse_document(text, "report");
  Report r;
  r.version = need_string(j, "version", "report");
  r.input_digest = need_string(j, "input_digest", "report");
  r.inputs = inputs_from_doc(need(j, "inputs", "report"), "report.inputs");
  for (const auto& e : need(j, "checks", "report")) {
    CheckRecord c;
    c.principle = need_string(e, "principle", "report.checks entry");
    c.verdict = verdict_from_doc(e, "report.checks entry");
    c.milliseconds = need(e, "milliseconds", "report.checks entry").get<double>();
    r.checks.push_back(std::move(c));
  }
  for (const auto& [k, v] : need(j, "facts", "report").items()) {
    r.facts.emplace_back(k, v.get<std::string>());
  }
  for (const auto& e : need(j, "listing", "report")) {
    r.listing.push_back(e.get<std::string>());
  }
  const ordered_json& st = need(j, "structure", "report");
  if (!st.is_null()) r.structure_json = st.dump(2);
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "conseq " << r.version << "\n";
  out << "input digest: " << r.input_digest << "\n";
  out << "command: " << r.inputs.command << "\n";
  out << "logic: " << r.inputs.logic_argument << "\n";
  for (const auto& [k, v] : r.inputs.extra) {
    out << k << ": " << v << "\n";
  }
  for (const CheckRecord& c : r.checks) {
    const Verdict& v = c.verdict;
    out << "\n" << c.principle << " — " << to_string(v.status) << " (" << to_string(v.scope)
        << ")\n";
    if (!v.scope_detail.empty()) out << "  scope: " << v.scope_detail << "\n";
    if (!v.witness.description.empty()) out << "  witness: " << v.witness.description << "\n";
    for (const auto& [k, val] : v.witness.data) {
      out << "    " << k << " = " << val << "\n";
    }
    if (!v.note.empty()) out << "  note: " << v.note << "\n";
    if (v.budget_exceeded) out << "  budget exceeded\n";
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", c.milliseconds);
    out << "  time: " << ms << " ms\n";
  }
  if (!r.facts.empty()) {
    out << "\n";
    for (const auto& [k, v] : r.facts) out << k << ": " << v << "\n";
  }
  if (!r.listing.empty()) {
    out << "\nlisting (" << r.listing.size() << "):\n";
    for (const std::string& line : r.listing) out << "  " << line << "\n";
  }
  if (r.structure_json) {
    out << "\nstructure:\n" << *r.structure_json << "\n";
  }
  return out.str();
}

}  // namespace conseq
