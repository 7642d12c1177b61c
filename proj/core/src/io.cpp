#include "finring/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace finring {

json ring_to_json(const FiniteRing& r) {
  json doc;
  doc["order"] = r.order;
  doc["one"] = r.one ? json(*r.one) : json(nullptr);
  json add = json::array(), mul = json::array();
  for (int a = 0; a < r.order; ++a) {
    json arow = json::array(), mrow = json::array();
    for (int b = 0; b < r.order; ++b) {
      arow.push_back(r.add(a, b));
      mrow.push_back(r.mul(a, b));
    }
    add.push_back(std::move(arow));
    mul.push_back(std::move(mrow));
  }
  doc["add"] = std::move(add);
  doc["mul"] = std::move(mul);
  doc["labels"] = r.labels;
  return doc;
}

FiniteRing ring_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("add") ||
      !doc.contains("mul"))
    throw std::invalid_argument("ring document: missing order/add/mul");
  FiniteRing r;
  r.order = doc.at("order").get<int>();
  if (r.order < 1)
    throw std::invalid_argument("ring document: order must be >= 1");
  auto read_table = [&](const char* key, std::vector<int>& out) {
    const json& t = doc.at(key);
    if (!t.is_array() || t.size() != size_t(r.order))
      throw std::invalid_argument(std::string("ring document: ") + key +
                                  " must have one row per element");
    out.reserve(size_t(r.order) * r.order);
    for (const json& row : t) {
      if (!row.is_array() || row.size() != size_t(r.order))
        throw std::invalid_argument(std::string("ring document: ") + key +
                                    " rows must have one entry per element");
      for (const json& v : row) {
        int x = v.get<int>();
        if (x < 0 || x >= r.order)
          throw std::invalid_argument(std::string("ring document: ") + key +
                                      " entry out of range");
        out.push_back(x);
      }
    }
  };
  read_table("add", r.add_table);
  read_table("mul", r.mul_table);
  if (doc.contains("one") && !doc.at("one").is_null()) {
    int o = doc.at("one").get<int>();
    if (o < 0 || o >= r.order)
      throw std::invalid_argument("ring document: one out of range");
    r.one = o;
  }
  if (doc.contains("labels") && !doc.at("labels").is_null()) {
    r.labels = doc.at("labels").get<std::vector<std::string>>();
    if (r.labels.size() != size_t(r.order))
      throw std::invalid_argument("ring document: label count mismatch");
  } else {
    r.labels.resize(r.order);
    for (int i = 0; i < r.order; ++i) r.labels[i] = std::to_string(i);
  }
  // derive negation from the addition rows
  r.neg_table.assign(r.order, -1);
  for (int a = 0; a < r.order; ++a)
    for (int b = 0; b < r.order; ++b)
      if (r.add(a, b) == 0) {
        r.neg_table[a] = b;
        break;
      }
  for (int v : r.neg_table)
    if (v < 0)
      throw std::invalid_argument(
          "ring document: axiom failure (element without additive inverse)");
  r.provenance = doc.value("provenance", std::string("table"));
  AxiomReport rep = verify_ring_axioms(r);
  if (!rep)
    throw std::invalid_argument(std::string("ring document: axiom failure (") +
                                axiom_name(rep.axiom) + ": " + rep.detail +
                                ")");
  return r;
}

namespace {
json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}
}  // namespace

FiniteRing load_ring_file(const std::string& path) {
  FiniteRing r = ring_from_json(load_json_file(path));
  r.provenance = "table_file(\"" + path + "\")";
  return r;
}

json sdspec_to_json(const SemidirectSpec& spec) {
  json doc;
  doc["B"] = ring_to_json(spec.b);
  doc["S"] = ring_to_json(spec.s);
  doc["lambda"] = spec.lambda;
  doc["rho"] = spec.rho;
  return doc;
}

SemidirectSpec sdspec_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("B") || !doc.contains("S") ||
      !doc.contains("lambda") || !doc.contains("rho"))
    throw std::invalid_argument("sdprod document: missing B/S/lambda/rho");
  SemidirectSpec spec;
  spec.b = ring_from_json(doc.at("B"));
  spec.s = ring_from_json(doc.at("S"));
  spec.lambda = doc.at("lambda").get<std::vector<std::vector<int>>>();
  spec.rho = doc.at("rho").get<std::vector<std::vector<int>>>();
  ActionReport rep = verify_action_pair(spec);
  if (!rep)
    throw std::invalid_argument(
        std::string("sdprod document: action pair rejected (") +
        action_axiom_name(rep.axiom) + ": " + rep.detail + ")");
  return spec;
}

SemidirectSpec load_sdspec_file(const std::string& path) {
  return sdspec_from_json(load_json_file(path));
}

json analysis_to_json(const AnalysisReport& rep) {
  json doc;
  doc["order"] = rep.order;
  doc["commutative"] = rep.commutative;
  doc["unital"] = rep.unital;
  doc["field"] = rep.field;
  doc["unit_count"] = rep.unit_count;
  doc["ideal_count"] = rep.ideal_count;
  json maxi = json::array();
  for (const auto& m : rep.maximal) maxi.push_back(m.members);
  doc["maximal_ideals"] = std::move(maxi);
  doc["local"] = rep.local;
  doc["subfields"] = rep.subfield_sets;
  return doc;
}

json star_to_json(const FiniteRing& r, const StarWitness& w) {
  json doc;
  doc["maximal_ideal"] = w.m.members;
  doc["subfield"] = w.kappa;
  json labels = json::array();
  for (int i : w.m.members) labels.push_back(r.label(i));
  doc["maximal_ideal_labels"] = std::move(labels);
  labels = json::array();
  for (int i : w.kappa) labels.push_back(r.label(i));
  doc["subfield_labels"] = std::move(labels);
  doc["section"] = w.section.map;
  json dec = json::array();
  for (auto& [x, u] : w.decomposition) dec.push_back(json::array({x, u}));
  doc["decomposition"] = std::move(dec);
  return doc;
}

json classification_to_json(const FiniteRing& r, const Classification& c) {
  json doc;
  doc["order"] = r.order;
  doc["field"] = c.field;
  doc["star"] = c.star ? star_to_json(r, *c.star) : json(nullptr);
  doc["class_a"] = c.class_a;
  doc["class_b"] = c.class_b;
  if (c.a_witness) {
    doc["class_a_witness"] = {{"subfield", c.a_witness->kappa},
                              {"maximal_ideal", c.a_witness->m.members}};
  }
  if (c.b_witness) {
    doc["class_b_witness"] = {{"subfield", c.b_witness->kappa},
                              {"maximal_ideal", c.b_witness->m.members}};
  }
  return doc;
}

json matrix_to_json(const CatalogueReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows)
    rows.push_back({{"ring_id", row.ring_id},
                    {"check_id", row.check_id},
                    {"paper_ref", row.paper_ref},
                    {"pass", row.pass},
                    {"witness", row.witness}});
  json doc;
  doc["rows"] = std::move(rows);
  doc["all_pass"] = rep.all_pass();
  return doc;
}

std::string format_table(const FiniteRing& r, bool multiplicative) {
  size_t cell_w = 1;
  for (const auto& l : r.labels) cell_w = std::max(cell_w, l.size());
  const size_t corner_w = std::max(cell_w, size_t(3));
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::ostringstream out;
  std::string line = pad(multiplicative ? "mul" : "add", corner_w) + " |";
  for (int b = 0; b < r.order; ++b) line += ' ' + pad(r.label(b), cell_w);
  out << rstrip(line) << '\n';
  out << std::string(corner_w, '-') << "-+"
      << std::string((cell_w + 1) * size_t(r.order), '-') << '\n';
  for (int a = 0; a < r.order; ++a) {
    line = pad(r.label(a), corner_w) + " |";
    for (int b = 0; b < r.order; ++b)
      line +=
          ' ' + pad(r.label(multiplicative ? r.mul(a, b) : r.add(a, b)),
                    cell_w);
    out << rstrip(line) << '\n';
  }
  return out.str();
}

namespace {
std::string join_labels(const FiniteRing& r, const IndexSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += r.label(s[i]);
  }
  return out + "}";
}
}  // namespace

std::string format_analysis(const FiniteRing& r, const AnalysisReport& rep) {
  std::ostringstream out;
  out << "ring: " << r.provenance << '\n';
  out << "order: " << rep.order << '\n';
  out << "unital: " << (rep.unital ? "yes" : "no") << '\n';
  out << "commutative: " << (rep.commutative ? "yes" : "no") << '\n';
  out << "field: " << (rep.field ? "yes" : "no") << '\n';
  if (rep.unital) out << "units: " << rep.unit_count << '\n';
  out << "ideals: " << rep.ideal_count << '\n';
  out << "maximal ideals:";
  if (rep.maximal.empty()) out << " none";
  out << '\n';
  for (const auto& m : rep.maximal)
    out << "  " << join_labels(r, m.members) << '\n';
  out << "local: " << (rep.local ? "yes" : "no") << '\n';
  out << "subfields:";
  if (rep.subfield_sets.empty()) out << " none";
  out << '\n';
  for (const auto& k : rep.subfield_sets)
    out << "  " << join_labels(r, k) << '\n';
  return out.str();
}

std::string format_matrix(const CatalogueReport& rep) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& row : rep.rows) {
    out << (row.pass ? "[PASS] " : "[FAIL] ") << row.ring_id << " :: "
        << row.check_id;
    if (!row.witness.empty()) out << " (" << row.witness << ")";
    out << '\n';
    if (row.pass) ++passed;
  }
  out << passed << "/" << rep.rows.size() << " checks passed\n";
  return out.str();
}

}  // namespace finring
