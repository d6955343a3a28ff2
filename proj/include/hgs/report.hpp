#pragma once

// JSON, CSV and text emitters for forcing queries, the triples table, catalog
// entries and enumeration runs. JSON objects keep insertion order.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgs/enumerator.hpp"
#include "hgs/forcing.hpp"
#include "hgs/groups.hpp"
#include "hgs/s40.hpp"

namespace hgs {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw PreconditionError("unknown format \"" + s + "\" (expected json, csv or text)");
}

// -- triples -----------------------------------------------------------------------

/// {a: [...], r: k, alpha: [1-based images]}.
inline Json triple_json(const Triple& t) {
  std::vector<int> alpha;
  for (std::size_t j = 0; j < t.alpha.degree(); ++j) alpha.push_back(static_cast<int>(t.alpha(static_cast<Point>(j))) + 1);
  return Json{{"a", t.a}, {"r", t.r}, {"alpha", alpha}};
}

inline Triple triple_from_json(const Json& j) {
  Triple t;
  t.a = j.at("a").get<std::vector<int>>();
  t.r = j.at("r").get<int>();
  std::vector<Point> img;
  for (int x : j.at("alpha").get<std::vector<int>>()) {
    if (x < 1) throw Error("triple: alpha images are 1-based");
    img.push_back(static_cast<Point>(x - 1));
  }
  t.alpha = Perm(std::move(img));
  return t;
}

// -- forcing -----------------------------------------------------------------------

inline Json forcing_json(const ForcingRecord& r) {
  Json fs{{"status", to_string(r.fs.status)}};
  if (!r.fs.witness.empty()) {
    fs["witness"] = r.fs.witness;
    fs["witness_sylow_count"] = r.fs.witness_np;
  }
  Json j{{"p", r.p}, {"m", r.m}, {"fs", fs}};
  if (r.fq)
    j["fq"] = Json{{"holds", r.fq->holds}, {"witnesses", r.fq->witnesses}};
  else
    j["fq"] = nullptr;
  return j;
}

inline std::string forcing_csv(const ForcingRecord& r) {
  std::string fq = r.fq ? (r.fq->holds ? "true" : "false") : "unknown";
  return "p,m,fs_status,fs_witness,fq\n" + std::to_string(r.p) + "," + std::to_string(r.m) + "," +
         to_string(r.fs.status) + "," + r.fs.witness + "," + fq + "\n";
}

inline std::string forcing_text(const ForcingRecord& r) {
  std::ostringstream os;
  os << "(p, m) = (" << r.p << ", " << r.m << ")\n";
  os << "F_S: " << to_string(r.fs.status);
  if (!r.fs.witness.empty()) os << " (witness " << r.fs.witness << " with " << r.fs.witness_np << " p-Sylows)";
  os << "\nF_Q: ";
  if (!r.fq)
    os << "unknown (groups of order " << r.m << " not catalogued)";
  else if (r.fq->holds)
    os << "holds";
  else {
    os << "fails";
    for (const auto& w : r.fq->witnesses) os << "; " << w;
  }
  os << "\n";
  return os.str();
}

// -- table -------------------------------------------------------------------------

inline Json table_json(const std::vector<TripleRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"p1", r.p1}, {"p2", r.p2}, {"p3", r.p3}, {"p", r.p}, {"m", r.m}, {"mp", r.mp}, {"p_lt_m", r.p_lt_m}});
  return a;
}

inline std::vector<TripleRow> table_from_json(const Json& a) {
  std::vector<TripleRow> rows;
  for (const auto& j : a)
    rows.push_back({j.at("p1").get<int>(), j.at("p2").get<int>(), j.at("p3").get<int>(), j.at("p").get<int>(),
                    j.at("m").get<int>(), j.at("mp").get<int>(), j.at("p_lt_m").get<bool>()});
  return rows;
}

inline std::string table_text(const std::vector<TripleRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows)
    os << "{" << r.p1 << "," << r.p2 << "," << r.p3 << "}  p=" << r.p << "  m=" << r.m << "  mp=" << r.mp
       << (r.p_lt_m ? "  *" : "") << "\n";
  return os.str();
}

// -- catalog -----------------------------------------------------------------------

inline Json catalog_json(const std::vector<CatalogEntry>& entries) {
  Json a = Json::array();
  for (const auto& e : entries) a.push_back({{"m", e.m}, {"name", e.name}, {"aut_order", e.aut_order}});
  return a;
}

// -- enumeration -------------------------------------------------------------------

struct EnumerationReport {
  std::string gamma;       // catalog label of Gamma
  std::string gamma_spec;  // "p=..,m=..,q=..,tau=.."
  std::string method;      // "structured" or "oracle"
  int p = 0;
  int m = 0;
  std::vector<RegularSubgroupRecord> records;
  RMatrix counts;
  std::vector<std::string> violations;
};

inline EnumerationReport make_report(const Setting& s, const std::string& gamma_spec, const std::string& method,
                                     std::vector<RegularSubgroupRecord> recs) {
  EnumerationReport r;
  r.gamma = s.gamma_label;
  r.gamma_spec = gamma_spec;
  r.method = method;
  r.p = s.p;
  r.m = s.m;
  r.counts = r_matrix(s, recs);
  r.violations = check_invariants(s, recs);
  r.records = std::move(recs);
  return r;
}

inline Json report_json(const EnumerationReport& r) {
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    Json gens = Json::array();
    for (const auto& g : rec.generators) gens.push_back(g.to_string());
    Json j{{"generators", gens}, {"iso_class", rec.iso_class}, {"order", rec.order}};
    j["p_part"] = rec.p_part ? triple_json(*rec.p_part) : Json(nullptr);
    j["inside_norm"] = rec.inside_norm;
    recs.push_back(j);
  }
  Json counts = Json::object();
  for (const auto& [label, c] : r.counts.counts) counts[label] = c;
  return Json{{"gamma", r.gamma}, {"gamma_spec", r.gamma_spec}, {"method", r.method}, {"p", r.p}, {"m", r.m},
              {"records", recs},  {"counts", counts},          {"total", r.counts.total},
              {"violations", r.violations}};
}

/// Inverse of report_json; element lists are regenerated from the generators.
inline EnumerationReport report_from_json(const Json& j) {
  EnumerationReport r;
  r.gamma = j.at("gamma").get<std::string>();
  r.gamma_spec = j.at("gamma_spec").get<std::string>();
  r.method = j.at("method").get<std::string>();
  r.p = j.at("p").get<int>();
  r.m = j.at("m").get<int>();
  const auto degree = static_cast<std::size_t>(r.p) * static_cast<std::size_t>(r.m);
  for (const auto& jr : j.at("records")) {
    RegularSubgroupRecord rec;
    for (const auto& g : jr.at("generators")) rec.generators.push_back(Perm::parse(g.get<std::string>(), degree));
    rec.elements = closure(rec.generators, degree).elements();
    rec.order = jr.at("order").get<int>();
    rec.iso_class = jr.at("iso_class").get<std::string>();
    if (!jr.at("p_part").is_null()) rec.p_part = triple_from_json(jr.at("p_part"));
    rec.inside_norm = jr.at("inside_norm").get<bool>();
    r.records.push_back(std::move(rec));
  }
  r.counts.gamma_id = r.gamma;
  for (const auto& [label, c] : j.at("counts").items()) r.counts.counts.emplace_back(label, c.get<int>());
  r.counts.total = j.at("total").get<int>();
  r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

/// One row per iso class: gamma,p,m,iso_class,count.
inline std::string report_csv(const EnumerationReport& r) {
  std::string out = "gamma,p,m,iso_class,count\n";
  for (const auto& [label, c] : r.counts.counts)
    out += r.gamma + "," + std::to_string(r.p) + "," + std::to_string(r.m) + "," + label + "," + std::to_string(c) + "\n";
  return out;
}

inline std::string report_text(const EnumerationReport& r) {
  std::ostringstream os;
  os << "Gamma = " << r.gamma << " (" << r.gamma_spec << "), p = " << r.p << ", m = " << r.m << ", " << r.method
     << " search\n";
  os << r.records.size() << " regular subgroups normalized by lambda(Gamma)\n";
  for (const auto& [label, c] : r.counts.counts) os << "  " << label << ": " << c << "\n";
  if (r.violations.empty())
    os << "all invariant checks passed\n";
  else
    for (const auto& v : r.violations) os << "VIOLATION: " << v << "\n";
  return os.str();
}

// -- worked examples -----------------------------------------------------------------

inline Json s40_json(const s40::Report& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"pi", s40::pi().to_string()}, {"theta", s40::theta().to_string()}, {"checks", checks},
              {"passed", rep.all_passed()}};
}

inline std::string s40_text(const s40::Report& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) os << (c.passed ? "ok    " : "FAIL  ") << c.name << ": " << c.detail << "\n";
  os << (rep.all_passed() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

inline Json aut_lemma_json(const AutLemmaReport& r) {
  return Json{{"gamma", r.gamma_name},
              {"gamma_spec", r.spec.to_string()},
              {"branch", std::string(1, r.branch)},
              {"aut_order", r.aut_order},
              {"aut_q_order", r.aut_q_order},
              {"order_p_automorphisms", r.order_p_automorphisms},
              {"inner_by_p", r.inner_by_p},
              {"holds", r.holds},
              {"detail", r.detail}};
}

inline std::string aut_lemma_text(const AutLemmaReport& r) {
  return r.gamma_name + " (" + r.spec.to_string() + "): branch (" + r.branch + ") " + (r.holds ? "holds" : "FAILS") +
         ": " + r.detail + "\n";
}

}  // namespace hgs
