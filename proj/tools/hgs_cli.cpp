// hgs: command-line front end.
//
//   hgs forcing --p 5 --m 8
//   hgs table --max-p3 29
//   hgs enumerate --gamma p=3,m=2,q=C2,tau=trivial
//   hgs oracle --gamma p=7,m=3,q=C3,tau=[2]
//   hgs verify-s40
//   hgs verify-aut [--gamma ...]
//
// Exit status: 0 on success, 1 when an invariant check fails (or, with
// --strict, when a forcing status is unknown), 2 on invalid arguments.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgs/hgs.hpp"

using namespace hgs;

namespace {

struct Options {
  std::string out;
  std::string format;  // empty: csv for table, json otherwise
  std::uint64_t seed = 1;
  bool strict = false;

  int p = 0;
  int m = 0;
  int max_p3 = 29;
  std::string through = "3,5,19";
  std::string gamma;
  int cap = kStructuredCap;
  unsigned threads = worker_count();
  int degree_cap = kOracleConstraintCap;
  std::string variant = "auto";
  bool relabel_check = false;
};

std::optional<PrimeTriple> parse_through(const std::string& text) {
  if (text == "none") return std::nullopt;
  PrimeTriple t{};
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 3) throw PreconditionError("--through expects three primes or 'none'");
    try {
      t[i++] = std::stoi(item);
    } catch (const std::exception&) {
      throw PreconditionError("--through: \"" + item + "\" is not an integer");
    }
  }
  if (i != 3) throw PreconditionError("--through expects three primes or 'none'");
  return t;
}

OracleVariant parse_variant(const std::string& v) {
  if (v == "auto") return OracleVariant::Auto;
  if (v == "exhaustive") return OracleVariant::Exhaustive;
  if (v == "constraint") return OracleVariant::Constraint;
  throw PreconditionError("--variant must be auto, exhaustive or constraint");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw PreconditionError("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_forcing(const Options& o, Format fmt) {
  const auto rec = forcing_record(o.p, o.m);
  emit(o, fmt == Format::Json ? dump(forcing_json(rec)) : fmt == Format::Csv ? forcing_csv(rec) : forcing_text(rec));
  const bool unknown = rec.fs.status == FsStatus::Unknown || !rec.fq;
  return o.strict && unknown ? 1 : 0;
}

int cmd_table(const Options& o, Format fmt) {
  const auto rows = triples_table(o.max_p3, parse_through(o.through));
  emit(o, fmt == Format::Json ? dump(table_json(rows)) : fmt == Format::Csv ? table_csv(rows) : table_text(rows));
  return 0;
}

/// Relabels Gamma's points by a seeded random bijection and checks that the
/// records move accordingly.
std::vector<std::string> relabel_violations(const Options& o, const PermGroup& L, int p,
                                            const std::vector<RegularSubgroupRecord>& recs, bool oracle) {
  std::mt19937_64 rng(o.seed);
  std::vector<Point> img(L.degree());
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  const Perm sigma(img);
  const PermGroup moved_lambda = relabel(L, sigma);
  const auto moved = oracle ? oracle_enumerate(moved_lambda, p, parse_variant(o.variant), o.degree_cap)
                            : structured_enumerate(moved_lambda, p, {o.cap, o.threads});
  std::vector<std::vector<Perm>> want, got;
  for (const auto& r : recs) want.push_back(relabel(r.elements, sigma));
  for (const auto& r : moved) got.push_back(r.elements);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want == got) return {};
  return {"relabeling by a random bijection does not permute the record set"};
}

int cmd_enumerate(const Options& o, Format fmt, bool oracle) {
  const auto spec = GammaSpec::parse(o.gamma);
  const auto L = left_regular(build_gamma(spec));
  const auto s = Setting::make(L, spec.p);
  auto recs = oracle ? oracle_enumerate(L, spec.p, parse_variant(o.variant), o.degree_cap)
                     : structured_enumerate(s, {o.cap, o.threads});
  auto extra = o.relabel_check ? relabel_violations(o, L, spec.p, recs, oracle) : std::vector<std::string>{};
  auto rep = make_report(s, spec.to_string(), oracle ? "oracle" : "structured", std::move(recs));
  rep.violations.insert(rep.violations.end(), extra.begin(), extra.end());
  emit(o, fmt == Format::Json ? dump(report_json(rep)) : fmt == Format::Csv ? report_csv(rep) : report_text(rep));
  return rep.violations.empty() ? 0 : 1;
}

int cmd_verify_s40(const Options& o, Format fmt) {
  const auto rep = s40::verify();
  if (fmt == Format::Csv) {
    std::string csv = "check,passed,detail\n";
    for (const auto& c : rep.checks) csv += c.name + "," + (c.passed ? "true" : "false") + ",\"" + c.detail + "\"\n";
    emit(o, csv);
  } else {
    emit(o, fmt == Format::Json ? dump(s40_json(rep)) : s40_text(rep));
  }
  return rep.all_passed() ? 0 : 1;
}

int cmd_verify_aut(const Options& o, Format fmt) {
  std::vector<GammaSpec> specs;
  if (!o.gamma.empty()) {
    specs.push_back(GammaSpec::parse(o.gamma));
  } else {
    for (auto [p, m] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 2}, std::pair{5, 3}, std::pair{7, 3},
                        std::pair{7, 6}})
      for (const auto& e : gamma_catalog(p, m)) specs.push_back(e.spec);
  }
  Json all = Json::array();
  std::string text, csv = "gamma,gamma_spec,branch,aut_order,holds\n";
  bool ok = true;
  for (const auto& spec : specs) {
    const auto r = verify_aut_lemma(spec);
    ok = ok && r.holds;
    all.push_back(aut_lemma_json(r));
    text += aut_lemma_text(r);
    csv += r.gamma_name + ",\"" + spec.to_string() + "\"," + r.branch + "," + std::to_string(r.aut_order) + "," +
           (r.holds ? "true" : "false") + "\n";
  }
  emit(o, fmt == Format::Json ? dump(all) : fmt == Format::Csv ? csv : text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular subgroups normalized by lambda(Gamma) for |Gamma| = mp"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write the report to this path instead of standard output");
  app.add_option("--format", o.format, "Output format: json, csv or text (default csv for table, json otherwise)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_flag("--strict", o.strict, "Fail when a forcing status is unknown");

  auto* forcing = app.add_subcommand("forcing", "Decide (p, m) in F_S and F_Q");
  forcing->add_option("--p", o.p, "Prime p")->required();
  forcing->add_option("--m", o.m, "Cofactor m, coprime to p")->required();

  auto* table = app.add_subcommand("table", "Prime triples p1 < p2 < p3 with (p, m) forced");
  table->add_option("--max-p3", o.max_p3, "Largest p3")->capture_default_str();
  table->add_option("--through", o.through, "Last triple to include, e.g. 3,5,19, or 'none'")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Structured search inside Norm(P)");
  auto* oracle = app.add_subcommand("oracle", "Brute-force search, independent of Norm(P)");
  for (auto* sub : {enumerate, oracle}) {
    sub->add_option("--gamma", o.gamma, "Gamma as p=..,m=..,q=..,tau=[..]")->required();
    sub->add_flag("--relabel-check", o.relabel_check, "Re-run on a randomly relabeled Gamma (uses --seed)");
  }
  enumerate->add_option("--cap", o.cap, "Largest |Gamma| accepted")->capture_default_str();
  enumerate->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  oracle->add_option("--degree-cap", o.degree_cap, "Largest degree accepted")->capture_default_str();
  oracle->add_option("--variant", o.variant, "auto, exhaustive or constraint")->capture_default_str();

  auto* s40 = app.add_subcommand("verify-s40", "Check the worked example in S_40");
  auto* aut = app.add_subcommand("verify-aut", "Check the automorphism lemma against brute-force Aut(Gamma)");
  aut->add_option("--gamma", o.gamma, "Gamma as p=..,m=..,q=..,tau=[..]; default: all of orders 6 to 42");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(o.format.empty() ? (table->parsed() ? "csv" : "json") : o.format);
    if (forcing->parsed()) return cmd_forcing(o, fmt);
    if (table->parsed()) return cmd_table(o, fmt);
    if (enumerate->parsed()) return cmd_enumerate(o, fmt, false);
    if (oracle->parsed()) return cmd_enumerate(o, fmt, true);
    if (s40->parsed()) return cmd_verify_s40(o, fmt);
    if (aut->parsed()) return cmd_verify_aut(o, fmt);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
