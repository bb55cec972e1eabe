// cremona-lab: construct, analyze, deform, scan and verify cubic birational
// maps of P^3. Exit codes are listed in README.md.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cremona/acceptance.hpp"
#include "cremona/document.hpp"

using namespace cremona;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kConstruction = 2,
  kNotBirational = 3,
  kBudget = 4,
  kParse = 5,
  kDeformMismatch = 6,
  kScanFailures = 7,
  kAcceptance = 8,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string read_in(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<long long> parse_samples(const std::string& s) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad sample value '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("no samples given");
  return out;
}

uint32_t checked_prime(uint64_t p) {
  if (p <= 1000 || p >= (1ULL << 31) || !is_prime_u64(p)) throw UsageError(std::to_string(p) + " is not a prime in (1000, 2^31)");
  return static_cast<uint32_t>(p);
}

// ------------------------------------------------------------------ construct

struct ConstructArgs {
  std::string family, variant, name, field = "q", out;
  int d = 0;
  uint64_t seed = 1;
  bool degenerate = false;
};

// "ruled" (with --d), "special" (with --name), a constructor group with
// --variant, or a family label.
std::string resolve_label(const ConstructArgs& a) {
  if (a.family == "ruled") {
    if (a.d < 2 || a.d > 5) throw UsageError("--family ruled needs --d in 2..5");
    return ruled_label(a.d);
  }
  static const std::map<std::string, std::vector<std::string>> groups = {
      {"determinantal", {"E2"}},
      {"dejonquieres", {"E3", "E3.5", "E4"}},
      {"cuboquartic", {"E6", "E7", "E7.5", "E8", "E9"}},
      {"cuboquintic", {"E12", "E13", "E14", "E19", "E23", "E24"}},
  };
  if (auto g = groups.find(a.family); g != groups.end()) {
    std::string v = a.variant.empty() ? g->second.front() : a.variant;
    if (std::find(g->second.begin(), g->second.end(), v) == g->second.end())
      throw UsageError("unknown variant '" + v + "' of " + a.family);
    return v;
  }
  const auto& labels = family_labels();
  if (std::find(labels.begin(), labels.end(), a.family) == labels.end()) throw UsageError("unknown family '" + a.family + "'");
  return a.family;
}

int cmd_construct(const ConstructArgs& a) {
  if (a.family == "special") {
    auto m = special_example(a.name);
    if (!m) {
      std::string names;
      for (auto& e : special_examples()) names += " " + e.name;
      throw UsageError("unknown special map '" + a.name + "'; known:" + names);
    }
    write_out(a.out, render(document_json(*m, Json{{"family", "special"}, {"name", a.name}})));
    return kOk;
  }
  std::string label = resolve_label(a);
  std::variant<Qq, Zp> field;
  try {
    field = parse_field(a.field, "--field");
  } catch (const DocumentError& e) {
    throw UsageError(e.what());
  }
  std::visit(
      [&](auto& f) {
        auto c = construct(label, a.seed, f, a.degenerate);
        write_out(a.out, render(document_json(c.map, provenance_json(c.spec))));
      },
      field);
  return kOk;
}

// ------------------------------------------------------------------ analyze

struct AnalyzeArgs {
  std::string input = "-", out;
  uint64_t seed = 1;
  uint64_t prime = 0;
  int trials = 5;
  size_t max_pairs = 0;
  int max_degree = 0;
  bool timing = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  std::optional<MapDocument> doc;
  try {
    doc = parse_document(read_in(a.input));
  } catch (const DocumentError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kParse;
  }
  if (a.max_pairs) default_budget().max_pairs = a.max_pairs;
  if (a.max_degree) default_budget().max_degree = a.max_degree;
  AnalysisOptions opt;
  opt.trials = a.trials;

  std::optional<FullAnalysis> r;
  try {
    if (auto* q = std::get_if<RationalMap<Qq>>(&doc->map)) {
      std::optional<uint32_t> pinned;
      if (a.prime) pinned = static_cast<uint32_t>(a.prime);
      r = analyze_rational(*q, a.seed, pinned, opt);
    } else {
      auto& m = std::get<RationalMap<Zp>>(doc->map);
      if (a.prime && a.prime != m.field().prime()) throw UsageError("--prime conflicts with the document field " + doc->field());
      r = analyze_full(m, a.seed, opt);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  }
  Json j = report_json(*r, a.timing);
  j["field"] = doc->field();
  if (!doc->provenance.is_null()) j["provenance"] = doc->provenance;
  write_out(a.out, render(j));

  switch (r->a.birational.verdict) {
    case Verdict::Inconclusive:
      std::cerr << "birationality inconclusive within the budget\n";
      return kBudget;
    case Verdict::No:
      std::cerr << "map is not birational\n";
      return kNotBirational;
    case Verdict::Yes:
      break;
  }
  if (!r->a.degree_identity() || !r->a.genus_formula()) {
    std::cerr << "internal inconsistency: liaison identities fail\n";
    return kUsage;
  }
  return kOk;
}

// ------------------------------------------------------------------ deform

struct DeformArgs {
  std::string path, samples = "0,1,2", expect, out;
  uint64_t seed = 1, prime = 0;
};

int cmd_deform(const DeformArgs& a) {
  auto path = parse_path(a.path);
  if (!path) throw UsageError("unknown path '" + a.path + "' (det_to_dJ, E6_to_E7, ruled_jump, E24_to_E23)");
  auto ts = parse_samples(a.samples);
  Zp f(a.prime ? checked_prime(a.prime) : draw_prime(a.seed, 0));
  // --expect A,B overrides the expected label (or component) at t = 0 and t != 0.
  std::optional<std::pair<std::string, std::string>> expect;
  if (!a.expect.empty()) {
    auto comma = a.expect.find(',');
    if (comma == std::string::npos) throw UsageError("--expect needs two labels: at_zero,elsewhere");
    expect = {a.expect.substr(0, comma), a.expect.substr(comma + 1)};
  }
  Json rows = Json::array();
  bool all = true;
  for (auto& s : deform(*path, ts, f, a.seed)) {
    const auto& m = s.analysis;
    if (expect) {
      s.expected = s.t == 0 ? expect->first : expect->second;
      s.ok = m.birational.verdict == Verdict::Yes && s.cls && (s.cls->label == s.expected || s.cls->component == s.expected);
    }
    Json row{{"t", s.t},
             {"bidegree", {m.bidegree.first, m.bidegree.second}},
             {"C2", curve_json(m.C2())},
             {"genus", m.genus},
             {"ruled", m.ruled.ruled},
             {"counts", counts_json(s.hudson.counts)},
             {"label", s.cls ? Json(s.cls->label) : Json()},
             {"component", s.cls ? Json(s.cls->component) : Json()},
             {"expected", s.expected},
             {"ok", s.ok}};
    if (!s.error.empty()) row["error"] = s.error;
    rows.push_back(row);
    all = all && s.ok;
  }
  write_out(a.out, render(Json{{"path", a.path}, {"prime", f.prime()}, {"seed", a.seed}, {"samples", rows}, {"endpoints_ok", all}}));
  if (!all) {
    std::cerr << "deformation endpoint mismatch\n";
    return kDeformMismatch;
  }
  return kOk;
}

// ------------------------------------------------------------------ scan

struct ScanArgs {
  std::string families = "all", atlas = "atlas.jsonl";
  int count = 10, jobs = 1;
  uint64_t seed_start = 1, prime = 0;
};

int cmd_scan(const ScanArgs& a) {
  ScanOptions opt;
  try {
    opt.families = expand_families(a.families);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.count < 0) throw UsageError("--count must be non-negative");
  opt.count = a.count;
  opt.seed_start = a.seed_start;
  opt.jobs = std::max(1, a.jobs);
  if (a.prime) opt.prime = checked_prime(a.prime);
  Atlas atlas(a.atlas);
  if (atlas.repaired()) std::cerr << "atlas: truncated final record removed\n";
  auto s = run_scan(opt, &atlas);
  for (auto& r : s.records)
    if (!r.value("ok", false))
      std::cerr << "sample " << r["family"].get<std::string>() << "#" << r["seed"] << ": " << r.value("error", "expectation not met") << "\n";
  Json j = s.to_json();
  j["atlas"] = a.atlas;
  j["failure_rate"] = s.failure_rate();
  std::cout << render(j);
  return s.failure_rate() > 0.10 ? kScanFailures : kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  uint64_t prime = 0;
  std::string table = default_table_path();
  std::vector<int> only;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  AcceptanceOptions opt;
  if (a.prime) opt.prime = static_cast<uint32_t>(a.prime);  // bad values exercise the retry path
  opt.table_path = a.table;
  opt.only = a.only;
  auto rep = run_acceptance(opt, [&](const CriterionResult& r) {
    if (!a.json) std::cout << result_line(r) << std::endl;
  });
  if (a.json) {
    Json crit = Json::array();
    for (auto& r : rep.results)
      crit.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    std::cout << render(Json{{"criteria", crit}, {"bad_prime_retries", rep.bad_prime_retries}, {"all_pass", rep.all_pass()}});
  } else {
    if (rep.bad_prime_retries) std::cout << "forced prime rejected, " << rep.bad_prime_retries << " fresh primes drawn\n";
    std::cout << (rep.all_pass() ? "all criteria pass" : "acceptance FAILED") << "\n";
  }
  return rep.all_pass() ? kOk : kAcceptance;
}

// ------------------------------------------------------------------ table

int cmd_table(const std::string& path, bool json) {
  std::vector<TableRow> rows;
  try {
    rows = load_table(path);
  } catch (const TableIntegrityError& e) {
    std::cerr << "table integrity: " << e.what() << "\n";
    return kUsage;
  }
  if (!json) {
    std::cout << read_file(path);
    return kOk;
  }
  Json out = Json::array();
  for (auto& r : rows)
    out.push_back(Json{{"row", r.number},
                       {"d", r.d},
                       {"degrees", r.degrees},
                       {"counts", counts_json(r.counts)},
                       {"fcurves", r.fcurves},
                       {"remarks", r.remarks}});
  std::cout << render(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic birational maps of P^3: construction, analysis and classification"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* c = app.add_subcommand("construct", "Build a map from a family and write its MapDocument");
  c->add_option("--family", ca.family, "label, ruled, special, determinantal, dejonquieres, cuboquartic or cuboquintic")->required();
  c->add_option("--d", ca.d, "bidegree (3,d) for ruled maps");
  c->add_option("--variant", ca.variant, "label within a constructor group");
  c->add_option("--name", ca.name, "special map name");
  c->add_option("--seed", ca.seed);
  c->add_option("--field", ca.field, "q or gf:<p>");
  c->add_flag("--degenerate", ca.degenerate, "ruled maps: put two base points on one ruling");
  c->add_option("-o,--out", ca.out, "output file (default stdout)");

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "Analyze a MapDocument and print the report");
  an->add_option("input", aa.input, "document path or - for stdin");
  an->add_option("--seed", aa.seed);
  an->add_option("--prime", aa.prime, "working prime for documents over Q");
  an->add_option("--trials", aa.trials, "birationality fibers sampled");
  an->add_option("--max-pairs", aa.max_pairs, "Groebner pair budget");
  an->add_option("--max-degree", aa.max_degree, "Groebner degree budget");
  an->add_flag("--timing", aa.timing, "include wall time in the report");
  an->add_option("-o,--out", aa.out);

  DeformArgs da;
  auto* de = app.add_subcommand("deform", "Analyze members of a one-parameter degeneration");
  de->add_option("--path", da.path, "det_to_dJ, E6_to_E7, ruled_jump or E24_to_E23")->required();
  de->add_option("--samples", da.samples, "comma separated parameter values");
  de->add_option("--expect", da.expect, "expected labels at_zero,elsewhere (default: the path's own)");
  de->add_option("--seed", da.seed);
  de->add_option("--prime", da.prime);
  de->add_option("-o,--out", da.out);

  ScanArgs sa;
  auto* sc = app.add_subcommand("scan", "Seeded scan into a JSONL atlas");
  sc->add_option("--families", sa.families, "all, ruled, 3-3, 3-4, 3-5 or labels, comma separated");
  sc->add_option("--count", sa.count, "total samples, families taken in turn");
  sc->add_option("--seed-start", sa.seed_start);
  sc->add_option("--prime", sa.prime, "pin the prime (default: fresh per sample)");
  sc->add_option("--atlas", sa.atlas, "JSONL atlas file");
  sc->add_option("--jobs", sa.jobs);

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Run the acceptance suite");
  ve->add_option("--prime", va.prime, "force a working prime");
  ve->add_option("--table", va.table, "Table VI data file");
  ve->add_option("--only", va.only, "criterion numbers");
  ve->add_flag("--json", va.json);

  std::string table_path = default_table_path();
  bool table_json = false;
  auto* ta = app.add_subcommand("table", "Print the encoded Table VI");
  ta->add_option("--path", table_path);
  ta->add_flag("--json", table_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c) return cmd_construct(ca);
    if (*an) return cmd_analyze(aa);
    if (*de) return cmd_deform(da);
    if (*sc) return cmd_scan(sa);
    if (*ve) return cmd_verify(va);
    if (*ta) return cmd_table(table_path, table_json);
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kConstruction;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
