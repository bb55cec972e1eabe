#pragma once
// Full analysis pipeline (liaison invariants, Hudson vector, component label,
// Table VI matches) and its JSON rendering.

#include <chrono>

#include "cremona/families.hpp"
#include "json.hpp"

namespace cremona {

using Json = nlohmann::ordered_json;

struct FullAnalysis {
  MapAnalysis<Zp> a;
  std::optional<HudsonVector> hudson;
  std::optional<Classification> cls;
  std::string cls_error;
  std::vector<int> rows;
  std::optional<std::string> missing_note;
  std::vector<uint32_t> primes;  // every prime tried, last one used
  double seconds = 0;

  bool birational() const { return a.birational.verdict == Verdict::Yes; }
};

inline FullAnalysis analyze_full(const RationalMap<Zp>& psi, uint64_t seed, const AnalysisOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  FullAnalysis r{analyze(psi, seed, opt)};
  r.primes = {psi.field().prime()};
  if (r.birational() && psi.degree() == 3) {
    r.hudson = hudson_vector(psi, r.a, seed);
    try {
      r.cls = classify_component(r.a, *r.hudson);
      r.missing_note = missing_row_note(r.cls->label);
    } catch (const ComponentError& e) {
      r.cls_error = e.what();
    }
    for (auto& row : match_table(*r.hudson)) r.rows.push_back(row.number);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Primes are drawn from the seed unless pinned. A pinned prime that is too
// small or turns out bad (identity violations, denominators) is replaced by
// a fresh one.
inline uint32_t draw_prime(uint64_t seed, int attempt) {
  Rng r = Rng(seed).split("prime").split(static_cast<uint64_t>(attempt));
  return random_prime(r);
}

inline FullAnalysis analyze_rational(const RationalMap<Qq>& psi, uint64_t seed, std::optional<uint32_t> pinned = std::nullopt,
                                     const AnalysisOptions& opt = {}) {
  std::vector<uint32_t> tried;
  std::string last;
  for (int attempt = 0; attempt < 4; ++attempt) {
    uint32_t p = attempt == 0 && pinned ? *pinned : draw_prime(seed, attempt);
    tried.push_back(p);
    try {
      if (p <= 1000 || !is_prime_u64(p)) throw BadPrime("prime " + std::to_string(p) + " rejected");
      auto r = analyze_full(reduce_mod(psi, Zp(p)), seed, opt);
      r.primes = tried;
      if (attempt > 0) r.a.warnings.push_back("bad prime retry: " + last);
      return r;
    } catch (const BadPrime& e) {
      last = e.what();
    } catch (const AnalysisError& e) {
      last = e.what();
    }
  }
  throw AnalysisError("no good prime after 4 attempts: " + last);
}

// ------------------------------------------------------------------ JSON

template <class F>
Json point_json(const F& f, const Point<F>& p) {
  Json j = Json::array();
  for (auto& x : p) j.push_back(f.to_string(x));
  return j;
}

inline Json counts_json(const HudsonCounts& c) {
  return Json{{"dp_contact", c.dpc}, {"binode", c.binode}, {"double_points", c.dp},
              {"osculation", c.osculation}, {"contact", c.contact}, {"ordinary", c.ordinary}};
}

inline Json expectation_json(const Expectation& e) {
  Json j{{"label", e.label},
         {"component", e.component},
         {"bidegree", {e.bidegree.first, e.bidegree.second}},
         {"deg_c2", e.deg_c2},
         {"pa_c2", e.pa_c2 ? Json(*e.pa_c2) : Json()},
         {"counts", counts_json(e.counts)},
         {"row", e.row ? Json(e.row) : Json("missing-row")}};
  return j;
}

template <class F>
Json curve_json(const CurveRecord<F>& c) {
  return Json{{"degree", c.degree}, {"p_a", c.p_a}};
}

inline Json hudson_json(const HudsonVector& v, const Zp& f) {
  Json pts = Json::array();
  for (auto& r : v.points) {
    Json p{{"point", point_json(f, r.point)}, {"type", tag_name(r.type.tag)}, {"in_theta", r.in_theta}};
    if (r.type.rank >= 0) p["rank"] = r.type.rank;
    if (r.type.fixed_plane) p["fixed_plane"] = r.type.fixed_plane->to_string();
    if (r.type.needs_extension) p["needs_extension"] = true;
    if (r.profile) p["profile"] = {r.profile->d1, r.profile->d2};
    pts.push_back(p);
  }
  Json fc = Json::array();
  for (auto& c : v.fcurves) fc.push_back(Json{{"degree", c.degree}, {"p_a", c.p_a}, {"line", c.line}});
  Json j{{"counts", counts_json(v.counts)}, {"fcurves", fc}, {"lines_found", v.lines_found}, {"points", pts},
         {"ruled", v.ruled}, {"partial", v.partial}};
  if (v.quadric_cone_at_binode) j["quadric_cone_at_binode"] = *v.quadric_cone_at_binode;
  return j;
}

// Byte-identical for identical (map, seed, prime) unless timing is requested.
inline Json report_json(const FullAnalysis& r, bool timing = false) {
  const auto& a = r.a;
  Zp f(a.prime);
  Json fib = Json::array();
  for (auto x : a.birational.fiber_degrees) fib.push_back(x);
  Json j{{"prime", a.prime},
         {"primes_tried", r.primes},
         {"seed", a.seed},
         {"bidegree", {a.bidegree.first, a.bidegree.second}},
         {"deg1part", a.deg1part},
         {"theta_points", a.theta_count},
         {"C1", curve_json(a.C1())},
         {"C2", curve_json(a.C2())},
         {"degree_identity", a.degree_identity()},
         {"genus_formula", a.genus_formula()},
         {"birational", {{"verdict", verdict_name(a.birational.verdict)}, {"trials", a.birational.trials}, {"fiber_degrees", fib}}},
         {"certificate", a.certificate},
         {"genus", a.genus},
         {"ruled", a.ruled.ruled},
         {"warnings", a.warnings}};
  if (a.ruled.line) j["double_line"] = a.ruled.line->gens().size() ? Json(a.ruled.line->gens()[0].to_string() + ", " +
                                                                         a.ruled.line->gens().back().to_string())
                                                                   : Json();
  j["hudson"] = r.hudson ? hudson_json(*r.hudson, f) : Json();
  if (r.cls)
    j["classification"] = {{"label", r.cls->label}, {"component", r.cls->component}};
  else
    j["classification"] = r.cls_error.empty() ? Json() : Json{{"error", r.cls_error}};
  j["table_rows"] = r.rows;
  if (r.missing_note) j["missing_row"] = *r.missing_note;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace cremona
