#pragma once
// Seeded scans over the constructors: one record per (family, seed, prime),
// a histogram of (d, p2, label), and the emptiness check on (d, p2).

#include <atomic>
#include <thread>
#include <tuple>

#include "cremona/atlas.hpp"

namespace cremona {

// Genus values p_a(C2) that admit birational cubic maps of bidegree (3,d).
inline bool genus_pair_allowed(int d, long long p2) {
  switch (d) {
    case 3: return p2 == 3 || p2 == 4;
    case 4: return p2 == 1 || p2 == 2;
    case 5: return p2 >= -1 && p2 <= 1;
    default: return false;
  }
}

// "all", "ruled", "3-3"/"3-4"/"3-5" (by bidegree) or explicit labels,
// comma separated.
inline std::vector<std::string> expand_families(const std::string& spec) {
  std::vector<std::string> out;
  auto add = [&](const std::string& l) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  };
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t e = spec.find(',', pos);
    std::string tok = spec.substr(pos, e == std::string::npos ? std::string::npos : e - pos);
    pos = e == std::string::npos ? spec.size() + 1 : e + 1;
    if (tok.empty()) continue;
    if (tok == "all") {
      for (auto& l : family_labels()) add(l);
    } else if (tok == "ruled") {
      for (int d = 2; d <= 5; ++d) add(ruled_label(d));
    } else if (tok.size() == 3 && tok.rfind("3-", 0) == 0) {
      int d = tok[2] - '0';
      bool any = false;
      for (auto& l : family_labels())
        if (expectation_for(l).bidegree.second == d) add(l), any = true;
      if (!any) throw std::invalid_argument("no constructors of bidegree (3," + tok.substr(2) + ")");
    } else if (std::find(family_labels().begin(), family_labels().end(), tok) != family_labels().end()) {
      add(tok);
    } else {
      throw std::invalid_argument("unknown family '" + tok + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty family list");
  return out;
}

inline uint32_t scan_prime(const std::string& family, uint64_t seed, int attempt) {
  Rng r = Rng(seed).split("scan-prime").split(family).split(static_cast<uint64_t>(attempt));
  return random_prime(r);
}

inline bool meets_expectation(const FullAnalysis& r, const Expectation& e) {
  const auto& a = r.a;
  return r.birational() && a.bidegree == e.bidegree && a.C2().degree == e.deg_c2 && (!e.pa_c2 || a.C2().p_a == *e.pa_c2) &&
         r.hudson && r.hudson->counts == e.counts && r.cls && r.cls->label == e.label;
}

// Construct and analyze one sample. Analysis failures attributed to the
// prime are retried with a fresh prime.
inline Json scan_record(const std::string& family, uint64_t seed, std::optional<uint32_t> pinned) {
  uint32_t requested = pinned ? *pinned : scan_prime(family, seed, 0);
  Json rec{{"family", family}, {"seed", seed}, {"prime", requested}};
  std::string last;
  for (int attempt = 0; attempt < 3; ++attempt) {
    uint32_t p = attempt == 0 ? requested : scan_prime(family, seed, attempt);
    try {
      if (p <= 1000 || !is_prime_u64(p)) throw BadPrime("prime " + std::to_string(p) + " rejected");
      Zp f(p);
      auto c = construct(family, seed, f);
      auto r = analyze_full(c.map, seed);
      const auto& a = r.a;
      if (p != requested) rec["analysis_prime"] = p;
      rec["bidegree"] = {a.bidegree.first, a.bidegree.second};
      rec["deg_c2"] = a.C2().degree;
      rec["p2"] = a.C2().p_a;
      rec["deg1part"] = a.deg1part;
      rec["birational"] = verdict_name(a.birational.verdict);
      rec["certificate"] = a.certificate;
      rec["genus"] = a.genus;
      rec["ruled"] = a.ruled.ruled;
      rec["counts"] = r.hudson ? Json(r.hudson->counts.as_array()) : Json();
      rec["label"] = r.cls ? Json(r.cls->label) : Json();
      rec["component"] = r.cls ? Json(r.cls->component) : Json();
      rec["rows"] = r.rows;
      rec["ok"] = meets_expectation(r, c.spec.expected);
      if (!r.cls_error.empty()) rec["error"] = r.cls_error;
      return rec;
    } catch (const ConstructionError& e) {
      rec["ok"] = false;
      rec["error"] = std::string("construction: ") + e.what();
      return rec;
    } catch (const BadPrime& e) {
      last = e.what();
    } catch (const AnalysisError& e) {
      last = e.what();
    } catch (const BudgetExceeded& e) {
      rec["ok"] = false;
      rec["error"] = std::string("budget: ") + e.what();
      return rec;
    }
  }
  rec["ok"] = false;
  rec["error"] = "analysis: " + last;
  return rec;
}

struct ScanOptions {
  std::vector<std::string> families;
  int count = 10;  // total samples, families taken round-robin
  uint64_t seed_start = 1;
  std::optional<uint32_t> prime;
  int jobs = 1;
};

struct ScanSummary {
  int samples = 0;
  int skipped = 0;  // already in the atlas
  int failures = 0;
  int emptiness_violations = 0;
  std::map<std::tuple<int, long long, std::string>, int> histogram;
  std::vector<Json> records;

  double failure_rate() const { return samples ? static_cast<double>(failures) / samples : 0.0; }

  Json to_json() const {
    Json h = Json::array();
    for (auto& [k, n] : histogram) h.push_back(Json{{"d", std::get<0>(k)}, {"p2", std::get<1>(k)}, {"label", std::get<2>(k)}, {"count", n}});
    return Json{{"samples", samples},     {"skipped", skipped},     {"failures", failures},
                {"emptiness_violations", emptiness_violations}, {"histogram", h}};
  }
};

inline ScanSummary run_scan(const ScanOptions& opt, Atlas* atlas = nullptr) {
  struct Job {
    std::string family;
    uint64_t seed;
  };
  std::vector<Job> jobs;
  ScanSummary s;
  for (int i = 0; i < opt.count; ++i) {
    Job j{opt.families[static_cast<size_t>(i) % opt.families.size()], opt.seed_start + static_cast<uint64_t>(i)};
    uint32_t p = opt.prime ? *opt.prime : scan_prime(j.family, j.seed, 0);
    if (atlas && atlas->contains(Atlas::key(j.family, j.seed, p))) {
      ++s.skipped;
      continue;
    }
    jobs.push_back(j);
  }
  std::vector<Json> out(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < jobs.size();) {
      out[i] = scan_record(jobs[i].family, jobs[i].seed, opt.prime);
      if (atlas) atlas->append(out[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, opt.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& r : out) {
    ++s.samples;
    if (!r.value("ok", false)) ++s.failures;
    if (r.contains("p2")) {
      int d = r["bidegree"][1].get<int>();
      long long p2 = r["p2"].get<long long>();
      if (d >= 3 && !genus_pair_allowed(d, p2)) ++s.emptiness_violations;
      s.histogram[{d, p2, r["label"].is_string() ? r["label"].get<std::string>() : "?"}]++;
    }
  }
  s.records = std::move(out);
  return s;
}

}  // namespace cremona
