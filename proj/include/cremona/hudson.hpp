#pragma once
// Local structure of Lambda_psi at special points, the Hudson invariant
// vector, Table VI matching and component classification.

#include <algorithm>
#include <array>
#include <map>
#include <fstream>
#include <sstream>
#include <string>

#include "cremona/cremona.hpp"

#ifndef CREMONA_DATA_DIR
#define CREMONA_DATA_DIR "data"
#endif

namespace cremona {

enum class PointTag { DoublePoint, Binode, DoubleContactPoint, ContactPoint, OsculationPoint, Ordinary };

inline const char* tag_name(PointTag t) {
  switch (t) {
    case PointTag::DoublePoint: return "DoublePoint";
    case PointTag::Binode: return "Binode";
    case PointTag::DoubleContactPoint: return "DoubleContactPoint";
    case PointTag::ContactPoint: return "ContactPoint";
    case PointTag::OsculationPoint: return "OsculationPoint";
    case PointTag::Ordinary: return "Ordinary";
  }
  return "?";
}

inline bool is_double_type(PointTag t) {
  return t == PointTag::DoublePoint || t == PointTag::Binode || t == PointTag::DoubleContactPoint;
}

template <class F>
struct PointType {
  PointTag tag = PointTag::Ordinary;
  bool base_point = false;
  int rank = -1;                             // generic rank of the quadratic part
  std::optional<Polynomial<F>> fixed_plane;  // binode plane, original coordinates
  bool contact_surface_degree_ok = false;
  bool needs_extension = false;
};

namespace detail {

// Invertible M whose last row is p, so that e3 * M = p.
template <class F>
Matrix<F> chart_at(const F& f, const Point<F>& p) {
  int j = 0;
  while (f.is_zero(p[j])) ++j;
  Matrix<F> M(f, 4, 4);
  int r = 0;
  for (int k = 0; k < 4; ++k)
    if (k != j) M.at(r++, k) = f.one();
  for (int k = 0; k < 4; ++k) M.at(3, k) = p[k];
  return M;
}

// Homogeneous part of degree k in z0..z2 of the expansion at z3 = 1.
template <class F>
Polynomial<F> jet(const Polynomial<F>& g, int k) {
  std::vector<typename Polynomial<F>::Term> ts;
  for (auto& t : g.terms())
    if (mono::degree(t.m) - mono::get(t.m, 3) == k) ts.push_back({mono::set(t.m, 3, 0), t.c});
  return Polynomial<F>::from_terms(g.field(), 3, std::move(ts));
}

template <class F>
Matrix<F> quadric_matrix(const Polynomial<F>& w) {
  const F& f = w.field();
  Matrix<F> A(f, 3, 3);
  for (auto& t : w.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < mono::get(t.m, i); ++e) idx.push_back(i);
    if (idx[0] == idx[1]) {
      A.at(idx[0], idx[0]) = f.add(t.c, t.c);
    } else {
      A.at(idx[0], idx[1]) = t.c;
      A.at(idx[1], idx[0]) = t.c;
    }
  }
  return A;
}

template <class F>
int quadric_rank(const Polynomial<F>& w) {
  if (w.is_zero()) return 0;
  return quadric_matrix(w).rank();
}

template <class F>
Polynomial<F> cross_form(const F& f, const std::vector<typename F::Elem>& a, const std::vector<typename F::Elem>& b) {
  std::vector<typename F::Elem> c{f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
                                  f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
  return linear_form(f, c);
}

// Linear factors of a ternary quadric of rank <= 2. nullopt when the factors
// are not defined over the field.
template <class F>
std::optional<std::vector<Polynomial<F>>> linear_factors(const Polynomial<F>& w) {
  using Elem = typename F::Elem;
  const F& f = w.field();
  auto A = quadric_matrix(w);
  int r = A.rank();
  if (r == 0 || r > 2) return std::vector<Polynomial<F>>{};
  if (r == 1) {
    for (int i = 0; i < 3; ++i) {
      std::vector<Elem> h{A.at(i, 0), A.at(i, 1), A.at(i, 2)};
      if (!f.is_zero(h[0]) || !f.is_zero(h[1]) || !f.is_zero(h[2])) return std::vector<Polynomial<F>>{linear_form(f, h)};
    }
  }
  auto v = A.kernel().at(0);
  std::vector<Elem> a(3, f.zero()), b(3, f.zero());
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int k = i + 1; k < 3 && !found; ++k) {
      std::vector<Elem> ei(3, f.zero()), ek(3, f.zero());
      ei[i] = f.one();
      ek[k] = f.one();
      Matrix<F> D = Matrix<F>::from_rows(f, {v, ei, ek});
      if (D.rank() == 3) {
        a = ei;
        b = ek;
        found = true;
      }
    }
  std::vector<Elem> ab(3);
  for (int i = 0; i < 3; ++i) ab[i] = f.add(a[i], b[i]);
  Elem al = w.evaluate_affine(a), ga = w.evaluate_affine(b);
  Elem be = f.sub(f.sub(w.evaluate_affine(ab), al), ga);
  std::vector<std::pair<Elem, Elem>> roots;  // (s : t)
  if (f.is_zero(al)) {
    roots.push_back({f.one(), f.zero()});
    if (!f.is_zero(be)) roots.push_back({ga, f.neg(be)});
  } else {
    Elem disc = f.sub(f.mul(be, be), f.mul(f.from_int(4), f.mul(al, ga)));
    auto r2 = f.sqrt(disc);
    if (!r2) return std::nullopt;
    Elem two_a = f.add(al, al);
    roots.push_back({f.add(f.neg(be), *r2), two_a});
    roots.push_back({f.sub(f.neg(be), *r2), two_a});
  }
  std::vector<Polynomial<F>> out;
  for (auto [s, t] : roots) {
    std::vector<Elem> x(3);
    for (int i = 0; i < 3; ++i) x[i] = f.add(f.mul(s, a[i]), f.mul(t, b[i]));
    auto h = cross_form(f, v, x).monic();
    bool dup = false;
    for (auto& o : out) dup = dup || o == h;
    if (!dup) out.push_back(h);
  }
  return out;
}

// True when the linear form h (3 variables) divides the quadric w.
template <class F>
bool divides_linear(const Polynomial<F>& h, const Polynomial<F>& w) {
  if (w.is_zero()) return true;
  const F& f = h.field();
  std::vector<typename F::Elem> c(3, f.zero());
  for (int i = 0; i < 3; ++i) c[i] = h.coeff(mono::var(i));
  Matrix<F> m = Matrix<F>::from_rows(f, {c});
  auto ker = m.kernel();
  auto u = ker[0], v = ker[1];
  std::vector<typename F::Elem> s(3);
  for (int i = 0; i < 3; ++i) s[i] = f.add(u[i], v[i]);
  return f.is_zero(w.evaluate_affine(u)) && f.is_zero(w.evaluate_affine(v)) && f.is_zero(w.evaluate_affine(s));
}

}  // namespace detail

// Decision tree on the 2-jets of Lambda at p (moved to (0:0:0:1)).
template <class F>
PointType<F> classify_point(const std::vector<Polynomial<F>>& lam, const Point<F>& p, Rng& rng) {
  const F& f = lam.at(0).field();
  auto M = detail::chart_at(f, p);
  std::vector<Polynomial<F>> g;
  for (auto& c : lam) g.push_back(c.linear_substitute(M));
  PointType<F> out;
  out.base_point = true;
  for (auto& c : g)
    if (!detail::jet(c, 0).is_zero()) out.base_point = false;
  if (!out.base_point) return out;

  std::vector<Polynomial<F>> j1, j2;
  for (auto& c : g) {
    j1.push_back(detail::jet(c, 1));
    j2.push_back(detail::jet(c, 2));
  }
  int L = FormSpace<F>::span(f, 3, 1, j1).dim();
  if (L >= 2) return out;
  if (L == 1) {
    auto s1 = FormSpace<F>::all(f, 3, 1), s2 = FormSpace<F>::all(f, 3, 2);
    std::vector<std::vector<typename F::Elem>> rows;
    for (size_t i = 0; i < g.size(); ++i) {
      auto a = s1.to_vector(j1[i]), b = s2.to_vector(j2[i]);
      a.insert(a.end(), b.begin(), b.end());
      rows.push_back(a);
    }
    int q2 = static_cast<int>(row_basis(f, rows, 9).size());
    out.tag = q2 == 1 ? PointTag::OsculationPoint : PointTag::ContactPoint;
    out.contact_surface_degree_ok = true;
    return out;
  }

  auto W = FormSpace<F>::span(f, 3, 2, j2);
  auto basis = W.polynomials();
  int generic_rank = 0;
  for (int t = 0; t < 3 && W.dim() > 0; ++t) generic_rank = std::max(generic_rank, detail::quadric_rank(W.random_element(rng)));
  out.rank = generic_rank;
  if (W.dim() <= 1) {
    out.tag = W.dim() == 1 ? PointTag::DoubleContactPoint : PointTag::DoublePoint;
    return out;
  }
  out.tag = PointTag::DoublePoint;
  if (generic_rank > 2) return out;
  auto w = W.random_element(rng);
  auto fac = detail::linear_factors(w);
  if (!fac) {
    out.needs_extension = !std::is_same_v<F, Zp>;
    return out;
  }
  for (auto& h : *fac) {
    bool common = true;
    for (auto& b : basis) common = common && detail::divides_linear(h, b);
    if (!common) continue;
    out.tag = PointTag::Binode;
    auto Minv = *M.inverse();
    out.fixed_plane = h.embed(4, 0).linear_substitute(Minv);
    return out;
  }
  return out;
}

struct TangentProfile {
  long long d1 = 0, d2 = 0;
  bool on_c2 = false;
};

template <class F>
TangentProfile tangent_profile(const CurveRecord<F>& C1, const CurveRecord<F>& C2, const Point<F>& p, Rng& rng) {
  TangentProfile t;
  if (!C1.empty()) t.d1 = multiplicity_at(C1.ideal, p, rng);
  if (!C2.empty()) t.d2 = multiplicity_at(C2.ideal, p, rng);
  t.on_c2 = !C2.empty() && C2.ideal.vanishes_at(p);
  return t;
}

// ------------------------------------------------------------------ candidates

struct Candidates {
  std::vector<Point<Zp>> singular;  // common singular points of Lambda
  std::vector<Point<Zp>> theta;     // isolated base points
  long long unresolved = 0;
  bool partial = false;
};

inline Candidates candidate_points(const RationalMap<Zp>& psi, const MapAnalysis<Zp>& a, Rng& rng) {
  const Zp& f = psi.field();
  Candidates c;
  if (!a.theta.is_unit()) {
    auto ps = rational_points(a.theta, rng);
    c.theta = ps.points;
    c.unresolved += ps.unresolved();
  }
  if (a.ruled.ruled) return c;
  std::vector<Polynomial<Zp>> parts;
  for (auto& comp : psi.components())
    for (auto& d : comp.partials())
      if (!d.is_zero()) parts.push_back(d);
  auto S = saturate_irrelevant(Ideal<Zp>(f, 4, parts), rng);
  const auto& h = S.hilbert();
  if (h.dimension > 0) {
    c.partial = true;
  } else if (h.dimension == 0) {
    auto ps = rational_points(S, rng);
    c.singular = ps.points;
    c.unresolved += ps.unresolved();
  }
  if (c.unresolved > 0) c.partial = true;
  return c;
}

// ------------------------------------------------------------------ F-curves

struct FCurve {
  long long degree = 0;
  long long p_a = 0;
  bool line = false;
};

// Lines of a curve defined over GF(p), found through pairs of points on two
// plane sections.
inline std::vector<Ideal<Zp>> lines_in_curve(const Ideal<Zp>& C, Rng& rng) {
  const Zp& f = C.field();
  std::vector<Ideal<Zp>> lines;
  auto section = [&](void) {
    auto H = random_linear_form(f, 4, rng);
    auto X = saturate_irrelevant(ideal_sum(C, Ideal<Zp>(f, 4, {H})), rng);
    return rational_points(X, rng).points;
  };
  auto P = section(), Q = section();
  for (auto& x : P)
    for (auto& y : Q) {
      if (same_point(f, x, y)) continue;
      auto l = line_through(f, x, y);
      if (!l.contains(C)) continue;
      bool dup = false;
      for (auto& o : lines) dup = dup || o.equals(l);
      if (!dup) lines.push_back(l);
    }
  return lines;
}

struct HudsonCounts {
  int dpc = 0, binode = 0, dp = 0, osculation = 0, contact = 0, ordinary = 0;
  bool operator==(const HudsonCounts&) const = default;
  std::array<int, 6> as_array() const { return {dpc, binode, dp, osculation, contact, ordinary}; }
  std::string to_string() const {
    std::string s = "(";
    auto a = as_array();
    for (int i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  }
};

struct PointReport {
  Point<Zp> point;
  PointType<Zp> type;
  bool in_theta = false;
  std::optional<TangentProfile> profile;
};

struct HudsonVector {
  std::pair<int, int> bidegree{3, 0};
  HudsonCounts counts;
  std::vector<FCurve> fcurves;
  int lines_found = 0;
  std::vector<PointReport> points;
  std::optional<bool> quadric_cone_at_binode;
  bool ruled = false;
  bool partial = false;
};

inline HudsonVector hudson_vector(const RationalMap<Zp>& psi, const MapAnalysis<Zp>& a, uint64_t seed) {
  const Zp& f = psi.field();
  Rng rng = Rng(seed).split("hudson");
  HudsonVector v;
  v.bidegree = a.bidegree;
  v.ruled = a.ruled.ruled;

  if (!a.C2().empty()) {
    Rng rl = rng.split("fcurves");
    auto lines = lines_in_curve(a.C2().ideal, rl);
    v.lines_found = static_cast<int>(lines.size());
    for (size_t i = 0; i < lines.size(); ++i) v.fcurves.push_back({1, 0, true});
    Ideal<Zp> rest = a.C2().ideal;
    if (!lines.empty()) {
      Ideal<Zp> L = lines[0];
      for (size_t i = 1; i < lines.size(); ++i) L = ideal_intersection(L, lines[i]);
      rest = saturate_irrelevant(ideal_quotient(a.C2().ideal, L), rl);
    }
    const auto& h = rest.hilbert();
    if (h.dimension == 1) v.fcurves.push_back({h.degree, h.p_a, false});
  }

  if (v.ruled) {
    v.counts.ordinary = static_cast<int>(a.theta_count);
    return v;
  }

  Rng rc = rng.split("candidates");
  auto cand = candidate_points(psi, a, rc);
  v.partial = cand.partial;
  Rng rp = rng.split("classify");
  const auto& lam = psi.components();
  for (auto& p : cand.singular) {
    PointReport r{p, classify_point(lam, p, rp)};
    r.profile = tangent_profile(a.C1(), a.C2(), p, rp);
    v.points.push_back(r);
  }
  for (auto& p : cand.theta) {
    bool seen = false;
    for (auto& r : v.points)
      if (same_point(f, r.point, p)) {
        r.in_theta = true;
        seen = true;
      }
    if (seen) continue;
    PointReport r{p, classify_point(lam, p, rp), true};
    v.points.push_back(r);
  }
  for (auto& r : v.points) {
    switch (r.type.tag) {
      case PointTag::DoubleContactPoint: ++v.counts.dpc; break;
      case PointTag::Binode: ++v.counts.binode; break;
      case PointTag::DoublePoint: ++v.counts.dp; break;
      case PointTag::OsculationPoint: ++v.counts.osculation; break;
      case PointTag::ContactPoint: ++v.counts.contact; break;
      case PointTag::Ordinary:
        if (r.in_theta) ++v.counts.ordinary;
        break;
    }
    if (r.type.needs_extension) v.partial = true;
  }

  // The quadric through C2 being a cone at the binode separates the two
  // binode strata of bidegree (3,4).
  if (a.bidegree.second == 4 && v.counts.binode == 1 && !a.C2().empty()) {
    std::vector<Polynomial<Zp>> low;
    for (auto& g : a.C2().ideal.gb().polynomials())
      if (g.degree() <= 2) low.push_back(g);
    auto Q2 = FormSpace<Zp>::degree_piece(f, 4, 2, low);
    if (Q2.dim() == 1) {
      auto Q = Q2.polynomials()[0];
      for (auto& r : v.points)
        if (r.type.tag == PointTag::Binode) {
          bool sing = true;
          for (auto& d : Q.partials()) sing = sing && f.is_zero(d.evaluate(r.point));
          v.quadric_cone_at_binode = sing;
        }
    }
  }
  return v;
}

// ------------------------------------------------------------------ Table VI

struct TableIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableRow {
  int number = 0;
  int d = 0;
  std::string degrees;
  std::array<std::string, 6> cells;
  HudsonCounts counts;
  std::string fcurves;
  std::string remarks;

  int line_tokens() const {
    std::string s = fcurves;
    const std::string small = "{\\small ";
    if (s.rfind(small, 0) == 0) s = s.substr(small.size());
    int n = 0;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t e = s.find(", ", pos);
      std::string tok = s.substr(pos, e == std::string::npos ? std::string::npos : e - pos);
      if (tok.rfind("$l", 0) == 0) ++n;
      if (e == std::string::npos) break;
      pos = e + 2;
    }
    return n;
  }
  bool double_line() const { return fcurves.find("$l^2$") != std::string::npos; }
};

// FNV-1a of the audited data file.
inline constexpr uint64_t kTableChecksum = 0xaf1660249d3b947dULL;

inline std::string default_table_path() { return std::string(CREMONA_DATA_DIR) + "/table_vi.tsv"; }

inline int parse_count_cell(const std::string& c, int row) {
  if (c == "$\\cdot$") return 0;
  if (c.size() >= 3 && c.front() == '$' && c.back() == '$') {
    std::string mid = c.substr(1, c.size() - 2);
    if (!mid.empty() && std::all_of(mid.begin(), mid.end(), ::isdigit)) return std::stoi(mid);
  }
  throw TableIntegrityError("row " + std::to_string(row) + ": bad count cell '" + c + "'");
}

inline std::vector<TableRow> parse_table(const std::string& text, bool check_sum = true) {
  if (check_sum && fnv1a(text) != kTableChecksum) throw TableIntegrityError("Table VI checksum mismatch");
  std::vector<TableRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    size_t pos = 0;
    for (;;) {
      size_t e = line.find('\t', pos);
      f.push_back(line.substr(pos, e == std::string::npos ? std::string::npos : e - pos));
      if (e == std::string::npos) break;
      pos = e + 1;
    }
    if (f.size() != 10) throw TableIntegrityError("wrong field count in line: " + line);
    TableRow r;
    try {
      r.number = std::stoi(f[0]);
    } catch (...) {
      throw TableIntegrityError("bad row number: " + f[0]);
    }
    r.degrees = f[1];
    auto dash = r.degrees.rfind("--$");
    if (r.degrees.rfind("$3$--$", 0) != 0 || dash == std::string::npos) throw TableIntegrityError("bad degrees cell: " + f[1]);
    r.d = std::stoi(r.degrees.substr(dash + 3));
    for (int i = 0; i < 6; ++i) r.cells[i] = f[2 + i];
    r.counts = {parse_count_cell(f[2], r.number), parse_count_cell(f[3], r.number), parse_count_cell(f[4], r.number),
                parse_count_cell(f[5], r.number), parse_count_cell(f[6], r.number), parse_count_cell(f[7], r.number)};
    r.fcurves = f[8];
    r.remarks = f[9];
    if (r.number != static_cast<int>(rows.size()) + 1) throw TableIntegrityError("rows out of sequence at " + f[0]);
    rows.push_back(r);
  }
  if (rows.size() != 75) throw TableIntegrityError("expected 75 rows, found " + std::to_string(rows.size()));
  return rows;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableIntegrityError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<TableRow> load_table(const std::string& path = default_table_path()) { return parse_table(read_file(path)); }

inline const std::vector<TableRow>& table_vi() {
  static const std::vector<TableRow> rows = load_table();
  return rows;
}

inline std::vector<TableRow> match_table(const HudsonVector& v, const std::vector<TableRow>& rows = table_vi()) {
  std::vector<TableRow> out;
  for (auto& r : rows) {
    if (r.d != v.bidegree.second || !(r.counts == v.counts)) continue;
    if (v.ruled != r.double_line()) continue;
    if (!v.ruled && v.lines_found > r.line_tokens()) continue;
    if (r.number == 8 && v.quadric_cone_at_binode == false) continue;
    out.push_back(r);
  }
  if (out.size() > 1) {
    std::vector<TableRow> exact;
    for (auto& r : out)
      if (r.line_tokens() == v.lines_found) exact.push_back(r);
    if (!exact.empty()) out = exact;
  }
  return out;
}

// ------------------------------------------------------------------ components

struct ComponentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Classification {
  std::string label;      // family or stratum, e.g. "E7.5"
  std::string component;  // irreducible component of Bir_{3,d}
};

inline std::string ruled_label(int d) { return "ruled_3_" + std::to_string(d); }

inline std::string component_of(const std::string& label) {
  if (label.rfind("ruled", 0) == 0) return label;
  static const std::map<std::string, std::string> m = {
      {"E2", "E2"},   {"E3", "E2"},   {"E3.5", "E2"}, {"E4", "E2"},   {"E6", "E6"},   {"E7", "E6"},
      {"E7.5", "E6"}, {"E8", "E6"},   {"E9", "E6"},   {"E10", "E6"},  {"E12", "E12"}, {"E14", "E12"},
      {"E19", "E12"}, {"E13", "E13"}, {"E23", "E23"}, {"E24", "E23"}};
  auto it = m.find(label);
  return it == m.end() ? "" : it->second;
}

// Families absent from Table VI.
inline std::optional<std::string> missing_row_note(const std::string& label) {
  if (label == "E3.5") return "E3.5 (binode with a biplane in the tangent plane of Q) has no Table VI row";
  if (label == "E7.5") return "E7.5 (binode with a biplane in the tangent plane of Q) has no Table VI row";
  return std::nullopt;
}

inline Classification classify_component(const MapAnalysis<Zp>& a, const HudsonVector& v) {
  int d = a.bidegree.second;
  long long p2 = a.C2().p_a;
  auto done = [](std::string l) { return Classification{l, component_of(l)}; };
  auto evidence = [&]() {
    return " [d=" + std::to_string(d) + ", p2=" + std::to_string(p2) + ", counts=" + v.counts.to_string() + "]";
  };
  if (a.ruled.ruled) return done(ruled_label(d));
  int doubles = v.counts.dp + v.counts.binode + v.counts.dpc;
  if (d == 3) {
    if (p2 == 3) return done("E2");
    if (p2 == 4) {
      if (v.counts.dpc) return done("E4");
      if (v.counts.binode) return done("E3.5");
      if (v.counts.dp) return done("E3");
      throw ComponentError("de Jonquieres stratum without a double point" + evidence());
    }
  } else if (d == 4) {
    if (p2 == 1) return done("E6");
    if (p2 == 2) {
      if (v.counts.dpc && v.counts.binode) return done("E10");
      if (v.counts.dpc) return done("E9");
      if (v.counts.binode) return done(v.quadric_cone_at_binode.value_or(true) ? "E8" : "E7.5");
      if (v.counts.dp) return done("E7");
      throw ComponentError("(3,4) map with p2 = 2 but no double point" + evidence());
    }
  } else if (d == 5) {
    if (p2 == -1) return done("E12");
    if (p2 == 0) {
      if (doubles) return done("E14");
      if (v.counts.contact) return done("E23");
      throw ComponentError("(3,5) map with p2 = 0 and neither a double point nor a contact point" + evidence());
    }
    if (p2 == 1) {
      if (doubles >= 2) return done("E19");
      if (doubles == 1 && v.counts.contact) return done("E24");
      if (doubles == 1) {
        for (auto& r : v.points)
          if (is_double_type(r.type.tag) && r.profile && r.profile->d1 == 3) return done("E13");
      }
      throw ComponentError("(3,5) map with p2 = 1 matches none of the three strata" + evidence());
    }
  }
  throw ComponentError("no birational family has bidegree (3," + std::to_string(d) + ") with p2 = " + std::to_string(p2) +
                       evidence());
}

}  // namespace cremona
