#pragma once
// MapDocument: a rational map as versioned JSON with exact coefficients.
//
//   {"schema": 1, "field": "q" | "gf:<p>", "variables": ["z0","z1","z2","z3"],
//    "components": [[[coeff, [e0,e1,e2,e3]], ...] x 4],
//    "provenance": {"family": ..., "seed": ..., "expected": {...}}}
//
// Coefficients are strings: integers, or "a/b" over Q.

#include <variant>

#include "cremona/report.hpp"

namespace cremona {

inline constexpr int kDocumentSchema = 1;

struct DocumentError : std::runtime_error {
  std::string where;  // byte offset or JSON pointer
  DocumentError(std::string w, const std::string& msg) : std::runtime_error(w + ": " + msg), where(std::move(w)) {}
};

using AnyMap = std::variant<RationalMap<Qq>, RationalMap<Zp>>;

struct MapDocument {
  AnyMap map;
  Json provenance;

  std::string field() const {
    return std::visit([](auto& m) { return m.field().descriptor(); }, map);
  }
};

inline std::variant<Qq, Zp> parse_field(const std::string& s, const std::string& where = "/field") {
  if (s == "q") return Qq{};
  if (s.rfind("gf:", 0) == 0 && s.size() > 3 && s.size() <= 13 &&
      std::all_of(s.begin() + 3, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    uint64_t p = std::stoull(s.substr(3));
    if (p <= 1000 || p >= (1ULL << 31)) throw DocumentError(where, "prime must lie in (1000, 2^31)");
    if (!is_prime_u64(p)) throw DocumentError(where, std::to_string(p) + " is not prime");
    return Zp(p);
  }
  throw DocumentError(where, "field must be \"q\" or \"gf:<p>\"");
}

template <class F>
Json components_json(const RationalMap<F>& m) {
  const F& f = m.field();
  Json comps = Json::array();
  for (auto& c : m.components()) {
    Json terms = Json::array();
    for (auto& t : c.terms()) {
      std::array<int, 4> e{};
      for (int i = 0; i < 4; ++i) e[i] = mono::get(t.m, i);
      terms.push_back(Json::array({f.to_string(t.c), e}));
    }
    comps.push_back(terms);
  }
  return comps;
}

template <class F>
Json document_json(const RationalMap<F>& m, const Json& provenance = Json()) {
  Json j{{"schema", kDocumentSchema},
         {"field", m.field().descriptor()},
         {"variables", {"z0", "z1", "z2", "z3"}},
         {"components", components_json(m)}};
  if (!provenance.is_null()) j["provenance"] = provenance;
  return j;
}

inline Json provenance_json(const FamilySpec& s) {
  return Json{{"family", s.label}, {"seed", s.seed}, {"expected", expectation_json(s.expected)}};
}

namespace detail {

inline mpq_class parse_coeff(const Json& c, const std::string& where) {
  if (!c.is_string()) throw DocumentError(where, "coefficient must be a string");
  const std::string s = c.get<std::string>();
  auto digits = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + i, t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
    throw DocumentError(where, "malformed coefficient '" + s + "'");
  mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
  if (q.get_den() == 0) throw DocumentError(where, "zero denominator");
  q.canonicalize();
  return q;
}

template <class F>
RationalMap<F> parse_components(const F& f, const Json& comps) {
  if (!comps.is_array() || comps.size() != 4) throw DocumentError("/components", "expected an array of 4 polynomials");
  std::vector<Polynomial<F>> polys;
  for (size_t i = 0; i < 4; ++i) {
    std::string wi = "/components/" + std::to_string(i);
    if (!comps[i].is_array()) throw DocumentError(wi, "expected a term list");
    std::vector<typename Polynomial<F>::Term> ts;
    for (size_t k = 0; k < comps[i].size(); ++k) {
      std::string wk = wi + "/" + std::to_string(k);
      const Json& t = comps[i][k];
      if (!t.is_array() || t.size() != 2) throw DocumentError(wk, "term must be [coeff, exponents]");
      typename F::Elem c{};
      try {
        c = f.from_mpq(parse_coeff(t[0], wk + "/0"));
      } catch (const BadPrime& e) {
        throw DocumentError(wk + "/0", e.what());
      }
      const Json& e = t[1];
      if (!e.is_array() || e.size() != 4) throw DocumentError(wk + "/1", "exponents must be 4 integers");
      Exp m = 0;
      int deg = 0;
      for (int v = 0; v < 4; ++v) {
        if (!e[v].is_number_integer() || e[v].get<long long>() < 0 || e[v].get<long long>() > 3)
          throw DocumentError(wk + "/1/" + std::to_string(v), "exponent must be an integer in [0,3]");
        m = mono::set(m, v, e[v].get<int>());
        deg += e[v].get<int>();
      }
      if (deg != 3) throw DocumentError(wk + "/1", "term of degree " + std::to_string(deg) + ", cubics required");
      ts.push_back({m, c});
    }
    auto p = Polynomial<F>::from_terms(f, 4, std::move(ts));
    if (p.is_zero()) throw DocumentError(wi, "zero component");
    polys.push_back(p);
  }
  try {
    return RationalMap<F>::cubic(polys);
  } catch (const std::exception& e) {
    throw DocumentError("/components", e.what());
  }
}

}  // namespace detail

inline MapDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), "JSON syntax error");
  }
  if (!j.is_object()) throw DocumentError("/", "document must be an object");
  if (!j.contains("schema") || j["schema"] != kDocumentSchema)
    throw DocumentError("/schema", "unsupported schema (expected " + std::to_string(kDocumentSchema) + ")");
  if (!j.contains("field") || !j["field"].is_string()) throw DocumentError("/field", "missing field descriptor");
  if (j.contains("variables") && j["variables"] != Json{"z0", "z1", "z2", "z3"})
    throw DocumentError("/variables", "variables must be z0..z3");
  if (!j.contains("components")) throw DocumentError("/components", "missing");
  auto field = parse_field(j["field"].get<std::string>());
  Json prov = j.contains("provenance") ? j["provenance"] : Json();
  return std::visit([&](auto& f) -> MapDocument { return {detail::parse_components(f, j["components"]), prov}; }, field);
}

namespace detail {

// Arrays nested at most two deep, e.g. a term ["3/2", [1,0,2,0]].
inline bool flat(const Json& j, int depth = 2) {
  if (!j.is_array()) return j.is_primitive();
  return depth > 0 && std::all_of(j.begin(), j.end(), [&](const Json& x) { return flat(x, depth - 1); });
}

// Like dump(2), but arrays of scalars (terms, exponents, points) stay on one line.
inline void render_to(const Json& j, int indent, std::string& out) {
  std::string pad(static_cast<size_t>(indent + 2), ' ');
  if (flat(j) || j.empty()) {
    out += j.dump();
  } else if (j.is_array()) {
    out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      out += pad;
      render_to(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<size_t>(indent), ' ') + "]";
  } else {
    out += "{\n";
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      render_to(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<size_t>(indent), ' ') + "}";
  }
}

}  // namespace detail

inline std::string render(const Json& j) {
  std::string out;
  detail::render_to(j, 0, out);
  return out + "\n";
}

}  // namespace cremona
