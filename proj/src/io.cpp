#include "stringy/io.hpp"

#include <fstream>
#include <sstream>

namespace stringy {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
  fail(ErrorKind::Validation, "input " + where + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

long as_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    Rat r = parse_rat(j.get<std::string>());
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  }
  schema(where, "expected an integer");
}

Int as_bigint(const json& j, const std::string& where) {
  Rat r = rat_from_json(j);
  if (r.get_den() != 1) schema(where, "expected an integer, got " + to_string(r));
  return r.get_num();
}

IntVec int_vec(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  IntVec v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(as_bigint(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RatVec rat_vec(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  RatVec v;
  for (size_t i = 0; i < j.size(); ++i) {
    try {
      v.push_back(rat_from_json(j[i]));
    } catch (const Error& e) {
      schema(where + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return v;
}

std::vector<int> index_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of simple-root indices");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    long k = as_int(j[i], where);
    if (k < 1) schema(where, "simple-root indices start at 1");
    out.push_back((int)k - 1);
  }
  return out;
}

std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// locate a string literal for error reporting
std::string locate(const std::string& text, const std::string& needle) {
  auto pos = text.find("\"" + needle + "\"");
  if (pos == std::string::npos) return "";
  auto [l, c] = line_col(text, pos);
  return " at line " + std::to_string(l) + ", column " + std::to_string(c);
}

void check_rationals(const json& j, const std::string& text) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.find('/') != std::string::npos) {
      try {
        parse_rat(s);
      } catch (const Error& e) {
        fail(ErrorKind::Validation, std::string("parse error") + locate(text, s) + ": " + e.what());
      }
    }
  } else if (j.is_structured()) {
    for (auto& x : j) check_rationals(x, text);
  }
}

}  // namespace

std::string rat_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail(ErrorKind::Validation, "expected a rational as an integer or a \"p/q\" string");
}

DivisorialFan parse_fan(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    auto cut = what.find(": ", what.find("column"));
    if (cut != std::string::npos) what = what.substr(cut + 2);
    fail(ErrorKind::Validation, "parse error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what);
  }
  check_rationals(j, text);
  DivisorialFan f;
  f.n = (int)as_int(need(j, "lattice_rank", "root"), "lattice_rank");
  auto& cv = need(j, "curve", "root");
  f.curve.genus = (int)as_int(need(cv, "genus", "curve"), "curve.genus");
  if (cv.contains("points")) {
    if (!cv["points"].is_array()) schema("curve.points", "expected an array of labels");
    for (auto& p : cv["points"]) {
      if (!p.is_string()) schema("curve.points", "labels must be strings");
      f.curve.points.push_back(p.get<std::string>());
    }
  }
  std::vector<std::vector<int>> colors_per_divisor;
  if (j.contains("group")) {
    auto& g = j["group"];
    std::string kind = need(g, "kind", "group").get<std::string>();
    if (kind == "horospherical") {
      std::vector<DynkinComponent> comps;
      auto& rs = need(g, "root_system", "group");
      if (!rs.is_array()) schema("group.root_system", "expected an array");
      for (auto& c : rs) {
        std::string t = need(c, "type", "group.root_system").get<std::string>();
        if (t.size() != 1 || std::string("ABCDEFG").find(t[0]) == std::string::npos)
          schema("group.root_system", "unknown type '" + t + "'");
        comps.push_back({t[0], (int)as_int(need(c, "rank", "group.root_system"), "group.root_system.rank")});
      }
      int tr = g.contains("torus_rank") ? (int)as_int(g["torus_rank"], "group.torus_rank") : 0;
      HoroPair h;
      try {
        h.rs = RootSystem(comps, tr);
      } catch (const Error& e) {
        schema("group.root_system", e.what());
      }
      if (g.contains("I")) h.I = index_list(g["I"], "group.I");
      auto& mb = need(g, "M_basis", "group");
      if (!mb.is_array()) schema("group.M_basis", "expected an array of rows");
      for (size_t i = 0; i < mb.size(); ++i) h.M_basis.push_back(int_vec(mb[i], "group.M_basis"));
      if (g.contains("colors_per_divisor")) {
        auto& cp = g["colors_per_divisor"];
        if (!cp.is_array()) schema("group.colors_per_divisor", "expected an array of arrays");
        for (auto& c : cp) colors_per_divisor.push_back(index_list(c, "group.colors_per_divisor"));
      }
      f.horo = h;
    } else if (kind != "torus") {
      schema("group.kind", "expected \"torus\" or \"horospherical\"");
    }
  }
  auto& ds = need(j, "divisors", "root");
  if (!ds.is_array()) schema("divisors", "expected an array");
  for (size_t i = 0; i < ds.size(); ++i) {
    std::string where = "divisors[" + std::to_string(i) + "]";
    auto& d = ds[i];
    PolyDivisor pd;
    std::vector<IntVec> gens;
    auto& t = need(d, "tail", where);
    if (!t.is_array()) schema(where + ".tail", "expected an array of generators");
    for (auto& r : t) {
      IntVec v = int_vec(r, where + ".tail");
      if ((int)v.size() != f.n) schema(where + ".tail", "generator of wrong length");
      gens.push_back(v);
    }
    pd.tail = Cone(f.n, gens);
    if (d.contains("locus")) {
      auto& l = d["locus"];
      if (l.contains("affine_removed")) {
        pd.projective = false;
        for (auto& y : l["affine_removed"]) {
          if (!y.is_string()) schema(where + ".locus", "labels must be strings");
          pd.removed.push_back(y.get<std::string>());
        }
      } else if (!l.contains("projective")) {
        schema(where + ".locus", "expected {\"projective\": true} or {\"affine_removed\": [...]}");
      }
    }
    if (d.contains("coefficients")) {
      auto& cs = d["coefficients"];
      if (!cs.is_object()) schema(where + ".coefficients", "expected an object keyed by point label");
      for (auto& [y, c] : cs.items()) {
        std::string w = where + ".coefficients." + y;
        std::vector<RatVec> verts;
        auto& vs = need(c, "vertices", w);
        if (!vs.is_array() || vs.empty()) schema(w, "expected a non-empty vertex list");
        for (auto& v : vs) {
          RatVec p = rat_vec(v, w + ".vertices");
          if ((int)p.size() != f.n) schema(w, "vertex of wrong length");
          verts.push_back(p);
        }
        try {
          pd.coeff[y] = Polyhedron(verts, pd.tail);
        } catch (const Error& e) {
          schema(w, e.what());
        }
      }
    }
    if (d.contains("colors"))
      pd.colors = index_list(d["colors"], where + ".colors");
    else if (i < colors_per_divisor.size())
      pd.colors = colors_per_divisor[i];
    f.divisors.push_back(pd);
  }
  return f;
}

DivisorialFan load_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Validation, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fan(ss.str());
}

json series_json(const LatticeSeries& s) {
  json num = json::array(), den = json::array();
  for (auto& [e, c] : s.num) num.push_back({c.get_str(), e});
  for (auto& [k, n] : s.den)
    for (int i = 0; i < n; ++i) den.push_back(k);
  return {{"numerator", num}, {"denominator", den}, {"m", s.m}};
}

LatticeSeries series_from_json(const json& j) {
  LatticeSeries s;
  s.m = j.at("m").get<long>();
  for (auto& t : j.at("numerator")) s.num[t.at(1).get<long>()] += as_bigint(t.at(0), "numerator");
  poly_prune(s.num);
  for (auto& k : j.at("denominator")) s.den[k.get<long>()] += 1;
  return s;
}

json motive_json(const MotiveExpr& e) {
  json num = json::array(), den = json::array();
  for (auto& [mo, c] : e.num) num.push_back({c.get_str(), mo.a, mo.b, mo.j});
  for (auto& [k, n] : e.den)
    for (int i = 0; i < n; ++i) den.push_back(k);
  return {{"numerator", num}, {"denominator", den}, {"m", e.m}};
}

MotiveExpr motive_from_json(const json& j) {
  MotiveExpr e;
  e.m = j.at("m").get<long>();
  for (auto& t : j.at("numerator"))
    e.num[{t.at(1).get<long>(), t.at(2).get<long>(), t.at(3).get<long>()}] += as_bigint(t.at(0), "numerator");
  for (auto& k : j.at("denominator")) e.den[k.get<long>()] += 1;
  return e;
}

std::string latex_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string s = r < 0 ? "-" : "";
  return s + "\\frac{" + Int(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

namespace {

std::string latex_power(long e, long m) {
  // L^{e/m}
  Rat r(e, m);
  r.canonicalize();
  if (r == 0) return "";
  if (r == 1) return "\\mathbb{L}";
  std::string ex = r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
  return "\\mathbb{L}^{" + ex + "}";
}

std::string latex_poly(const Poly1& p, long m) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [e, c] : p) {
    Int a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    std::string pw = latex_power(-e, m);
    if (a != 1 || pw.empty()) s += a.get_str();
    s += pw;
  }
  return s;
}

std::string latex_den(const std::map<long, int>& den, long m) {
  std::string s;
  for (auto it = den.rbegin(); it != den.rend(); ++it) {
    s += "(1 - " + latex_power(-it->first, m) + ")";
    if (it->second > 1) s += "^{" + std::to_string(it->second) + "}";
  }
  return s;
}

}  // namespace

std::string latex_series(const LatticeSeries& s) {
  if (s.den.empty()) return latex_poly(s.num, s.m);
  return "\\frac{" + latex_poly(s.num, s.m) + "}{" + latex_den(s.den, s.m) + "}";
}

std::string latex_motive(const MotiveExpr& e) {
  if (auto s = e.as_series()) return latex_series(*s);
  std::map<std::pair<long, long>, Poly1> groups;
  for (auto& [p, c] : e.num) groups[{p.a, p.b}][p.j] = c;
  std::string out;
  for (auto& [ab, poly] : groups) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (ab.first) mono += "u" + (ab.first > 1 ? "^{" + std::to_string(ab.first) + "}" : std::string());
    if (ab.second) mono += "v" + (ab.second > 1 ? "^{" + std::to_string(ab.second) + "}" : std::string());
    out += mono + "\\left(" + latex_poly(poly, e.m) + "\\right)";
  }
  if (out.empty()) out = "0";
  if (e.den.empty()) return out;
  return "\\frac{" + out + "}{" + latex_den(e.den, e.m) + "}";
}

}  // namespace stringy
