#include "stringy/divfan.hpp"

#include <algorithm>
#include <functional>

namespace stringy {

namespace {

Polyhedron trivial(const Cone& tail) { return Polyhedron({RatVec(tail.ambient())}, tail); }

bool contains_str(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

bool PolyDivisor::in_locus(const std::string& y) const { return projective || !contains_str(removed, y); }

Polyhedron PolyDivisor::delta(const std::string& y) const {
  auto it = coeff.find(y);
  return it == coeff.end() ? trivial(tail) : it->second;
}

bool PolyDivisor::special_at(const std::string& y) const {
  if (!in_locus(y)) return true;
  auto it = coeff.find(y);
  return it != coeff.end() && !(it->second == trivial(tail));
}

Cone PolyDivisor::cayley(const std::string& y) const { return delta(y).homogenized(); }
Cone PolyDivisor::cayley_generic() const { return trivial(tail).homogenized(); }

IntVec DivisorialFan::color_image(int alpha) const {
  if (!horo) fail(ErrorKind::Validation, "colors need a horospherical group");
  return horo->color_image(alpha);
}

Int DivisorialFan::a(int alpha) const { return horo->a(alpha); }

std::vector<int> DivisorialFan::color_domain() const {
  if (!horo) return {};
  return horo->colors();
}

Fan DivisorialFan::tail_fan() const {
  Fan f{n, {}};
  std::vector<Cone> t;
  for (auto& d : divisors) t.push_back(d.tail);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (size_t i = 0; i < t.size(); ++i) {
    bool sub = false;
    for (size_t j = 0; j < t.size(); ++j)
      if (i != j && t[i].dim() < t[j].dim() && t[i].is_face_of(t[j])) sub = true;
    if (!sub) f.maximal.push_back(t[i]);
  }
  return f;
}

std::vector<std::string> DivisorialFan::points_in_some_locus() const {
  std::vector<std::string> out;
  for (auto& y : curve.points)
    for (auto& d : divisors)
      if (d.in_locus(y)) {
        out.push_back(y);
        break;
      }
  return out;
}

std::vector<std::string> DivisorialFan::special_points() const {
  std::vector<std::string> out;
  for (auto& y : curve.points)
    for (auto& d : divisors)
      if (d.special_at(y)) {
        out.push_back(y);
        break;
      }
  return out;
}

MotiveExpr DivisorialFan::gh_class() const { return horo ? horo->gh_class() : torus_class(n); }

Int DivisorialFan::weyl_order() const { return horo ? horo->rs.weyl_order() : Int(1); }

Polyhedron degree(const PolyDivisor& d, int n) {
  (void)n;
  Polyhedron p = trivial(d.tail);
  for (auto& [y, delta] : d.coeff) p = p.minkowski(delta);
  return p;
}

std::map<std::string, Rat> evaluate(const PolyDivisor& d, const Curve& c, const RatVec& m) {
  for (auto& r : d.tail.rays())
    if (dot(m, r) < 0) fail(ErrorKind::Validation, "m is not in the dual of the tail cone");
  std::map<std::string, Rat> out;
  for (auto& y : c.points)
    if (d.in_locus(y)) out[y] = *d.delta(y).min_pairing(m);
  return out;
}

Properness is_proper(const PolyDivisor& d, const Curve& c, int n) {
  Properness p;
  if (!d.projective) return p;
  Polyhedron deg = degree(d, n);
  for (auto& v : deg.vertices())
    if (!d.tail.contains(v)) {
      p.proper = false;
      p.reason = "degree not contained in tail";
      return p;
    }
  if (deg.contains(RatVec(n))) {
    p.proper = false;
    p.reason = "degree not strictly contained";
    return p;
  }
  if (c.genus >= 1) {
    bool boundary = d.tail.dim() < n;
    for (auto& v : deg.vertices()) {
      IntVec w = is_zero(v) ? IntVec(n) : primitive(v);
      if (is_zero(v) || !d.tail.relint_contains(w)) boundary = true;
    }
    if (boundary) {
      p.conditional = true;
      p.reason = "conditionally proper (degree-zero check passed; principality assumed)";
    }
  }
  return p;
}

RayKind ray_kind(const DivisorialFan& f, const PolyDivisor& d, const IntVec& rho) {
  if (d.projective && degree(d, f.n).ray_meets(rho)) return RayKind::MeetsDegree;
  for (int a : d.colors) {
    IntVec img = f.color_image(a);
    if (!is_zero(img) && primitive(img) == rho) return RayKind::Colored;
  }
  return RayKind::Free;
}

std::vector<IntVec> free_rays(const DivisorialFan& f, const PolyDivisor& d) {
  std::vector<IntVec> out;
  for (auto& r : d.tail.rays())
    if (ray_kind(f, d, r) == RayKind::Free) out.push_back(r);
  return out;
}

std::optional<PolyDivisor> intersect(const PolyDivisor& a, const PolyDivisor& b, const Curve& c) {
  PolyDivisor r;
  r.tail = a.tail.intersect(b.tail);
  r.projective = a.projective && b.projective;
  for (auto& y : a.removed)
    if (!contains_str(r.removed, y)) r.removed.push_back(y);
  for (auto& y : b.removed)
    if (!contains_str(r.removed, y)) r.removed.push_back(y);
  for (int x : a.colors)
    if (std::find(b.colors.begin(), b.colors.end(), x) != b.colors.end()) r.colors.push_back(x);
  for (auto& y : c.points) {
    if (!a.in_locus(y) || !b.in_locus(y)) continue;
    auto i = a.delta(y).intersect(b.delta(y));
    if (!i) {
      r.projective = false;
      r.removed.push_back(y);
      continue;
    }
    if (!(*i == trivial(r.tail))) r.coeff[y] = *i;
  }
  if (!r.projective && r.removed.empty()) return std::nullopt;
  return r;
}

ValidationReport validate_fan(const DivisorialFan& f) {
  ValidationReport rep;
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
  if (f.n < 1) bad("lattice rank must be positive");
  if (f.curve.genus < 0) bad("genus must be non-negative");
  std::set<std::string> seen;
  for (auto& y : f.curve.points) {
    if (y == kGeneric) bad("point label 'generic' is reserved");
    if (!seen.insert(y).second) bad("duplicate point label '" + y + "'");
  }
  if (f.horo) {
    try {
      f.horo->validate();
    } catch (const Error& e) {
      bad(e.what());
    }
    if (f.horo->n() != f.n) bad("M_basis rank differs from lattice_rank");
  }
  if (f.divisors.empty()) bad("no divisors");
  if (!rep.ok()) return rep;
  auto dom = f.color_domain();
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    auto& d = f.divisors[i];
    std::string tag = "divisor " + std::to_string(i) + ": ";
    if (d.tail.ambient() != f.n) {
      bad(tag + "tail of wrong dimension");
      continue;
    }
    if (!d.tail.pointed()) bad(tag + "tail cone not pointed");
    for (auto& [y, p] : d.coeff) {
      if (!seen.count(y)) bad(tag + "coefficient at unnamed point '" + y + "'");
      if (!(p.tail() == d.tail)) bad(tag + "coefficient at '" + y + "' has a different tail");
      if (!d.in_locus(y)) bad(tag + "coefficient at removed point '" + y + "'");
    }
    for (auto& y : d.removed)
      if (!seen.count(y)) bad(tag + "removed point '" + y + "' is not named");
    for (int a : d.colors) {
      if (std::find(dom.begin(), dom.end(), a) == dom.end()) {
        bad(tag + "color " + std::to_string(a + 1) + " is not in the color domain");
        continue;
      }
      IntVec img = f.color_image(a);
      if (is_zero(img)) bad(tag + "color " + std::to_string(a + 1) + " maps to 0");
      else if (!d.tail.contains(img)) bad(tag + "color " + std::to_string(a + 1) + " image not in tail");
    }
    if (!rep.ok()) continue;
    auto pr = is_proper(d, f.curve, f.n);
    if (!pr.proper) bad(tag + pr.reason);
    if (pr.conditional) rep.assumptions.push_back(tag + pr.reason);
  }
  if (!rep.ok()) return rep;
  for (size_t i = 0; i < f.divisors.size(); ++i)
    for (size_t j = i + 1; j < f.divisors.size(); ++j) {
      auto& a = f.divisors[i];
      auto& b = f.divisors[j];
      std::string tag = "divisors " + std::to_string(i) + "," + std::to_string(j) + ": ";
      Cone t = a.tail.intersect(b.tail);
      if (!t.is_face_of(a.tail) || !t.is_face_of(b.tail)) bad(tag + "tail intersection is not a common face");
      for (auto& y : f.curve.points) {
        if (!a.in_locus(y) || !b.in_locus(y)) continue;
        auto da = a.delta(y), db = b.delta(y);
        auto x = da.intersect(db);
        if (x && (!x->is_face_of(da) || !x->is_face_of(db)))
          bad(tag + "coefficient intersection at '" + y + "' is not a face: " + x->str());
      }
      auto restrict = [&](const PolyDivisor& d) {
        std::set<int> s;
        for (int c : d.colors)
          if (t.contains(f.color_image(c))) s.insert(c);
        return s;
      };
      std::set<int> common;
      for (int c : a.colors)
        if (std::find(b.colors.begin(), b.colors.end(), c) != b.colors.end()) common.insert(c);
      if (restrict(a) != common || restrict(b) != common) bad(tag + "colors do not agree on the common face");
      auto deg_cut = [&](const PolyDivisor& d) -> std::optional<Polyhedron> {
        if (!d.projective) return std::nullopt;
        return degree(d, f.n).intersect(Polyhedron({RatVec(f.n)}, t));
      };
      auto ga = deg_cut(a), gb = deg_cut(b);
      if (ga.has_value() != gb.has_value() || (ga && !(*ga == *gb)))
        bad(tag + "degrees differ on the common face");
      auto x = intersect(a, b, f.curve);
      if (x && x->projective) {
        auto pr = is_proper(*x, f.curve, f.n);
        if (!pr.proper) bad(tag + "intersection is not proper: " + pr.reason);
      }
    }
  return rep;
}

DivisorialFan discolor(const DivisorialFan& f) {
  DivisorialFan g = f;
  for (auto& d : g.divisors) d.colors.clear();
  return g;
}

DivisorialFan affinize(const DivisorialFan& f) {
  DivisorialFan g = f;
  g.divisors.clear();
  auto special = f.special_points();
  std::string spare;
  for (auto& y : f.curve.points)
    if (!contains_str(special, y)) {
      spare = y;
      break;
    }
  bool need_spare = false;
  for (auto& d : f.divisors) {
    if (!d.projective) {
      g.divisors.push_back(d);
      continue;
    }
    need_spare = need_spare || spare.empty();
    std::string p = spare.empty() ? "aff" : spare;
    PolyDivisor a = d;
    a.projective = false;
    a.removed = {p};
    g.divisors.push_back(a);
    PolyDivisor b = d;
    b.projective = false;
    b.coeff.clear();
    b.removed.clear();
    for (auto& [y, poly] : d.coeff)
      if (d.special_at(y)) b.removed.push_back(y);
    if (b.removed.empty()) b.removed = {p};
    g.divisors.push_back(b);
  }
  if (need_spare) {
    std::string p = "aff";
    while (contains_str(g.curve.points, p)) p += "'";
    for (auto& d : g.divisors)
      for (auto& y : d.removed)
        if (y == "aff") y = p;
    g.curve.points.push_back(p);
  }
  return g;
}

std::vector<HyperPoint> support_points(const DivisorialFan& f, int bound) {
  std::vector<HyperPoint> out;
  int n = f.n;
  Fan tf = f.tail_fan();
  IntVec nu(n);
  std::function<void(int, const std::function<void()>&)> box = [&](int i, const std::function<void()>& cb) {
    if (i == n) {
      cb();
      return;
    }
    for (int v = -bound; v <= bound; ++v) {
      nu[i] = v;
      box(i + 1, cb);
    }
  };
  box(0, [&] {
    if (tf.support_contains(nu)) out.push_back({kGeneric, nu, 0});
  });
  for (auto& y : f.points_in_some_locus()) {
    std::vector<Cone> cs;
    for (auto& d : f.divisors)
      if (d.in_locus(y)) cs.push_back(d.cayley(y));
    for (int l = 1; l <= bound; ++l)
      box(0, [&] {
        IntVec w(nu);
        w.push_back(l);
        for (auto& c : cs)
          if (c.contains(w)) {
            out.push_back({y, nu, l});
            break;
          }
      });
  }
  return out;
}

}  // namespace stringy
