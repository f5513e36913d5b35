#include "stringy/stringy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stringy {

namespace {

IntVec lift(const IntVec& v, const Int& l) {
  IntVec w(v);
  w.push_back(l);
  return w;
}

RatVec lift(const RatVec& v, const Rat& l) {
  RatVec w(v);
  w.push_back(l);
  return w;
}

// range-for over a member of a temporary would dangle
template <class T>
T owned(const T& v) {
  return v;
}

IntVec head(const IntVec& w) { return IntVec(w.begin(), w.end() - 1); }

long to_long(const Int& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::Internal, "exponent does not fit in a machine integer");
  return z.get_si();
}

Rat ratio(const Int& a, const Int& b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}


// Named points in the locus of at least one divisor, in curve order.
std::vector<std::string> locus_points(const DivisorialFan& f) { return f.points_in_some_locus(); }

Rat weyl_ratio(const DivisorialFan& f, const std::vector<int>& J) {
  if (!f.horo) return 1;
  return ratio(f.horo->rs.weyl_order(), f.horo->rs.weyl_order(J));
}

std::vector<int> horo_I(const DivisorialFan& f) { return f.horo ? f.horo->I : std::vector<int>{}; }

std::vector<int> union_I(const DivisorialFan& f, const std::vector<int>& cols) {
  if (!f.horo) return {};
  return f.horo->I_with(cols);
}

MotiveExpr gamma_class(const DivisorialFan& f) {
  Int g = f.curve.genus;
  std::map<std::pair<long, long>, Int> p;
  p[{1, 1}] = 1;
  p[{1, 0}] = -g;
  p[{0, 1}] = -g;
  p[{0, 0}] = Int(1) - Int((long)f.curve.points.size());
  return MotiveExpr::from_uv(p);
}

Rat euler_gamma(const DivisorialFan& f) { return Rat(2 - 2 * f.curve.genus - (long)f.curve.points.size()); }

MotiveExpr L_minus_one() { return MotiveExpr::from_L_poly({-1, 1}); }

// lcm of denominators of a functional over a lattice basis of span(rays)
Int span_denominator(const RatVec& w, const std::vector<IntVec>& rays, int dim) {
  Int d = 1;
  if (rays.empty()) return d;
  for (auto& b : saturated_basis(rays, dim)) d = lcm(d, dot(w, b).get_den());
  return d;
}

std::vector<IntVec> cone_rays_with_up(const Cone& tail) {
  std::vector<IntVec> g;
  for (auto& r : tail.rays()) g.push_back(lift(r, 0));
  IntVec up(tail.ambient() + 1);
  up.back() = 1;
  g.push_back(up);
  return g;
}

std::string fmt_point(const std::string& y, const RatVec& p) { return "(" + y + ", " + to_string(p) + ")"; }

}  // namespace

KCGauge KCGauge::anonymous_gauge(const Curve& c) {
  KCGauge g;
  g.anonymous = 2 * c.genus - 2;
  return g;
}

KCGauge KCGauge::on_points(const Curve& c, const std::map<std::string, Int>& b) {
  Int s = 0;
  for (auto& [y, v] : b) {
    if (std::find(c.points.begin(), c.points.end(), y) == c.points.end())
      fail(ErrorKind::Validation, "K_C gauge uses unnamed point '" + y + "'");
    s += v;
  }
  if (s != 2 * c.genus - 2) fail(ErrorKind::Validation, "K_C gauge has degree " + to_string(s) + ", expected 2g-2");
  KCGauge g;
  g.b = b;
  return g;
}

Int KCGauge::at(const std::string& y) const {
  auto it = b.find(y);
  return it == b.end() ? Int(0) : it->second;
}

std::string InventoryEntry::label() const {
  switch (kind) {
    case Vertical:
      return "D" + fmt_point(y, p);
    case Horizontal:
      return "D_rho" + to_string(rho);
    case Color:
      return "D_alpha" + std::to_string(alpha + 1);
  }
  return "";
}

DivisorInventory invariant_divisors(const DivisorialFan& f) {
  DivisorInventory inv;
  std::set<std::pair<std::string, RatVec>> seen;
  for (auto& y : locus_points(f)) {
    bool special = false;
    for (auto& d : f.divisors)
      if (d.in_locus(y) && d.special_at(y)) special = true;
    if (!special) continue;
    for (auto& d : f.divisors) {
      if (!d.in_locus(y)) continue;
      for (auto& p : owned(d.delta(y).vertices()))
        if (seen.insert({y, p}).second) inv.entries.push_back({InventoryEntry::Vertical, y, p, {}, -1, 0});
    }
  }
  std::set<IntVec> rays;
  for (auto& d : f.divisors)
    for (auto& r : free_rays(f, d))
      if (rays.insert(r).second) inv.entries.push_back({InventoryEntry::Horizontal, "", {}, r, -1, 0});
  for (int a : f.color_domain()) inv.entries.push_back({InventoryEntry::Color, "", {}, {}, a, 0});
  return inv;
}

DivisorInventory canonical_divisor(const DivisorialFan& f, const KCGauge& g) {
  DivisorInventory inv;
  std::set<std::pair<std::string, RatVec>> seen;
  for (auto& y : locus_points(f)) {
    bool special = g.at(y) != 0;
    for (auto& d : f.divisors)
      if (d.in_locus(y) && d.special_at(y)) special = true;
    if (!special) continue;
    for (auto& d : f.divisors) {
      if (!d.in_locus(y)) continue;
      for (auto& p : owned(d.delta(y).vertices())) {
        if (!seen.insert({y, p}).second) continue;
        Int k = kappa(p);
        inv.entries.push_back({InventoryEntry::Vertical, y, p, {}, -1, Rat(k * g.at(y) + k - 1)});
      }
    }
  }
  if (g.anonymous != 0)
    inv.entries.push_back({InventoryEntry::Vertical, "generic*", RatVec(f.n), {}, -1, Rat(g.anonymous)});
  std::set<IntVec> rays;
  for (auto& d : f.divisors)
    for (auto& r : free_rays(f, d))
      if (rays.insert(r).second) inv.entries.push_back({InventoryEntry::Horizontal, "", {}, r, -1, -1});
  for (int a : f.color_domain()) inv.entries.push_back({InventoryEntry::Color, "", {}, {}, a, Rat(-f.a(a))});
  return inv;
}

RatVec LinearPiece::functional() const { return lift(m, c); }

LinearPiece PLSupport::piece(size_t div, const std::string& y) const {
  if (y != kGeneric) {
    auto it = at[div].find(y);
    if (it != at[div].end()) return it->second;
  }
  return {tail[div], generic_c[div]};
}

std::optional<Rat> PLSupport::value(const DivisorialFan& f, const std::string& y, const IntVec& nu,
                                    const Int& l) const {
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    auto& d = f.divisors[i];
    if (l == 0 || y == kGeneric) {
      if (d.tail.contains(nu)) return piece(i, kGeneric)(to_rat(nu), Rat(l));
      continue;
    }
    if (!d.in_locus(y) || !at[i].count(y)) continue;
    if (d.cayley(y).contains(lift(nu, l))) return piece(i, y)(to_rat(nu), Rat(l));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- theta

namespace {

struct Row {
  RatVec a;
  Rat b;
  std::string what;
};

struct Layout {
  int nv = 0;
  std::vector<int> m_off;
  std::vector<std::map<std::string, int>> my_off, c_off;
};

Layout make_layout(const DivisorialFan& f) {
  Layout L;
  int n = f.n;
  for (auto& d : f.divisors) {
    L.m_off.push_back(L.nv);
    L.nv += n;
    std::map<std::string, int> my, c;
    for (auto& y : f.curve.points) {
      if (!d.in_locus(y)) continue;
      if (d.projective) {
        my[y] = L.m_off.back();
      } else {
        my[y] = L.nv;
        L.nv += n;
      }
      c[y] = L.nv++;
    }
    L.my_off.push_back(my);
    L.c_off.push_back(c);
  }
  return L;
}

void put(RatVec& a, int off, const RatVec& v, const Rat& s = 1) {
  for (size_t k = 0; k < v.size(); ++k) a[off + k] += s * v[k];
}

std::optional<AffineSolution> solve_rows(const std::vector<Row>& rows, int nv) {
  RatMat A;
  RatVec b;
  for (auto& r : rows) {
    A.push_back(r.a);
    b.push_back(r.b);
  }
  if (rows.empty()) return AffineSolution{RatVec(nv), kernel(RatMat{}, nv)};
  return solve(A, b, nv);
}

PLSupport support_from(const DivisorialFan& f, const Layout& L, const RatVec& x, const KCGauge& g) {
  PLSupport s;
  int n = f.n;
  s.gauge = g;
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    s.tail.push_back(RatVec(x.begin() + L.m_off[i], x.begin() + L.m_off[i] + n));
    std::map<std::string, LinearPiece> at;
    for (auto& [y, off] : L.my_off[i])
      at[y] = {RatVec(x.begin() + off, x.begin() + off + n), x[L.c_off[i].at(y)]};
    s.at.push_back(at);
    s.generic_c.push_back(0);
  }
  std::set<int> used;
  for (auto& d : f.divisors) used.insert(d.colors.begin(), d.colors.end());
  for (int a : f.color_domain())
    if (!used.count(a)) s.r[a] = Rat(-f.a(a));
  return s;
}

long support_denominator(const DivisorialFan& f, const PLSupport& s) {
  Int d = 1;
  int n = f.n;
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    auto& dv = f.divisors[i];
    d = lcm(d, span_denominator(s.tail[i], dv.tail.rays(), n));
    d = lcm(d, span_denominator(lift(s.tail[i], s.generic_c[i]), cone_rays_with_up(dv.tail), n + 1));
    for (auto& [y, pc] : s.at[i]) d = lcm(d, span_denominator(pc.functional(), dv.cayley(y).rays(), n + 1));
  }
  return to_long(d);
}

}  // namespace

ThetaResult solve_theta(const DivisorialFan& f, const KCGauge& g) {
  Layout L = make_layout(f);
  int n = f.n;
  std::vector<Row> rows;
  auto row = [&] { return Row{RatVec(L.nv), 0, ""}; };
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    auto& d = f.divisors[i];
    std::string tag = "divisor " + std::to_string(i) + ": ";
    for (auto& r : free_rays(f, d)) {
      Row w = row();
      put(w.a, L.m_off[i], to_rat(r));
      w.b = -1;
      w.what = tag + "theta = -1 on ray " + to_string(r);
      rows.push_back(w);
    }
    for (int a : d.colors) {
      Row w = row();
      put(w.a, L.m_off[i], to_rat(f.color_image(a)));
      w.b = Rat(-f.a(a));
      w.what = tag + "theta = -a on color " + std::to_string(a + 1);
      rows.push_back(w);
    }
    for (auto& [y, off] : L.my_off[i]) {
      for (auto& p : owned(d.delta(y).vertices())) {
        Row w = row();
        put(w.a, off, p);
        w.a[L.c_off[i].at(y)] += 1;
        Int k = kappa(p);
        w.b = Rat(g.at(y)) + 1 - Rat(1) / Rat(k);
        w.what = tag + "vertex " + fmt_point(y, p);
        rows.push_back(w);
      }
      if (!d.projective && off != L.m_off[i])
        for (auto& r : d.tail.rays()) {
          Row w = row();
          put(w.a, off, to_rat(r));
          put(w.a, L.m_off[i], to_rat(r), -1);
          w.what = tag + "tail agreement at " + y;
          rows.push_back(w);
        }
    }
    if (d.projective) {
      Row w = row();
      for (auto& [y, off] : L.c_off[i]) w.a[off] = 1;
      w.b = Rat(-g.anonymous);
      w.what = tag + "principal divisor of degree 0";
      rows.push_back(w);
    }
  }
  for (size_t i = 0; i < f.divisors.size(); ++i)
    for (size_t j = i + 1; j < f.divisors.size(); ++j) {
      auto& a = f.divisors[i];
      auto& b = f.divisors[j];
      std::string tag = "divisors " + std::to_string(i) + "," + std::to_string(j) + ": ";
      for (auto& r : owned(a.tail.intersect(b.tail).rays())) {
        Row w = row();
        put(w.a, L.m_off[i], to_rat(r));
        put(w.a, L.m_off[j], to_rat(r), -1);
        w.what = tag + "agreement on tail ray " + to_string(r);
        rows.push_back(w);
      }
      for (auto& y : f.curve.points) {
        if (!a.in_locus(y) || !b.in_locus(y)) continue;
        auto x = a.delta(y).intersect(b.delta(y));
        if (!x) continue;
        for (auto& p : x->vertices()) {
          Row w = row();
          put(w.a, L.my_off[i].at(y), p);
          w.a[L.c_off[i].at(y)] += 1;
          put(w.a, L.my_off[j].at(y), p, -1);
          w.a[L.c_off[j].at(y)] -= 1;
          w.what = tag + "agreement at vertex " + fmt_point(y, p);
          rows.push_back(w);
        }
      }
    }
  (void)n;
  auto sol = solve_rows(rows, L.nv);
  if (!sol) {
    std::vector<Row> core = rows;
    for (size_t k = 0; k < core.size();) {
      std::vector<Row> t = core;
      t.erase(t.begin() + k);
      if (!solve_rows(t, L.nv))
        core = t;
      else
        ++k;
    }
    std::string msg = "not Q-Gorenstein: no support function satisfies";
    for (auto& r : core) msg += "\n  " + r.what;
    fail(ErrorKind::NotQGorenstein, msg);
  }
  ThetaResult res;
  res.kernel_dim = sol->kernel.size();
  res.theta = support_from(f, L, sol->particular, g);
  RatVec alt = sol->particular;
  for (size_t k = 0; k < sol->kernel.size(); ++k) alt = add(alt, scale(sol->kernel[k], Rat((long)k + 1)));
  res.alternate = support_from(f, L, alt, g);
  res.theta.m = support_denominator(f, res.theta);
  res.alternate.m = support_denominator(f, res.alternate);
  if (f.curve.genus >= 1)
    for (auto& d : f.divisors)
      if (d.projective) {
        res.theta.assumptions.push_back("genus >= 1: the degree-0 divisor sum c_y [y] is assumed principal");
        break;
      }
  return res;
}

LogTerminalVerdict check_log_terminal(const DivisorialFan& f) {
  LogTerminalVerdict v;
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    auto& d = f.divisors[i];
    std::string tag = "divisor " + std::to_string(i) + ": ";
    if (!d.projective) {
      v.details.push_back(tag + "affine locus");
      continue;
    }
    if (f.curve.genus != 0) {
      v.ok = false;
      v.details.push_back(tag + "projective locus of genus " + std::to_string(f.curve.genus));
      continue;
    }
    Rat s = 0;
    std::string terms;
    for (auto& y : f.curve.points) {
      Int k = 1;
      for (auto& p : owned(d.delta(y).vertices())) k = std::max(k, kappa(p));
      if (k > 1) {
        s += 1 - Rat(1) / Rat(k);
        terms += " kappa_" + y + "=" + to_string(k);
      }
    }
    bool ok = s < 2;
    if (!ok) v.ok = false;
    v.details.push_back(tag + "sum (1 - 1/kappa_y) = " + to_string(s) + (ok ? " < 2" : " >= 2") + ";" + terms);
  }
  return v;
}

PLSupport build_omega(const DivisorialFan& f, const PLSupport& theta) {
  PLSupport w = theta;
  int n = f.n;
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    auto& d = f.divisors[i];
    for (auto& [y, pc] : w.at[i]) pc.c = pc.c - Rat(theta.gauge.at(y)) - 1;
    w.generic_c[i] = -1;
    for (auto& [y, pc] : w.at[i])
      for (auto& r : owned(d.cayley(y).rays())) {
        if (r.back() == 0) continue;
        Rat val = pc(to_rat(head(r)), Rat(r.back()));
        if (val != -1)
          fail(ErrorKind::Internal, "omega not linear on cone at " + y + ": value " + to_string(val) + " on ray " +
                                        to_string(r));
      }
    for (int a : d.colors)
      if (dot(w.tail[i], f.color_image(a)) != Rat(-f.a(a)))
        fail(ErrorKind::Internal, "omega does not take -a on color " + std::to_string(a + 1));
  }
  for (size_t i = 0; i < f.divisors.size(); ++i)
    for (size_t j = i + 1; j < f.divisors.size(); ++j)
      for (auto& y : f.curve.points) {
        auto& a = f.divisors[i];
        auto& b = f.divisors[j];
        if (!a.in_locus(y) || !b.in_locus(y)) continue;
        Cone c = a.cayley(y).intersect(b.cayley(y));
        for (auto& r : c.rays())
          if (w.piece(i, y)(to_rat(head(r)), Rat(r.back())) != w.piece(j, y)(to_rat(head(r)), Rat(r.back())))
            fail(ErrorKind::Internal, "omega pieces disagree on an overlap at " + y);
      }
  (void)n;
  w.m = support_denominator(f, w);
  return w;
}

// ---------------------------------------------------------------- series

LatticeSeries cone_series(const Cone& tau, const RatVec& omega, long m) {
  LatticeSeries s;
  s.m = m;
  for (auto& r : tau.rays()) {
    Rat v = dot(omega, r);
    if (v >= 0)
      fail(ErrorKind::NotLogTerminal,
           "substitution diverges: omega = " + to_string(v) + " >= 0 on ray " + to_string(r) + " (not log terminal)");
    Rat k = -v * m;
    if (k.get_den() != 1) fail(ErrorKind::Internal, "m * omega not integral on a ray");
    s.den[to_long(k.get_num())] += 1;
  }
  for (auto& [v, c] : interior_numerator(tau).terms) {
    Rat e = -dot(omega, v) * m;
    if (e.get_den() != 1) fail(ErrorKind::Internal, "m * omega not integral on a lattice point");
    s.num[to_long(e.get_num())] += c;
  }
  poly_prune(s.num);
  return s;
}

SRForm stanley_reisner(const Cone& tau, const RatVec& omega, long m) {
  LatticeSeries s = cone_series(tau, omega, m);
  SRForm r;
  if (s.num.empty()) return r;
  long top = s.num.rbegin()->first;
  for (auto& [e, c] : s.num) r.P[top - e] = c;
  r.eta = ratio(top, m);
  return r;
}

namespace {

struct ConeTerm {
  Cone cone;
  RatVec omega;
};

std::vector<ConeTerm> tail_terms(const DivisorialFan& f, const PLSupport& w) {
  std::vector<ConeTerm> out;
  for (auto& c : f.tail_fan().all_cones()) {
    size_t i = 0;
    while (i < f.divisors.size() && !c.is_face_of(f.divisors[i].tail)) ++i;
    if (i == f.divisors.size()) fail(ErrorKind::Internal, "tail cone without a divisor");
    out.push_back({c, w.tail[i]});
  }
  return out;
}

std::vector<ConeTerm> point_terms(const DivisorialFan& f, const PLSupport& w, const std::string& y) {
  std::set<Cone> cones;
  for (auto& d : f.divisors)
    if (d.in_locus(y))
      for (auto& c : d.cayley(y).faces()) {
        bool vertical = false;
        for (auto& r : c.rays())
          if (r.back() > 0) vertical = true;
        if (vertical) cones.insert(c);
      }
  std::vector<ConeTerm> out;
  for (auto& c : cones) {
    size_t i = 0;
    while (i < f.divisors.size() && !(f.divisors[i].in_locus(y) && c.is_face_of(f.divisors[i].cayley(y)))) ++i;
    if (i == f.divisors.size()) fail(ErrorKind::Internal, "Cayley cone without a divisor");
    out.push_back({c, w.piece(i, y).functional()});
  }
  return out;
}

}  // namespace

Engine prepare(const DivisorialFan& f, std::optional<KCGauge> g) {
  auto rep = validate_fan(f);
  if (!rep.ok()) {
    std::string msg = "invalid input:";
    for (auto& v : rep.violations) msg += "\n  " + v;
    fail(ErrorKind::Validation, msg);
  }
  Engine e;
  e.fan = f;
  e.gauge = g ? *g : KCGauge::anonymous_gauge(f.curve);
  e.theta = solve_theta(f, e.gauge);
  e.omega = build_omega(f, e.theta.theta);
  PLSupport alt = build_omega(f, e.theta.alternate);
  for (auto& y : locus_points(f))
    for (auto& d : f.divisors)
      if (d.in_locus(y))
        for (auto& r : owned(d.cayley(y).rays()))
          if (e.omega.value(f, y, head(r), r.back()) != alt.value(f, y, head(r), r.back()))
            fail(ErrorKind::Internal, "stringy support function differs between two support-function solutions");
  for (auto& d : f.divisors)
    for (auto& r : d.tail.rays())
      if (e.omega.value(f, kGeneric, r, 0) != alt.value(f, kGeneric, r, 0))
        fail(ErrorKind::Internal, "stringy support function differs between two support-function solutions");
  e.omega.assumptions.insert(e.omega.assumptions.begin(), rep.assumptions.begin(), rep.assumptions.end());
  e.lt = check_log_terminal(f);
  return e;
}

StringyResult stringy_volume(const DivisorialFan& f, const PLSupport& w) {
  StringyResult res;
  res.m = w.m;
  res.assumptions = w.assumptions;
  std::set<Rat> poles;
  res.tail_sum = LatticeSeries::constant(0, w.m);
  for (auto& t : tail_terms(f, w)) {
    res.tail_sum += cone_series(t.cone, t.omega, w.m);
    for (auto& r : t.cone.rays()) poles.insert(dot(t.omega, r));
  }
  LatticeSeries vert = LatticeSeries::constant(0, w.m);
  std::string names;
  for (auto& y : locus_points(f)) {
    LatticeSeries s = LatticeSeries::constant(0, w.m);
    for (auto& t : point_terms(f, w, y)) {
      s += cone_series(t.cone, t.omega, w.m);
      for (auto& r : t.cone.rays()) poles.insert(dot(t.omega, r));
    }
    res.point_sums[y] = s;
    vert += s;
    names += (names.empty() ? "S_" : " + S_") + y;
  }
  res.poles.assign(poles.begin(), poles.end());
  MotiveExpr inner = gamma_class(f) * MotiveExpr::from_series(res.tail_sum);
  if (!res.point_sums.empty()) inner += L_minus_one() * MotiveExpr::from_series(vert);
  res.efunction = f.gh_class() * inner;
  res.efunction.normalize();
  for (auto& [k, mult] : res.efunction.den) res.remaining_poles.push_back(ratio(-k, res.efunction.m));
  std::sort(res.remaining_poles.begin(), res.remaining_poles.end());
  res.e_st = res.efunction.euler();
  if (f.curve.genus == 0) res.volume = res.efunction.as_series();
  res.symbolic = "[G/H] * ([Gamma] * S_tail" + (names.empty() ? std::string() : " + (L - 1) * (" + names + ")") + ")";
  return res;
}

std::optional<Rat> euler_shortcut(const DivisorialFan& f, const PLSupport& w) {
  int r = f.n;
  Rat a = 0, b = 0;
  for (auto& t : tail_terms(f, w)) {
    if ((int)t.cone.rays().size() > r) return std::nullopt;
    if (t.cone.dim() != r) continue;
    SRForm sr = stanley_reisner(t.cone, t.omega, w.m);
    Rat term = 0;
    for (auto& [e, c] : sr.P) term += Rat(c);
    for (auto& ray : t.cone.rays()) term /= -dot(t.omega, ray);
    a += term;
  }
  for (auto& y : locus_points(f))
    for (auto& t : point_terms(f, w, y)) {
      if ((int)t.cone.rays().size() > r + 1) return std::nullopt;
      if (t.cone.dim() != r + 1) continue;
      SRForm sr = stanley_reisner(t.cone, t.omega, w.m);
      Rat term = 0;
      for (auto& [e, c] : sr.P) term += Rat(c);
      for (auto& ray : t.cone.rays()) term /= -dot(t.omega, ray);
      b += term;
    }
  return weyl_ratio(f, horo_I(f)) * (euler_gamma(f) * a + b);
}

// ---------------------------------------------------------------- smooth pieces

MotiveExpr fiber_volume(const DivisorialFan& f, const HyperPoint& xi) {
  for (auto& d : f.divisors) {
    if (!d.colors.empty()) fail(ErrorKind::Hypothesis, "fiber volume needs an uncolored fan");
    if (d.projective) fail(ErrorKind::Hypothesis, "fiber volume needs affine loci");
  }
  auto coord_sum = [&](const Cone& c, const IntVec& x) -> std::optional<Rat> {
    if (!c.contains(x)) return std::nullopt;
    if (!c.unimodular()) fail(ErrorKind::Hypothesis, "fiber volume needs smooth cones: " + c.str());
    Rat s = 0;
    for (auto& v : c.coords(to_rat(x))) s += v;
    return s;
  };
  auto monomial = [&](const Rat& s) {
    if (s.get_den() != 1) fail(ErrorKind::Internal, "non-integral fiber exponent");
    return MotiveExpr::from_series(LatticeSeries::monomial(1, to_long(s.get_num()), 1));
  };
  if (xi.l == 0) {
    for (auto& d : f.divisors)
      if (auto s = coord_sum(d.tail, xi.nu)) return f.gh_class() * gamma_class(f) * monomial(*s);
    fail(ErrorKind::Validation, "point outside support");
  }
  for (auto& d : f.divisors) {
    if (!d.in_locus(xi.y)) continue;
    Cone c = xi.y == kGeneric ? d.cayley_generic() : d.cayley(xi.y);
    if (auto s = coord_sum(c, lift(xi.nu, xi.l))) return f.gh_class() * L_minus_one() * monomial(*s);
  }
  fail(ErrorKind::Validation, "point outside support");
}

Resolution resolve(const Engine& e) {
  const DivisorialFan& f = e.fan;
  Resolution res;
  auto theta_val = [&](const std::string& y, const IntVec& nu, const Int& l) {
    auto v = e.theta.theta.value(f, y, nu, l);
    if (!v) fail(ErrorKind::Internal, "resolution point outside the support");
    return *v;
  };
  auto omega_val = [&](const std::string& y, const IntVec& nu, const Int& l) {
    auto v = e.omega.value(f, y, nu, l);
    if (!v) fail(ErrorKind::Internal, "resolution point outside the support");
    return *v;
  };
  auto horizontal = [&](const std::string& kind, const IntVec& r) {
    Exceptional x;
    x.kind = kind;
    x.y = kGeneric;
    x.nu = r;
    x.l = 0;
    x.discrepancy = -1 - theta_val(kGeneric, r, 0);
    x.via_omega = -1 - omega_val(kGeneric, r, 0);
    res.exceptional.push_back(x);
  };
  std::set<IntVec> seen;
  for (auto& d : f.divisors)
    for (auto& r : d.tail.rays()) {
      auto k = ray_kind(f, d, r);
      if (k == RayKind::Free || !seen.insert(r).second) continue;
      horizontal(k == RayKind::Colored ? "discoloration" : "degree", r);
    }
  Fan tail = f.tail_fan();
  std::set<IntVec> old_rays = tail.rays();
  auto rr = smooth_refine(tail);
  res.tail = rr.fan;
  res.centers = rr.centers;
  for (auto& c : rr.centers)
    if (!old_rays.count(c) && seen.insert(c).second) horizontal("horizontal", c);
  for (auto& y : locus_points(f)) {
    bool special = false;
    for (auto& d : f.divisors)
      if (d.in_locus(y) && d.special_at(y)) special = true;
    if (!special) continue;
    Fan cf{f.n + 1, {}};
    for (auto& d : f.divisors)
      if (d.in_locus(y)) cf.maximal.push_back(d.cayley(y));
    std::set<IntVec> before = cf.rays();
    for (auto& c : rr.centers) cf = cf.star_subdivide(lift(c, 0));
    auto fin = smooth_refine(cf);
    res.cayley[y] = fin.fan;
    res.point_centers[y] = fin.centers;
    for (auto& r : fin.fan.rays()) {
      if (before.count(r) || r.back() == 0) continue;
      Exceptional x;
      x.kind = "vertical";
      x.y = y;
      x.nu = head(r);
      x.l = r.back();
      x.discrepancy = Rat(x.l * e.gauge.at(y) + x.l - 1) - theta_val(y, x.nu, x.l);
      x.via_omega = -1 - omega_val(y, x.nu, x.l);
      res.exceptional.push_back(x);
    }
  }
  return res;
}

// ---------------------------------------------------------------- orbits, Euler, smoothness

namespace {

const PolyDivisor& single_affine(const DivisorialFan& f, const std::string& what) {
  if (f.divisors.size() != 1) fail(ErrorKind::Hypothesis, what + " requires a single colored polyhedral divisor");
  if (f.divisors[0].projective) fail(ErrorKind::Hypothesis, what + " requires affine locus");
  return f.divisors[0];
}

std::vector<std::string> special_in_locus(const DivisorialFan& f, const PolyDivisor& d) {
  std::vector<std::string> out;
  for (auto& y : f.curve.points)
    if (d.in_locus(y) && d.special_at(y)) out.push_back(y);
  return out;
}

Rat euler_C0(const DivisorialFan& f, const PolyDivisor& d) {
  return Rat(2 - 2 * f.curve.genus - (long)d.removed.size());
}

}  // namespace

std::vector<OrbitInfo> orbits(const DivisorialFan& f) {
  auto& d = single_affine(f, "orbit enumeration");
  std::vector<OrbitInfo> out;
  int n = f.n;
  for (auto& tau : d.tail.faces()) {
    OrbitInfo o;
    o.kind = "horizontal";
    o.y = "Gamma";
    o.face = tau.str();
    o.face_dim = tau.dim();
    for (int a : d.colors)
      if (tau.contains(f.color_image(a))) o.colors.push_back(a);
    o.torus_rank = n - tau.dim();
    o.flag_I = union_I(f, o.colors);
    o.euler = o.torus_rank == 0 ? weyl_ratio(f, o.flag_I) : Rat(0);
    out.push_back(o);
  }
  for (auto& y : special_in_locus(f, d)) {
    for (auto& F : d.delta(y).faces()) {
      OrbitInfo o;
      o.kind = "vertical";
      o.y = y;
      o.face = F.str();
      o.face_dim = F.dim();
      for (int a : d.colors)
        if (F.tail().contains(f.color_image(a))) o.colors.push_back(a);
      o.torus_rank = n - F.dim();
      o.flag_I = union_I(f, o.colors);
      o.euler = o.torus_rank == 0 ? weyl_ratio(f, o.flag_I) : Rat(0);
      std::vector<IntVec> dirs;
      auto& vs = F.vertices();
      for (size_t k = 1; k < vs.size(); ++k) dirs.push_back(clear_denominators(sub(vs[k], vs[0])));
      for (auto& r : F.tail().rays()) dirs.push_back(r);
      IntMat comp = dirs.empty() ? identity(n) : orthogonal_complement(dirs, n);
      Int idx = 1;
      for (auto& k : comp) idx = lcm(idx, dot(vs[0], k).get_den());
      o.index = idx;
      out.push_back(o);
    }
  }
  return out;
}

Rat euler_from_orbits(const DivisorialFan& f) {
  auto& d = single_affine(f, "orbit enumeration");
  Rat eg = euler_C0(f, d) - Rat((long)special_in_locus(f, d).size());
  Rat s = 0;
  for (auto& o : orbits(f)) s += o.kind == "horizontal" ? eg * o.euler : o.euler;
  return s;
}

FactorialResult locally_factorial(const DivisorialFan& f) {
  auto& d = single_affine(f, "local factoriality test");
  int n = f.n;
  auto sp = special_in_locus(f, d);
  // unknowns: m, then per special point m_y and c_y, then c at one generic point
  int nv = n;
  std::map<std::string, int> my, cy;
  for (auto& y : sp) {
    my[y] = nv;
    nv += n;
    cy[y] = nv++;
  }
  int cgen = nv++;
  IntMat A;
  std::vector<std::string> names;
  auto blank = [&] { return IntVec(nv); };
  for (auto& y : sp)
    for (auto& p : owned(d.delta(y).vertices())) {
      IntVec r = blank();
      Int k = kappa(p);
      for (int i = 0; i < n; ++i) r[my[y] + i] = Int(p[i] * k);
      r[cy[y]] = k;
      A.push_back(r);
      names.push_back("D" + fmt_point(y, p));
    }
  {
    IntVec r = blank();
    r[cgen] = 1;
    A.push_back(r);
    names.push_back("D(generic, 0)");
  }
  for (auto& ray : free_rays(f, d)) {
    IntVec r = blank();
    for (int i = 0; i < n; ++i) r[i] = ray[i];
    A.push_back(r);
    names.push_back("D_rho" + to_string(ray));
  }
  for (int a : d.colors) {
    IntVec r = blank();
    auto img = f.color_image(a);
    for (int i = 0; i < n; ++i) r[i] = img[i];
    A.push_back(r);
    names.push_back("D_alpha" + std::to_string(a + 1));
  }
  size_t targets = A.size();
  for (auto& y : sp)
    for (auto& g : d.tail.rays()) {
      IntVec r = blank();
      for (int i = 0; i < n; ++i) {
        r[my[y] + i] = g[i];
        r[i] = -g[i];
      }
      A.push_back(r);
    }
  FactorialResult res;
  for (size_t k = 0; k < targets; ++k) {
    IntVec b(A.size());
    b[k] = 1;
    if (!solve_integer(A, b, nv)) {
      res.ok = false;
      res.non_cartier.push_back(names[k]);
    }
  }
  return res;
}

SmoothnessResult euler_and_smoothness(const DivisorialFan& f) {
  SmoothnessResult r;
  auto& d = single_affine(f, "smoothness criterion");
  int n = f.n;
  if (d.tail.dim() != n) r.unmet.push_back("tail cone is not full-dimensional");
  for (auto& y : f.curve.points)
    if (d.in_locus(y) && d.cayley(y).dim() != n + 1) r.unmet.push_back("Cayley cone at " + y + " is not full-dimensional");
  if (d.cayley_generic().dim() != n + 1) r.unmet.push_back("generic Cayley cone is not full-dimensional");
  auto lf = locally_factorial(f);
  if (!lf.ok) {
    std::string s = "not locally factorial; non-Cartier:";
    for (auto& x : lf.non_cartier) s += " " + x;
    r.unmet.push_back(s);
  }
  r.e_C0 = euler_C0(f, d);
  if (r.e_C0 == 0) r.unmet.push_back("e(C_0) = 2 - 2g - |C \\ C_0| is zero");
  Rat prod = 1;
  for (int a : d.colors) prod *= Rat(f.a(a));
  r.e_st_closed = r.e_C0 * weyl_ratio(f, horo_I(f)) / prod;
  r.e = r.e_C0 * weyl_ratio(f, union_I(f, d.colors));
  r.e_orbits = euler_from_orbits(f);
  if (!r.applicable()) return r;
  Engine e = prepare(f);
  auto sv = stringy_volume(f, e.omega);
  if (!sv.e_st) fail(ErrorKind::Internal, "stringy Euler characteristic has a pole");
  r.e_st = *sv.e_st;
  r.inequality = r.e_st >= r.e;
  r.smooth = r.e_st == r.e;
  return r;
}

}  // namespace stringy
