#include "stringy/polyhedra.hpp"

#include <algorithm>
#include <functional>

#include "stringy/lattice_gen.hpp"

namespace stringy {

namespace {

int sign(const Int& x) { return sgn(x); }

// calls f on every k-subset of {0..n-1}
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Cone::Cone(int dim, const std::vector<IntVec>& gens) : dim_(dim) {
  std::set<IntVec> uniq;
  for (auto& g : gens) {
    if ((int)g.size() != dim) fail(ErrorKind::Internal, "cone generator of wrong dimension");
    if (!is_zero(g)) uniq.insert(primitive(g));
  }
  std::vector<IntVec> G(uniq.begin(), uniq.end());
  equations_ = orthogonal_complement(G, dim);
  span_rank_ = dim - equations_.size();
  if (G.empty()) {
    pointed_ = true;
    return;
  }
  int r = span_rank_;
  // basis of span(G)
  RatMat B = to_rat(G);
  auto piv = rref(B);
  B.resize(piv.size());
  RatMat Bt = transpose(B);
  std::set<IntVec> fac;
  for_each_subset(G.size(), r - 1, [&](const std::vector<int>& S) {
    RatMat M;
    for (int i : S) {
      RatVec row;
      for (int j = 0; j < r; ++j) row.push_back(dot(B[j], G[i]));
      M.push_back(row);
    }
    auto ker = kernel(M, r);
    if (ker.size() != 1) return;
    RatVec u(dim);
    for (int j = 0; j < r; ++j)
      for (int c = 0; c < dim; ++c) u[c] += ker[0][j] * B[j][c];
    IntVec ui = primitive(u);
    int pos = 0, neg = 0;
    for (auto& g : G) {
      int s = sign(dot(ui, g));
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;
    if (neg) ui = scale(ui, -1);
    fac.insert(ui);
  });
  facets_.assign(fac.begin(), fac.end());
  IntMat all = facets_;
  all.insert(all.end(), equations_.begin(), equations_.end());
  pointed_ = rank(all) == dim;
  if (!pointed_) {
    rays_ = G;
    return;
  }
  for (auto& g : G) {
    IntMat tight = equations_;
    for (auto& u : facets_)
      if (dot(u, g) == 0) tight.push_back(u);
    if (rank(tight) == dim - 1) rays_.push_back(g);
  }
}

Cone Cone::from_rat(int dim, const std::vector<RatVec>& gens) {
  std::vector<IntVec> g;
  for (auto& v : gens)
    if (!is_zero(v)) g.push_back(primitive(v));
  return Cone(dim, g);
}

bool Cone::contains(const IntVec& x) const {
  for (auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (auto& u : facets_)
    if (dot(u, x) < 0) return false;
  return true;
}

bool Cone::contains(const RatVec& x) const {
  for (auto& e : equations_)
    if (dot(x, e) != 0) return false;
  for (auto& u : facets_)
    if (dot(x, u) < 0) return false;
  return true;
}

bool Cone::relint_contains(const IntVec& x) const {
  for (auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (auto& u : facets_)
    if (dot(u, x) <= 0) return false;
  return true;
}

bool Cone::unimodular() const {
  if (!simplicial()) return false;
  if (rays_.empty()) return true;
  auto s = snf(rays_);
  for (auto& d : s.diag)
    if (d != 1) return false;
  return true;
}

Cone Cone::dual() const {
  std::vector<IntVec> g = facets_;
  for (auto& e : equations_) {
    g.push_back(e);
    g.push_back(scale(e, -1));
  }
  return Cone(dim_, g);
}

Cone Cone::intersect(const Cone& o) const {
  // (A ∩ B) = (A^∨ + B^∨)^∨
  std::vector<IntVec> gens;
  for (const Cone* c : {this, &o}) {
    for (auto& u : c->facets_) gens.push_back(u);
    for (auto& e : c->equations_) {
      gens.push_back(e);
      gens.push_back(scale(e, -1));
    }
  }
  return Cone(dim_, gens).dual();
}

std::vector<std::vector<int>> Cone::face_indices() const {
  if (!pointed_) fail(ErrorKind::Internal, "face enumeration needs a pointed cone");
  int n = rays_.size();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::set<std::vector<int>> seen{all};
  std::vector<std::vector<int>> out{all};
  std::vector<std::vector<int>> frontier{all};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& f : frontier) {
      if (f.empty()) continue;
      std::vector<IntVec> fr;
      for (int i : f) fr.push_back(rays_[i]);
      int fd = rank(fr);
      for (auto& u : facets_) {
        std::vector<int> sub;
        for (int i : f)
          if (dot(u, rays_[i]) == 0) sub.push_back(i);
        if (sub.size() == f.size()) continue;
        std::vector<IntVec> sr;
        for (int i : sub) sr.push_back(rays_[i]);
        if (rank(sr) != fd - 1) continue;
        if (seen.insert(sub).second) {
          out.push_back(sub);
          next.push_back(sub);
        }
      }
    }
    frontier = std::move(next);
  }
  if (!seen.count({})) out.push_back({});
  return out;
}

Cone Cone::face(const std::vector<int>& idx) const {
  std::vector<IntVec> g;
  for (int i : idx) g.push_back(rays_[i]);
  return Cone(dim_, g);
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out;
  for (auto& f : face_indices()) out.push_back(face(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> Cone::facet_cones() const {
  std::vector<Cone> out;
  for (auto& u : facets_) {
    std::vector<IntVec> g;
    for (auto& r : rays_)
      if (dot(u, r) == 0) g.push_back(r);
    out.emplace_back(dim_, g);
  }
  return out;
}

bool Cone::is_face_of(const Cone& o) const {
  for (auto& r : rays_)
    if (!o.contains(r)) return false;
  if (rays_.empty()) return true;
  // smallest face of o containing this cone
  std::vector<IntVec> g;
  for (auto& r : o.rays_) {
    bool ok = true;
    for (auto& u : o.facets_) {
      bool tight = true;
      for (auto& s : rays_)
        if (dot(u, s) != 0) { tight = false; break; }
      if (tight && dot(u, r) != 0) { ok = false; break; }
    }
    if (ok) g.push_back(r);
  }
  return Cone(dim_, g) == *this;
}

RatVec Cone::coords(const RatVec& x) const {
  RatMat a = transpose(to_rat(rays_));
  auto s = solve(a, x, rays_.size());
  if (!s) fail(ErrorKind::Internal, "point not in span of cone");
  return s->particular;
}

std::string Cone::str() const {
  std::string s = "Cone(";
  for (size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ",";
    s += to_string(rays_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

static IntVec lift(const RatVec& v, const Rat& h) {
  RatVec w(v);
  w.push_back(h);
  return primitive(w);
}

Polyhedron polyhedron_from_hom(const Cone& hom) {
  int d = hom.ambient() - 1;
  std::vector<RatVec> verts;
  std::vector<IntVec> tail;
  for (auto& r : hom.rays()) {
    if (r[d] > 0) {
      RatVec v;
      for (int i = 0; i < d; ++i) {
        v.emplace_back(r[i], r[d]);
        v.back().canonicalize();
      }
      verts.push_back(v);
    } else {
      tail.emplace_back(r.begin(), r.begin() + d);
    }
  }
  std::sort(verts.begin(), verts.end());
  return Polyhedron(verts, Cone(d, tail));
}

Polyhedron::Polyhedron(std::vector<RatVec> vertices, Cone tail) : tail_(std::move(tail)) {
  int d = tail_.ambient();
  if (vertices.empty()) return;
  if (!tail_.pointed()) fail(ErrorKind::Validation, "tail cone is not pointed");
  std::vector<IntVec> g;
  for (auto& v : vertices) {
    if ((int)v.size() != d) fail(ErrorKind::Validation, "vertex of wrong dimension");
    g.push_back(lift(v, 1));
  }
  for (auto& r : tail_.rays()) {
    IntVec w(r);
    w.push_back(0);
    g.push_back(w);
  }
  hom_ = Cone(d + 1, g);
  for (auto& r : hom_.rays())
    if (r[d] > 0) {
      RatVec v;
      for (int i = 0; i < d; ++i) {
        v.emplace_back(r[i], r[d]);
        v.back().canonicalize();
      }
      vertices_.push_back(v);
    }
  std::sort(vertices_.begin(), vertices_.end());
}

bool Polyhedron::contains(const RatVec& x) const {
  if (empty()) return false;
  RatVec w(x);
  w.push_back(1);
  return hom_.contains(w);
}

std::optional<Polyhedron> Polyhedron::intersect(const Polyhedron& o) const {
  if (empty() || o.empty()) return std::nullopt;
  Cone c = hom_.intersect(o.hom_);
  int d = ambient();
  for (auto& r : c.rays())
    if (r[d] > 0) return polyhedron_from_hom(c);
  return std::nullopt;
}

Polyhedron Polyhedron::minkowski(const Polyhedron& o) const {
  std::vector<RatVec> v;
  for (auto& a : vertices_)
    for (auto& b : o.vertices_) v.push_back(add(a, b));
  std::vector<IntVec> t = tail_.rays();
  t.insert(t.end(), o.tail_.rays().begin(), o.tail_.rays().end());
  return Polyhedron(v, Cone(ambient(), t));
}

std::vector<Polyhedron> Polyhedron::faces() const {
  std::vector<Polyhedron> out;
  int d = ambient();
  for (auto& f : hom_.face_indices()) {
    bool has = false;
    for (int i : f)
      if (hom_.rays()[i][d] > 0) has = true;
    if (has) out.push_back(polyhedron_from_hom(hom_.face(f)));
  }
  return out;
}

bool Polyhedron::is_face_of(const Polyhedron& o) const {
  for (auto& f : o.faces())
    if (f == *this) return true;
  return false;
}

std::optional<Rat> Polyhedron::min_pairing(const RatVec& m) const {
  for (auto& r : tail_.rays())
    if (dot(m, r) < 0) return std::nullopt;
  std::optional<Rat> best;
  for (auto& v : vertices_) {
    Rat x = dot(m, v);
    if (!best || x < *best) best = x;
  }
  return best;
}

bool Polyhedron::ray_meets(const IntVec& r) const {
  if (empty()) return false;
  int d = ambient();
  IntVec a(r), b(d + 1);
  a.push_back(0);
  b[d] = 1;
  Cone k(d + 1, {a, b});
  Cone c = hom_.intersect(k);
  for (auto& g : c.rays())
    if (g[d] > 0) return true;
  return false;
}

bool Polyhedron::operator==(const Polyhedron& o) const {
  return vertices_ == o.vertices_ && tail_ == o.tail_;
}

std::string Polyhedron::str() const {
  std::string s = "conv{";
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += to_string(vertices_[i]);
  }
  return s + "} + " + tail_.str();
}

// ---------------------------------------------------------------------------

std::vector<Cone> Fan::all_cones() const {
  std::set<Cone> s;
  for (auto& c : maximal)
    for (auto& f : c.faces()) s.insert(f);
  return std::vector<Cone>(s.begin(), s.end());
}

std::set<IntVec> Fan::rays() const {
  std::set<IntVec> s;
  for (auto& c : maximal) s.insert(c.rays().begin(), c.rays().end());
  return s;
}

bool Fan::smooth() const {
  return std::all_of(maximal.begin(), maximal.end(), [](const Cone& c) { return c.unimodular(); });
}

bool Fan::simplicial() const {
  return std::all_of(maximal.begin(), maximal.end(), [](const Cone& c) { return c.simplicial(); });
}

bool Fan::support_contains(const IntVec& x) const {
  return std::any_of(maximal.begin(), maximal.end(), [&](const Cone& c) { return c.contains(x); });
}

Fan Fan::star_subdivide(const IntVec& nu) const {
  if (!support_contains(nu)) fail(ErrorKind::Internal, "point outside support");
  std::set<Cone> out;
  for (auto& s : maximal) {
    if (!s.contains(nu)) {
      out.insert(s);
      continue;
    }
    if (s.rays().empty()) continue;
    for (auto& t : s.facet_cones()) {
      if (t.contains(nu)) continue;
      std::vector<IntVec> g = t.rays();
      g.push_back(nu);
      out.insert(Cone(dim, g));
    }
  }
  // drop cones that are faces of others
  Fan f{dim, {}};
  std::vector<Cone> v(out.begin(), out.end());
  for (size_t i = 0; i < v.size(); ++i) {
    bool sub = false;
    for (size_t j = 0; j < v.size() && !sub; ++j)
      if (i != j && v[i].dim() < v[j].dim() && v[i].is_face_of(v[j])) sub = true;
    if (!sub) f.maximal.push_back(v[i]);
  }
  return f;
}

// ---------------------------------------------------------------------------

std::vector<Cone> triangulate(const Cone& c, const std::vector<IntVec>& priority) {
  if (c.simplicial()) return {c};
  auto rank_of = [&](const IntVec& r) {
    auto it = std::find(priority.begin(), priority.end(), r);
    return it == priority.end() ? priority.size() : size_t(it - priority.begin());
  };
  IntVec v = c.rays()[0];
  for (auto& r : c.rays()) {
    auto a = rank_of(r), b = rank_of(v);
    if (a < b || (a == b && r < v)) v = r;
  }
  std::vector<Cone> out;
  for (auto& f : c.facet_cones()) {
    if (f.contains(v)) continue;
    for (auto& s : triangulate(f, priority)) {
      std::vector<IntVec> g = s.rays();
      g.push_back(v);
      out.emplace_back(c.ambient(), g);
    }
  }
  return out;
}

RefineResult smooth_refine(const Fan& f0) {
  RefineResult res{f0, {}};
  Fan& f = res.fan;
  auto by_dim = [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  };
  for (int guard = 0; guard < 100000; ++guard) {
    auto cones = f.all_cones();
    std::sort(cones.begin(), cones.end(), by_dim);
    const Cone* ns = nullptr;
    for (auto& c : cones)
      if (!c.simplicial()) { ns = &c; break; }
    if (ns) {
      IntVec v = *std::min_element(ns->rays().begin(), ns->rays().end());
      f = f.star_subdivide(v);
      res.centers.push_back(v);
      continue;
    }
    std::vector<Cone> bad;
    for (auto& c : f.maximal)
      if (!c.unimodular()) bad.push_back(c);
    if (bad.empty()) return res;
    std::sort(bad.begin(), bad.end());
    auto faces = bad[0].faces();
    std::sort(faces.begin(), faces.end(), by_dim);
    const Cone* g = nullptr;
    for (auto& c : faces)
      if (!c.unimodular()) { g = &c; break; }
    IntVec sum(f.dim);
    for (auto& r : g->rays()) sum = add(sum, r);
    IntVec p = primitive(sum);
    IntVec center;
    if (p != sum) {
      center = p;
    } else {
      Rat best = -1;
      for (auto& q : parallelotope(g->rays())) {
        if (is_zero(q)) continue;
        Rat s = 0;
        for (auto& x : g->coords(to_rat(q))) s += x;
        if (best < 0 || s < best || (s == best && q < center)) {
          best = s;
          center = q;
        }
      }
    }
    f = f.star_subdivide(center);
    res.centers.push_back(center);
  }
  fail(ErrorKind::Internal, "smooth_refine did not terminate");
}

}  // namespace stringy
