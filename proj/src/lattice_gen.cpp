#include "stringy/lattice_gen.hpp"

#include <algorithm>

namespace stringy {

std::vector<IntVec> parallelotope(const std::vector<IntVec>& rays) {
  if (rays.empty()) return {};
  int d = rays[0].size();
  int k = rays.size();
  IntMat B = saturated_basis(rays, d);
  if ((int)B.size() != k) fail(ErrorKind::Internal, "parallelotope needs independent rays");
  RatMat Bt = transpose(to_rat(B));
  IntMat A;
  for (auto& r : rays) {
    auto s = solve(Bt, to_rat(r), k);
    IntVec a;
    for (auto& x : s->particular) a.push_back(x.get_num());
    A.push_back(a);
  }
  auto s = snf(A);
  RatMat Rt = transpose(to_rat(rays));
  std::vector<IntVec> out;
  IntVec w(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      // z = w V^{-1}, x = z B
      IntVec z(k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) z[b] += w[a] * s.vinv[a][b];
      RatVec x(d);
      for (int a = 0; a < k; ++a)
        for (int c = 0; c < d; ++c) x[c] += Rat(z[a] * B[a][c]);
      RatVec mu = solve(Rt, x, k)->particular;
      IntVec p(d);
      RatVec q(d);
      for (int a = 0; a < k; ++a) {
        Rat f = frac(mu[a]);
        for (int c = 0; c < d; ++c) q[c] += f * rays[a][c];
      }
      for (int c = 0; c < d; ++c) p[c] = q[c].get_num();
      out.push_back(p);
      return;
    }
    for (Int v = 0; v < s.diag[i]; ++v) {
      w[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly LaurentPoly::one(int dim) { return monomial(IntVec(dim), 1); }
LaurentPoly LaurentPoly::monomial(const IntVec& v, const Int& c) {
  LaurentPoly p;
  if (c != 0) p.terms[v] = c;
  return p;
}
void LaurentPoly::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second == 0 ? terms.erase(it) : std::next(it);
}
LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [v, c] : o.terms) terms[v] += c;
  prune();
  return *this;
}
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [v, c] : o.terms) terms[v] -= c;
  prune();
  return *this;
}
LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [a, x] : terms)
    for (auto& [b, y] : o.terms) r.terms[add(a, b)] += x * y;
  r.prune();
  return r;
}

static LaurentPoly one_minus(const IntVec& r) {
  LaurentPoly p = LaurentPoly::one(r.size());
  p.terms[r] -= 1;
  p.prune();
  return p;
}

MultiRational& MultiRational::operator+=(const MultiRational& o) {
  std::map<IntVec, int> a, b;
  for (auto& r : den) ++a[r];
  for (auto& r : o.den) ++b[r];
  std::map<IntVec, int> c = a;
  for (auto& [r, k] : b) c[r] = std::max(c[r], k);
  LaurentPoly x = num, y = o.num;
  for (auto& [r, k] : c) {
    for (int i = a[r]; i < k; ++i) x = x * one_minus(r);
    for (int i = b[r]; i < k; ++i) y = y * one_minus(r);
  }
  num = x + y;
  den.clear();
  for (auto& [r, k] : c)
    for (int i = 0; i < k; ++i) den.push_back(r);
  return *this;
}

Truncation expand(const MultiRational& f, const IntVec& w, const Int& bound) {
  Truncation out;
  std::vector<Int> deg;
  for (auto& r : f.den) {
    deg.push_back(dot(w, r));
    if (deg.back() <= 0) fail(ErrorKind::Internal, "grading not positive on denominator");
  }
  for (auto& [v, c] : f.num.terms) {
    Int budget = bound - dot(w, v);
    if (budget < 0) continue;
    IntVec cur(v);
    std::function<void(size_t, Int)> rec = [&](size_t i, Int left) {
      if (i == f.den.size()) {
        out[cur] += c;
        return;
      }
      IntVec save = cur;
      for (Int k = 0; k * deg[i] <= left; ++k) {
        rec(i + 1, left - k * deg[i]);
        cur = add(cur, f.den[i]);
      }
      cur = save;
    };
    rec(0, budget);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly interior_numerator(const Cone& tau, const std::vector<IntVec>& priority) {
  int d = tau.ambient();
  if (tau.rays().empty()) return LaurentPoly::one(d);
  std::set<Cone> cells;
  for (auto& s : triangulate(tau, priority))
    for (auto& f : s.faces()) cells.insert(f);
  std::map<std::set<IntVec>, LaurentPoly> memo;
  std::function<LaurentPoly(const Cone&)> L2 = [&](const Cone& g) -> LaurentPoly {
    auto key = g.key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LaurentPoly box;
    if (g.rays().empty())
      box = LaurentPoly::one(d);
    else
      for (auto& p : parallelotope(g.rays())) box.terms[p] += 1;
    LaurentPoly l1 = box;
    for (auto& r : tau.rays())
      if (!key.count(r)) l1 = l1 * one_minus(r);
    LaurentPoly l2 = l1;
    for (auto& f : g.faces())
      if (f.rays().size() < g.rays().size()) l2 -= L2(f);
    memo[key] = l2;
    return l2;
  };
  LaurentPoly q;
  for (auto& g : cells) {
    bool in_facet = false;
    for (auto& u : tau.facets()) {
      bool all = true;
      for (auto& r : g.rays())
        if (dot(u, r) != 0) { all = false; break; }
      if (all) { in_facet = true; break; }
    }
    if (!in_facet) q += L2(g);
  }
  return q;
}

MultiRational interior_series(const Cone& tau, const std::vector<IntVec>& priority) {
  return MultiRational{interior_numerator(tau, priority), tau.rays()};
}

MultiRational count_series(const Cone& tau) {
  MultiRational total{LaurentPoly{}, {}};
  for (auto& f : tau.faces()) total += interior_series(f);
  return total;
}

IntVec positive_grading(const Cone& tau) {
  IntVec w(tau.ambient());
  for (auto& u : tau.facets()) w = add(w, u);
  return w;
}

}  // namespace stringy
