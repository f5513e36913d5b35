#pragma once
// Brute-force reference computations for tests. Deliberately independent of the
// library's cone, triangulation and series code: plain int64 arithmetic only.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using V = std::vector<int64_t>;

inline int64_t dot(const V& a, const V& b) {
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline V cross(const V& a, const V& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline int64_t det(const std::vector<V>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return dot(m[0], cross(m[1], m[2]));
}

inline V primitive(V v) {
  int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Full-dimensional pointed cone in dimension 1..3, facets found by exhaustion.
struct Cone {
  int dim = 0;
  std::vector<V> rays;
  std::vector<V> normals;  // inward, <n, x> >= 0

  Cone(int d, std::vector<V> r) : dim(d), rays(std::move(r)) {
    for (auto& x : rays) x = primitive(x);
    std::vector<V> cand;
    if (dim == 1) {
      cand.push_back({rays[0][0] > 0 ? 1 : -1});
    } else if (dim == 2) {
      for (auto& x : rays) {
        cand.push_back({-x[1], x[0]});
        cand.push_back({x[1], -x[0]});
      }
    } else {
      for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j) {
          V c = primitive(cross(rays[i], rays[j]));
          if (c == V{0, 0, 0}) continue;
          cand.push_back(c);
          cand.push_back({-c[0], -c[1], -c[2]});
        }
    }
    std::set<V> seen;
    for (auto& c : cand) {
      bool ok = true;
      int zeros = 0;
      for (auto& x : rays) {
        int64_t d = dot(c, x);
        if (d < 0) ok = false;
        if (d == 0) ++zeros;
      }
      if (ok && zeros >= dim - 1 && seen.insert(c).second) normals.push_back(c);
    }
  }
  bool contains(const V& x) const {
    for (auto& n : normals)
      if (dot(n, x) < 0) return false;
    return true;
  }
  bool interior(const V& x) const {
    for (auto& n : normals)
      if (dot(n, x) <= 0) return false;
    return true;
  }
  // integer box containing conv(0, k * rays)
  void box(int64_t k, V& lo, V& hi) const {
    lo.assign(dim, 0);
    hi.assign(dim, 0);
    for (auto& r : rays)
      for (int i = 0; i < dim; ++i) {
        lo[i] = std::min(lo[i], k * r[i]);
        hi[i] = std::max(hi[i], k * r[i]);
      }
  }
};

inline void for_box(const V& lo, const V& hi, const std::function<void(const V&)>& f) {
  V x(lo);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == lo.size()) {
      f(x);
      return;
    }
    for (x[i] = lo[i]; x[i] <= hi[i]; ++x[i]) rec(i + 1);
  };
  rec(0);
}

// Random full-dimensional simplicial cone with entries in [-c, c].
inline Cone random_simplicial(std::mt19937& rng, int dim, int c) {
  std::uniform_int_distribution<int> u(-c, c);
  while (true) {
    std::vector<V> r(dim, V(dim));
    for (auto& v : r)
      for (auto& x : v) x = u(rng);
    if (det(r) == 0) continue;
    bool zero = false;
    for (auto& v : r) zero |= std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
    if (zero) continue;
    return Cone(dim, r);
  }
}

// Random 3d cone with rays on the plane x_3 = 1 (Gorenstein), 4..5 rays in convex position.
inline Cone random_gorenstein3(std::mt19937& rng, int c) {
  std::uniform_int_distribution<int> u(-c, c);
  while (true) {
    int k = 4 + (int)(rng() % 2);
    std::vector<V> pts;
    for (int i = 0; i < k; ++i) pts.push_back({u(rng), u(rng), 1});
    Cone cone(3, pts);
    // keep only if every point is a genuine extremal ray, and the cone is full-dimensional
    std::set<V> distinct(cone.rays.begin(), cone.rays.end());
    if ((int)distinct.size() != k) continue;
    bool extremal = true;
    for (auto& p : pts) {
      int tight = 0;
      for (auto& n : cone.normals) tight += dot(n, p) == 0;
      if (tight < 2) extremal = false;
    }
    bool primitive_rays = true;
    for (auto& p : pts) primitive_rays &= primitive(p) == p;
    if (extremal && primitive_rays && (int)cone.normals.size() == k) return cone;
  }
}

// Weyl group orbit of a dominant weight, by breadth-first search over simple reflections.
// Returns the number of orbit elements at each distance from the dominant weight.
inline std::vector<int64_t> orbit_levels(const std::vector<std::vector<int>>& cartan, const std::vector<int>& J) {
  size_t r = cartan.size();
  V lam(r, 0);
  for (size_t i = 0; i < r; ++i)
    if (std::find(J.begin(), J.end(), (int)i) == J.end()) lam[i] = 1;
  std::map<V, int> dist{{lam, 0}};
  std::vector<V> frontier{lam};
  std::vector<int64_t> levels{1};
  while (!frontier.empty()) {
    std::vector<V> next;
    for (auto& w : frontier)
      for (size_t i = 0; i < r; ++i) {
        if (w[i] == 0) continue;
        V s(w);
        // s_i(w) = w - <w, a_i^vee> a_i, a_i in fundamental-weight coordinates is row i
        for (size_t j = 0; j < r; ++j) s[j] -= w[i] * cartan[i][j];
        if (!dist.count(s)) {
          dist[s] = (int)levels.size();
          next.push_back(s);
        }
      }
    if (!next.empty()) levels.push_back((int64_t)next.size());
    frontier = std::move(next);
  }
  return levels;
}

}  // namespace oracle
