#include "stringy/motive.hpp"

#include <numeric>

namespace stringy {

static Mono norm_mono(long a, long b, long j, long m) {
  long k = std::min(a, b);
  if (k > 0) {
    a -= k;
    b -= k;
    j -= m * k;
  }
  return {a, b, j};
}

MotiveExpr MotiveExpr::from_series(const LatticeSeries& s) {
  MotiveExpr e;
  e.m = s.m;
  e.den = s.den;
  for (auto& [j, c] : s.num) e.num[{0, 0, j}] = c;
  return e;
}

MotiveExpr MotiveExpr::from_uv(const std::map<std::pair<long, long>, Int>& p) {
  MotiveExpr e;
  for (auto& [ab, c] : p)
    if (c != 0) e.num[norm_mono(ab.first, ab.second, 0, 1)] += c;
  return e;
}

MotiveExpr MotiveExpr::from_L_poly(const std::vector<Int>& coeffs) {
  std::map<std::pair<long, long>, Int> p;
  for (size_t i = 0; i < coeffs.size(); ++i) p[{(long)i, (long)i}] += coeffs[i];
  return from_uv(p);
}

MotiveExpr MotiveExpr::rescaled(long nm) const {
  long f = nm / m;
  MotiveExpr r;
  r.m = nm;
  for (auto& [mo, c] : num) r.num[{mo.a, mo.b, mo.j * f}] = c;
  for (auto& [k, n] : den) r.den[k * f] = n;
  return r;
}

static void prune(std::map<Mono, Int>& p) {
  for (auto it = p.begin(); it != p.end();)
    it = it->second == 0 ? p.erase(it) : std::next(it);
}

static std::map<Mono, Int> mul_num(const std::map<Mono, Int>& x, const std::map<Mono, Int>& y, long m) {
  std::map<Mono, Int> r;
  for (auto& [p, c] : x)
    for (auto& [q, d] : y) r[norm_mono(p.a + q.a, p.b + q.b, p.j + q.j, m)] += c * d;
  prune(r);
  return r;
}

static std::map<Mono, Int> times_one_minus(const std::map<Mono, Int>& x, long k) {
  std::map<Mono, Int> r(x);
  for (auto& [p, c] : x) r[{p.a, p.b, p.j + k}] -= c;
  prune(r);
  return r;
}

MotiveExpr& MotiveExpr::operator+=(const MotiveExpr& o0) {
  long L = std::lcm(m, o0.m);
  if (L != m) *this = rescaled(L);
  MotiveExpr o = o0.m == L ? o0 : o0.rescaled(L);
  std::map<long, int> c = den;
  for (auto& [k, n] : o.den) c[k] = std::max(c[k], n);
  auto x = num, y = o.num;
  for (auto& [k, n] : c) {
    int a = den.count(k) ? den.at(k) : 0;
    int b = o.den.count(k) ? o.den.at(k) : 0;
    for (int i = a; i < n; ++i) x = times_one_minus(x, k);
    for (int i = b; i < n; ++i) y = times_one_minus(y, k);
  }
  for (auto& [p, v] : y) x[p] += v;
  prune(x);
  num = x;
  den = c;
  return *this;
}

MotiveExpr MotiveExpr::operator*(const MotiveExpr& o0) const {
  long L = std::lcm(m, o0.m);
  MotiveExpr a = m == L ? *this : rescaled(L);
  MotiveExpr b = o0.m == L ? o0 : o0.rescaled(L);
  MotiveExpr r;
  r.m = L;
  r.num = mul_num(a.num, b.num, L);
  r.den = a.den;
  for (auto& [k, n] : b.den) r.den[k] += n;
  return r;
}

void MotiveExpr::normalize() {
  // group by (a,b) and cancel factors common to every group
  std::map<std::pair<long, long>, Poly1> groups;
  for (auto& [p, c] : num) groups[{p.a, p.b}][p.j] = c;
  for (auto it = den.rbegin(); it != den.rend(); ++it) {
    while (it->second > 0) {
      std::map<std::pair<long, long>, Poly1> q;
      bool ok = true;
      for (auto& [ab, poly] : groups) {
        auto d = poly_div_one_minus(poly, it->first);
        if (!d) { ok = false; break; }
        q[ab] = *d;
      }
      if (!ok || groups.empty()) break;
      groups = q;
      --it->second;
    }
  }
  for (auto it = den.begin(); it != den.end();)
    it = it->second == 0 ? den.erase(it) : std::next(it);
  num.clear();
  for (auto& [ab, poly] : groups)
    for (auto& [j, c] : poly)
      if (c != 0) num[{ab.first, ab.second, j}] = c;
  if (num.empty()) den.clear();
}

bool MotiveExpr::equals(const MotiveExpr& o0) const {
  long L = std::lcm(m, o0.m);
  MotiveExpr a = m == L ? *this : rescaled(L);
  MotiveExpr b = o0.m == L ? o0 : o0.rescaled(L);
  auto x = a.num, y = b.num;
  for (auto& [k, n] : b.den)
    for (int i = 0; i < n; ++i) x = times_one_minus(x, k);
  for (auto& [k, n] : a.den)
    for (int i = 0; i < n; ++i) y = times_one_minus(y, k);
  return x == y;
}

std::optional<LatticeSeries> MotiveExpr::as_series() const {
  LatticeSeries s;
  s.m = m;
  s.den = den;
  for (auto& [p, c] : num) {
    if (p.a || p.b) return std::nullopt;
    s.num[p.j] = c;
  }
  return s;
}

LatticeSeries MotiveExpr::diagonal() const {
  LatticeSeries s;
  s.m = 1;
  for (auto& [p, c] : num) s.num[2 * p.j - m * (p.a + p.b)] += c;
  poly_prune(s.num);
  for (auto& [k, n] : den) s.den[2 * k] += n;
  return s;
}

std::optional<Rat> MotiveExpr::euler() const { return diagonal().limit_at_one(); }

std::string MotiveExpr::str() const {
  if (auto s = as_series()) return s->str_L();
  std::map<std::pair<long, long>, Poly1> groups;
  for (auto& [p, c] : num) groups[{p.a, p.b}][p.j] = c;
  std::string out;
  for (auto& [ab, poly] : groups) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (ab.first) mono += "u" + (ab.first > 1 ? "^" + std::to_string(ab.first) : std::string());
    if (ab.second) mono += "v" + (ab.second > 1 ? "^" + std::to_string(ab.second) : std::string());
    out += (mono.empty() ? "" : mono + "*") + "(" + poly_str(poly, "L", m, true) + ")";
  }
  if (out.empty()) out = "0";
  LatticeSeries d;
  d.m = m;
  d.den = den;
  if (!den.empty()) {
    d.num[0] = 1;
    std::string ds = d.str_L();
    out = "(" + out + ")" + ds.substr(3);
  }
  return out;
}

}  // namespace stringy
