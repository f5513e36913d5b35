#include "stringy/series.hpp"

#include <numeric>

namespace stringy {

void poly_prune(Poly1& p) {
  for (auto it = p.begin(); it != p.end();)
    it = it->second == 0 ? p.erase(it) : std::next(it);
}

Poly1 poly_mul(const Poly1& a, const Poly1& b) {
  Poly1 r;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b) r[i + j] += x * y;
  poly_prune(r);
  return r;
}

Poly1 poly_add(const Poly1& a, const Poly1& b) {
  Poly1 r(a);
  for (auto& [i, y] : b) r[i] += y;
  poly_prune(r);
  return r;
}

std::optional<Poly1> poly_div_one_minus(const Poly1& p, long k) {
  if (p.empty()) return Poly1{};
  long lo = p.begin()->first, hi = p.rbegin()->first;
  if (hi - lo < k) return std::nullopt;
  // N_i = Q_i - Q_{i-k}
  Poly1 q;
  for (long i = lo; i <= hi - k; ++i) {
    Int v = 0;
    auto it = p.find(i);
    if (it != p.end()) v = it->second;
    auto jt = q.find(i - k);
    if (jt != q.end()) v += jt->second;
    if (v != 0) q[i] = v;
  }
  for (long i = hi - k + 1; i <= hi; ++i) {
    Int v = 0;
    auto it = p.find(i);
    if (it != p.end()) v = it->second;
    auto jt = q.find(i - k);
    if (jt != q.end()) v += jt->second;
    if (v != 0) return std::nullopt;
  }
  return q;
}

static Poly1 one_minus(long k) { return Poly1{{0, 1}, {k, -1}}; }

LatticeSeries LatticeSeries::constant(const Int& c, long m) { return monomial(c, 0, m); }
LatticeSeries LatticeSeries::monomial(const Int& c, long e, long m) {
  LatticeSeries s;
  s.m = m;
  if (c != 0) s.num[e] = c;
  return s;
}

LatticeSeries LatticeSeries::rescaled(long nm) const {
  if (nm % m != 0) fail(ErrorKind::Internal, "rescale to a non-multiple");
  long f = nm / m;
  LatticeSeries s;
  s.m = nm;
  for (auto& [e, c] : num) s.num[e * f] = c;
  for (auto& [k, n] : den) s.den[k * f] = n;
  return s;
}

LatticeSeries& LatticeSeries::operator+=(const LatticeSeries& o0) {
  long L = std::lcm(m, o0.m);
  if (L != m) *this = rescaled(L);
  LatticeSeries o = o0.m == L ? o0 : o0.rescaled(L);
  std::map<long, int> c = den;
  for (auto& [k, n] : o.den) c[k] = std::max(c[k], n);
  Poly1 x = num, y = o.num;
  for (auto& [k, n] : c) {
    int a = den.count(k) ? den.at(k) : 0;
    int b = o.den.count(k) ? o.den.at(k) : 0;
    for (int i = a; i < n; ++i) x = poly_mul(x, one_minus(k));
    for (int i = b; i < n; ++i) y = poly_mul(y, one_minus(k));
  }
  num = poly_add(x, y);
  den = c;
  return *this;
}

LatticeSeries LatticeSeries::operator*(const LatticeSeries& o0) const {
  long L = std::lcm(m, o0.m);
  LatticeSeries a = m == L ? *this : rescaled(L);
  LatticeSeries b = o0.m == L ? o0 : o0.rescaled(L);
  LatticeSeries r;
  r.m = L;
  r.num = poly_mul(a.num, b.num);
  r.den = a.den;
  for (auto& [k, n] : b.den) r.den[k] += n;
  return r;
}

LatticeSeries LatticeSeries::operator-() const {
  LatticeSeries r(*this);
  for (auto& [e, c] : r.num) c = -c;
  return r;
}

LatticeSeries LatticeSeries::divided_by_one_minus(long k) const {
  if (k <= 0) fail(ErrorKind::Internal, "denominator exponent must be positive");
  LatticeSeries r(*this);
  r.den[k] += 1;
  return r;
}

void LatticeSeries::normalize() {
  poly_prune(num);
  if (num.empty()) {
    den.clear();
    return;
  }
  for (auto it = den.rbegin(); it != den.rend(); ++it) {
    while (it->second > 0) {
      auto q = poly_div_one_minus(num, it->first);
      if (!q) break;
      num = *q;
      --it->second;
    }
  }
  for (auto it = den.begin(); it != den.end();)
    it = it->second == 0 ? den.erase(it) : std::next(it);
}

static Poly1 den_poly(const std::map<long, int>& d) {
  Poly1 p{{0, 1}};
  for (auto& [k, n] : d)
    for (int i = 0; i < n; ++i) p = poly_mul(p, one_minus(k));
  return p;
}

bool LatticeSeries::equals(const LatticeSeries& o0) const {
  long L = std::lcm(m, o0.m);
  LatticeSeries a = m == L ? *this : rescaled(L);
  LatticeSeries b = o0.m == L ? o0 : o0.rescaled(L);
  return poly_mul(a.num, den_poly(b.den)) == poly_mul(b.num, den_poly(a.den));
}

std::optional<LatticeSeries> LatticeSeries::over(const std::map<long, int>& target) const {
  // multiply up to a common multiple, then divide down to the target
  LatticeSeries r(*this);
  for (auto& [k, n] : target) {
    int have = r.den.count(k) ? r.den[k] : 0;
    for (int i = have; i < n; ++i) {
      r.num = poly_mul(r.num, one_minus(k));
      r.den[k] += 1;
    }
  }
  for (auto& [k, n] : std::map<long, int>(r.den)) {
    int want = target.count(k) ? target.at(k) : 0;
    for (int i = want; i < n; ++i) {
      auto q = poly_div_one_minus(r.num, k);
      if (!q) return std::nullopt;
      r.num = *q;
      r.den[k] -= 1;
    }
    if (r.den[k] == 0) r.den.erase(k);
  }
  return r;
}

bool LatticeSeries::is_polynomial() const {
  LatticeSeries r(*this);
  r.normalize();
  return r.den.empty();
}

Poly1 LatticeSeries::expand(long hi) const {
  Poly1 out;
  if (num.empty()) return out;
  long lo = num.begin()->first;
  // multiply by 1/(1 - t^k) = sum t^{jk}, truncated at hi
  std::map<long, Int> cur(num.begin(), num.end());
  for (auto& [e, c] : std::map<long, Int>(cur))
    if (e > hi) cur.erase(e);
  for (auto& [k, n] : den)
    for (int i = 0; i < n; ++i) {
      std::map<long, Int> nxt;
      for (long e = lo; e <= hi; ++e) {
        Int v = 0;
        auto it = cur.find(e);
        if (it != cur.end()) v = it->second;
        auto jt = nxt.find(e - k);
        if (jt != nxt.end()) v += jt->second;
        if (v != 0) nxt[e] = v;
      }
      cur = nxt;
    }
  for (auto& [e, c] : cur)
    if (c != 0) out[e] = c;
  return out;
}

std::optional<Rat> LatticeSeries::limit_at_one() const {
  Poly1 p = num;
  poly_prune(p);
  if (p.empty()) return Rat(0);
  int j = 0;
  while (true) {
    Int s = 0;
    for (auto& [e, c] : p) s += c;
    if (s != 0) break;
    p = *poly_div_one_minus(p, 1);
    ++j;
  }
  int D = 0;
  Int prod = 1;
  for (auto& [k, n] : den) {
    D += n;
    for (int i = 0; i < n; ++i) prod *= k;
  }
  if (j > D) return Rat(0);
  if (j < D) return std::nullopt;
  Int s = 0;
  for (auto& [e, c] : p) s += c;
  Rat r(s, prod);
  r.canonicalize();
  return r;
}

static std::string exp_str(long e, long m) {
  Rat r(e, m);
  r.canonicalize();
  std::string s = to_string(r);
  if (r.get_den() != 1 || r < 0) return "^(" + s + ")";
  return "^" + s;
}

std::string poly_str(const Poly1& p, const std::string& var, long m, bool L_form) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [e, c] : p) {
    Int a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    long ex = L_form ? -e : e;
    bool unit = ex == 0;
    if (a != 1 || unit) s += a.get_str();
    if (!unit) {
      s += var;
      if (!(ex == m && L_form) && !(!L_form && ex == 1)) s += L_form ? exp_str(ex, m) : "^" + std::to_string(ex);
    }
  }
  return s;
}

static std::string den_str(const std::map<long, int>& den, const std::string& var, long m, bool L_form) {
  std::string s;
  for (auto it = den.rbegin(); it != den.rend(); ++it) {
    auto [k, n] = *it;
    std::string f = "(1 - " + var + (L_form ? exp_str(-k, m) : (k == 1 ? "" : "^" + std::to_string(k))) + ")";
    if (n > 1) f += "^" + std::to_string(n);
    if (!s.empty()) s += " ";
    s += f;
  }
  return s;
}

std::string LatticeSeries::str_t() const {
  std::string n = "(" + poly_str(num, "t", m, false) + ")";
  if (den.empty()) return n;
  return n + " / (" + den_str(den, "t", m, false) + ")";
}

std::string LatticeSeries::str_L() const {
  std::string n = "(" + poly_str(num, "L", m, true) + ")";
  if (den.empty()) return n;
  return n + " / (" + den_str(den, "L", m, true) + ")";
}

}  // namespace stringy
