#include "stringy/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stringy {

void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

static bool parse_int(const std::string& s, Int& out) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string t = s[0] == '+' ? s.substr(1) : s;
  return out.set_str(t, 10) == 0;
}

Rat parse_rat(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  Int p, q = 1;
  if (slash == std::string::npos) {
    if (!parse_int(s, p)) fail(ErrorKind::Validation, "malformed rational '" + raw + "'");
  } else {
    if (!parse_int(s.substr(0, slash), p) || !parse_int(s.substr(slash + 1), q))
      fail(ErrorKind::Validation, "malformed rational '" + raw + "'");
    if (q == 0) fail(ErrorKind::Validation, "zero denominator in '" + raw + "'");
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}
std::string to_string(const Int& z) { return z.get_str(); }

template <class V>
static std::string vec_str(const V& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}
std::string to_string(const IntVec& v) { return vec_str(v); }
std::string to_string(const RatVec& v) { return vec_str(v); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}
Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Int floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
Rat frac(const Rat& r) { return r - Rat(floor(r)); }

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }
RatMat to_rat(const IntMat& m) {
  RatMat r;
  for (auto& row : m) r.push_back(to_rat(row));
  return r;
}
Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
Rat dot(const RatVec& a, const IntVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}
bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}
IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
IntVec scale(const IntVec& a, const Int& k) {
  IntVec r(a);
  for (auto& x : r) x *= k;
  return r;
}
RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
RatVec scale(const RatVec& a, const Rat& k) {
  RatVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

Int kappa(const RatVec& v) {
  Int k = 1;
  for (auto& x : v) k = lcm(k, x.get_den());
  return k;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (auto& x : v) g = gcd(g, x);
  if (g == 0) fail(ErrorKind::Internal, "primitive of zero vector");
  IntVec r(v);
  for (auto& x : r) x /= g;
  return r;
}

IntVec clear_denominators(const RatVec& v) {
  Int k = kappa(v);
  IntVec r;
  for (auto& x : v) {
    Rat y = x * k;
    r.push_back(y.get_num());
  }
  return r;
}

IntVec primitive(const RatVec& v) { return primitive(clear_denominators(v)); }

std::vector<int> rref(RatMat& a) {
  std::vector<int> piv;
  if (a.empty()) return piv;
  int rows = a.size(), cols = a[0].size(), r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(const RatMat& a) {
  RatMat b = a;
  return rref(b).size();
}
int rank(const IntMat& a) { return rank(to_rat(a)); }

Rat det(RatMat a) {
  int n = a.size();
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != c) { std::swap(a[p], a[c]); d = -d; }
    d *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}
Int det(const IntMat& a) { return det(to_rat(a)).get_num(); }

template <class M>
static M transpose_impl(const M& a) {
  if (a.empty()) return {};
  M t(a[0].size(), typename M::value_type(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}
RatMat transpose(const RatMat& a) { return transpose_impl(a); }
IntMat transpose(const IntMat& a) { return transpose_impl(a); }

template <class M>
static M mul_impl(const M& a, const M& b) {
  if (a.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  M c(n, typename M::value_type(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}
RatMat mul(const RatMat& a, const RatMat& b) { return mul_impl(a, b); }
IntMat mul(const IntMat& a, const IntMat& b) { return mul_impl(a, b); }
RatVec mul(const RatMat& a, const RatVec& x) {
  RatVec r;
  for (auto& row : a) r.push_back(dot(row, x));
  return r;
}
IntVec mul(const IntMat& a, const IntVec& x) {
  IntVec r;
  for (auto& row : a) r.push_back(dot(row, x));
  return r;
}

IntMat identity(int n) {
  IntMat m(n, IntVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::optional<RatMat> inverse(const RatMat& a) {
  int n = a.size();
  RatMat aug(n, RatVec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if ((int)piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatMat kernel(const RatMat& a, int ncols) {
  RatMat b = a;
  auto piv = rref(b);
  std::vector<bool> is_piv(ncols, false);
  for (int p : piv) is_piv[p] = true;
  RatMat ker;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    RatVec x(ncols);
    x[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -b[r][f];
    ker.push_back(x);
  }
  return ker;
}

std::optional<AffineSolution> solve(const RatMat& a, const RatVec& b, int ncols) {
  RatMat aug;
  for (size_t i = 0; i < a.size(); ++i) {
    RatVec row = a[i];
    row.push_back(b[i]);
    aug.push_back(row);
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  AffineSolution s;
  s.particular.assign(ncols, 0);
  for (size_t r = 0; r < piv.size(); ++r) s.particular[piv[r]] = aug[r][ncols];
  s.kernel = kernel(a, ncols);
  return s;
}

// Row-style HNF by repeated gcd elimination.
HNF hnf(const IntMat& a) {
  HNF res;
  int rows = a.size();
  int cols = rows ? a[0].size() : 0;
  res.h = a;
  res.u = identity(rows);
  auto& h = res.h;
  auto& u = res.u;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // bring gcd of column c (rows r..) into row r
    while (true) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (h[i][c] != 0 && (p < 0 || abs(h[i][c]) < abs(h[p][c]))) p = i;
      if (p < 0) break;
      std::swap(h[p], h[r]);
      std::swap(u[p], u[r]);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = floor_div(h[i][c], h[r][c]);
        for (int j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
        for (int j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h[i][c], h[r][c]);
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
      for (int j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SNF snf(const IntMat& a) {
  SNF s;
  int m = a.size();
  int n = m ? a[0].size() : 0;
  s.d = a;
  s.u = identity(m);
  s.v = identity(n);
  s.vinv = identity(n);
  auto& d = s.d;
  auto row_op = [&](int i, int k, const Int& q) {  // row_i -= q row_k
    for (int j = 0; j < n; ++j) d[i][j] -= q * d[k][j];
    for (int j = 0; j < m; ++j) s.u[i][j] -= q * s.u[k][j];
  };
  auto col_op = [&](int j, int k, const Int& q) {  // col_j -= q col_k
    for (int i = 0; i < m; ++i) d[i][j] -= q * d[i][k];
    for (int i = 0; i < n; ++i) s.v[i][j] -= q * s.v[i][k];
    // v' = v E with E = I - q e_k e_j^T ; E^{-1} = I + q e_k e_j^T ; vinv' = E^{-1} vinv
    for (int i = 0; i < n; ++i) s.vinv[k][i] += q * s.vinv[j][i];
  };
  auto swap_rows = [&](int i, int k) {
    std::swap(d[i], d[k]);
    std::swap(s.u[i], s.u[k]);
  };
  auto swap_cols = [&](int j, int k) {
    for (int i = 0; i < m; ++i) std::swap(d[i][j], d[i][k]);
    for (int i = 0; i < n; ++i) std::swap(s.v[i][j], s.v[i][k]);
    std::swap(s.vinv[j], s.vinv[k]);
  };
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    // pick smallest nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (d[i][j] != 0 && (pi < 0 || abs(d[i][j]) < abs(d[pi][pj]))) { pi = i; pj = j; }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        row_op(i, t, floor_div(d[i][t], d[t][t]));
        if (d[i][t] != 0) {
          clean = false;
          swap_rows(t, i);
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        col_op(j, t, floor_div(d[t][j], d[t][t]));
        if (d[t][j] != 0) {
          clean = false;
          swap_cols(t, j);
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide the rest of the block
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) { bad = i; break; }
      if (bad < 0) break;
      // add row bad to row t and repeat
      for (int j = 0; j < n; ++j) d[t][j] += d[bad][j];
      for (int j = 0; j < m; ++j) s.u[t][j] += s.u[bad][j];
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
    s.diag.push_back(d[t][t]);
  }
  return s;
}

IntMat integer_kernel(const IntMat& a, int ncols) {
  if (a.empty()) return identity(ncols);
  // left kernel of a^T
  auto h = hnf(transpose(a));
  IntMat ker;
  for (int i = h.rank; i < ncols; ++i) ker.push_back(h.u[i]);
  return ker;
}

IntMat orthogonal_complement(const IntMat& rows, int n) {
  IntMat nz;
  for (auto& r : rows)
    if (!is_zero(r)) nz.push_back(r);
  return integer_kernel(nz, n);
}

IntMat saturated_basis(const IntMat& rows, int n) {
  IntMat perp = orthogonal_complement(rows, n);
  return integer_kernel(perp, n);
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b, int ncols) {
  if (a.empty()) return IntVec(ncols);
  auto s = snf(a);
  IntVec ub = mul(s.u, b);
  IntVec z(ncols);
  for (size_t i = 0; i < ub.size(); ++i) {
    if (i < s.diag.size()) {
      if (ub[i] % s.diag[i] != 0) return std::nullopt;
      z[i] = ub[i] / s.diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return mul(s.v, z);
}

}  // namespace stringy
