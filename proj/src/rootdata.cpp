#include "stringy/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace stringy {

namespace {

// Cartan block <alpha_i, alpha_j^vee> for one Dynkin type, Bourbaki numbering.
std::vector<std::vector<int>> cartan_block(char t, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) fail(ErrorKind::Validation, "type B needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) fail(ErrorKind::Validation, "type C needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 3) fail(ErrorKind::Validation, "type D needs rank >= 3");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) fail(ErrorKind::Validation, "type E needs rank 6, 7 or 8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) fail(ErrorKind::Validation, "type F needs rank 4");
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      break;
    case 'G':
      if (n != 2) fail(ErrorKind::Validation, "type G needs rank 2");
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      fail(ErrorKind::Validation, std::string("unknown Dynkin type ") + t);
  }
  return c;
}

std::vector<int> type_degrees(char t, int n) {
  std::vector<int> d;
  switch (t) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  return d;
}

std::vector<Int> q_number(int d) { return std::vector<Int>(d, 1); }

std::vector<Int> pmul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

RootSystem::RootSystem(std::vector<DynkinComponent> comps, int torus_rank)
    : comps_(std::move(comps)), torus_rank_(torus_rank) {
  for (auto& c : comps_) rank_ += c.rank;
  pair_.assign(rank_, std::vector<int>(rank_, 0));
  int off = 0;
  for (auto& c : comps_) {
    auto b = cartan_block(c.type, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) pair_[off + i][off + j] = b[i][j];
    off += c.rank;
  }
  std::set<IntVec> seen;
  std::deque<IntVec> q;
  for (int i = 0; i < rank_; ++i) {
    IntVec e(rank_);
    e[i] = 1;
    seen.insert(e);
    q.push_back(e);
  }
  while (!q.empty()) {
    IntVec b = q.front();
    q.pop_front();
    for (int j = 0; j < rank_; ++j) {
      Int p = pairing(b, j);
      IntVec s(b);
      s[j] -= p;
      bool positive = std::all_of(s.begin(), s.end(), [](const Int& x) { return x >= 0; });
      if (positive && !is_zero(s) && seen.insert(s).second) q.push_back(s);
    }
  }
  pos_.assign(seen.begin(), seen.end());
}

Int RootSystem::pairing(const IntVec& beta, int j) const {
  Int s = 0;
  for (int i = 0; i < rank_; ++i) s += beta[i] * pair_[i][j];
  return s;
}

std::vector<IntVec> RootSystem::positive_roots(const std::vector<int>& J) const {
  std::vector<IntVec> out;
  for (auto& b : pos_) {
    bool ok = true;
    for (int i = 0; i < rank_; ++i)
      if (b[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) ok = false;
    if (ok) out.push_back(b);
  }
  return out;
}

Int RootSystem::a_alpha(const std::vector<int>& I, int alpha) const {
  auto RI = positive_roots(I);
  std::set<IntVec> ri(RI.begin(), RI.end());
  Int s = 0;
  for (auto& b : pos_)
    if (!ri.count(b)) s += pairing(b, alpha);
  return s;
}

std::vector<int> RootSystem::all() const {
  std::vector<int> a(rank_);
  for (int i = 0; i < rank_; ++i) a[i] = i;
  return a;
}

std::vector<std::pair<DynkinComponent, std::vector<int>>> dynkin_components(const RootSystem& rs,
                                                                            const std::vector<int>& J) {
  std::vector<std::pair<DynkinComponent, std::vector<int>>> out;
  std::set<int> left(J.begin(), J.end());
  auto& c = rs.cartan();
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();) {
        if (c[comp[k]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    int n = comp.size();
    size_t np = rs.positive_roots(comp).size();
    bool laced = true, triple = false;
    for (int i : comp)
      for (int j : comp) {
        if (i != j && c[i][j] < -1) laced = false;
        if (c[i][j] == -3) triple = true;
      }
    char t;
    if (triple) t = 'G';
    else if (!laced) t = (n == 4 && np == 24) ? 'F' : 'B';
    else if (np == size_t(n * (n + 1) / 2)) t = 'A';
    else if (np == size_t(n * (n - 1))) t = 'D';
    else t = 'E';
    out.push_back({{t, n}, comp});
  }
  return out;
}

std::vector<int> RootSystem::degrees(const std::vector<int>& J) const {
  std::vector<int> d;
  for (auto& [t, comp] : dynkin_components(*this, J)) {
    auto x = type_degrees(t.type, t.rank);
    d.insert(d.end(), x.begin(), x.end());
  }
  std::sort(d.begin(), d.end());
  return d;
}

Int RootSystem::weyl_order(const std::vector<int>& J) const {
  Int o = 1;
  for (int d : degrees(J)) o *= d;
  return o;
}

Int RootSystem::weyl_order() const { return weyl_order(all()); }

std::vector<Int> RootSystem::weyl_poincare(const std::vector<int>& J) const {
  std::vector<Int> p{1};
  for (int d : degrees(J)) p = pmul(p, q_number(d));
  return p;
}

std::vector<Int> RootSystem::flag_poincare(const std::vector<int>& J) const {
  auto num = weyl_poincare(all());
  auto den = weyl_poincare(J);
  // exact division, den has constant term 1
  std::vector<Int> q(num.size() - den.size() + 1);
  for (size_t i = 0; i < q.size(); ++i) {
    q[i] = num[i];
    for (size_t j = 0; j < i; ++j)
      if (i - j < den.size()) q[i] -= q[j] * den[i - j];
  }
  if (pmul(q, den) != num) fail(ErrorKind::Internal, "Weyl Poincare polynomial division not exact");
  return q;
}

void HoroPair::validate() const {
  int w = rs.rank() + rs.torus_rank();
  for (int i : I)
    if (i < 0 || i >= rs.rank()) fail(ErrorKind::Validation, "I index out of range");
  for (auto& b : M_basis) {
    if ((int)b.size() != w) fail(ErrorKind::Validation, "M_basis row has wrong length");
    for (int i : I)
      if (b[i] != 0) fail(ErrorKind::Validation, "character not in X(P): pairs nonzero with a coroot of I");
  }
  if (rank(M_basis) != (int)M_basis.size()) fail(ErrorKind::Validation, "M_basis rows are dependent");
}

std::vector<int> HoroPair::colors() const {
  std::vector<int> c;
  for (int i = 0; i < rs.rank(); ++i)
    if (std::find(I.begin(), I.end(), i) == I.end()) c.push_back(i);
  return c;
}

IntVec HoroPair::color_image(int alpha) const {
  IntVec r;
  for (auto& b : M_basis) r.push_back(b[alpha]);
  return r;
}

std::vector<int> HoroPair::I_with(const std::vector<int>& cols) const {
  std::set<int> s(I.begin(), I.end());
  s.insert(cols.begin(), cols.end());
  return std::vector<int>(s.begin(), s.end());
}

MotiveExpr torus_class(int n) {
  std::vector<Int> p{1};
  for (int i = 0; i < n; ++i) p = pmul(p, {-1, 1});
  return MotiveExpr::from_L_poly(p);
}

MotiveExpr HoroPair::gh_class() const {
  return torus_class(n()) * MotiveExpr::from_L_poly(rs.flag_poincare(I));
}

}  // namespace stringy
