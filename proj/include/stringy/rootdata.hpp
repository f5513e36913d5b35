#pragma once
// Root systems of reductive groups and horospherical data (M, I).

#include "stringy/motive.hpp"

namespace stringy {

struct DynkinComponent {
  char type = 'A';
  int rank = 1;
};

class RootSystem {
 public:
  RootSystem() = default;
  RootSystem(std::vector<DynkinComponent> comps, int torus_rank = 0);

  int rank() const { return rank_; }  // semisimple rank
  int torus_rank() const { return torus_rank_; }
  const std::vector<DynkinComponent>& components() const { return comps_; }
  // <alpha_i, alpha_j^vee>, 0-based
  const std::vector<std::vector<int>>& cartan() const { return pair_; }
  // positive roots in simple-root coordinates
  const std::vector<IntVec>& positive_roots() const { return pos_; }
  // positive roots supported on J (0-based simple root indices)
  std::vector<IntVec> positive_roots(const std::vector<int>& J) const;
  // <beta, alpha_j^vee>
  Int pairing(const IntVec& beta, int j) const;
  // a_alpha = sum over beta in R+ \ R_I of <beta, alpha^vee>
  Int a_alpha(const std::vector<int>& I, int alpha) const;
  // degrees of the Weyl group W_J
  std::vector<int> degrees(const std::vector<int>& J) const;
  Int weyl_order(const std::vector<int>& J) const;
  Int weyl_order() const;
  // W(q) for W_J: prod (1 + q + ... + q^{d-1})
  std::vector<Int> weyl_poincare(const std::vector<int>& J) const;
  // W(q) / W_J(q)
  std::vector<Int> flag_poincare(const std::vector<int>& J) const;
  std::vector<int> all() const;

 private:
  std::vector<DynkinComponent> comps_;
  int rank_ = 0, torus_rank_ = 0;
  std::vector<std::vector<int>> pair_;
  std::vector<IntVec> pos_;
};

// Connected components of J in the Dynkin diagram, with their types.
std::vector<std::pair<DynkinComponent, std::vector<int>>> dynkin_components(const RootSystem& rs,
                                                                            const std::vector<int>& J);

struct HoroPair {
  RootSystem rs;
  std::vector<int> I;  // 0-based simple roots
  IntMat M_basis;      // rows in fundamental-weight + torus coordinates

  int n() const { return M_basis.size(); }
  void validate() const;
  // simple roots outside I
  std::vector<int> colors() const;
  // rho(D_alpha) in N = Hom(M, Z)
  IntVec color_image(int alpha) const;
  Int a(int alpha) const { return rs.a_alpha(I, alpha); }
  // I ∪ colors
  std::vector<int> I_with(const std::vector<int>& colors) const;
  // [G/H] realized as (uv - 1)^n * flag_poincare(I)(uv)
  MotiveExpr gh_class() const;
};

// [G/H] for the torus case.
MotiveExpr torus_class(int n);

}  // namespace stringy
