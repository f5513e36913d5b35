#pragma once
// Expressions in u, v and t = (uv)^{-1/m} over prod (1 - t^k).

#include "stringy/series.hpp"

namespace stringy {

struct Mono {
  long a = 0, b = 0, j = 0;  // u^a v^b t^j with a*b == 0
  auto operator<=>(const Mono&) const = default;
};

class MotiveExpr {
 public:
  std::map<Mono, Int> num;
  std::map<long, int> den;
  long m = 1;

  static MotiveExpr from_series(const LatticeSeries& s);
  // sum c * u^a v^b
  static MotiveExpr from_uv(const std::map<std::pair<long, long>, Int>& p);
  // polynomial in L = uv
  static MotiveExpr from_L_poly(const std::vector<Int>& coeffs);

  MotiveExpr rescaled(long new_m) const;
  MotiveExpr& operator+=(const MotiveExpr& o);
  MotiveExpr operator+(const MotiveExpr& o) const { MotiveExpr r(*this); return r += o; }
  MotiveExpr operator*(const MotiveExpr& o) const;

  void normalize();
  bool equals(const MotiveExpr& o) const;
  // Pure series in t when no u^a or v^b survives.
  std::optional<LatticeSeries> as_series() const;
  // Specialization u = v = 1 via the one-variable limit; nullopt on a pole.
  std::optional<Rat> euler() const;
  // u = v = x^m, series in y = x^{-1}
  LatticeSeries diagonal() const;
  std::string str() const;
};

}  // namespace stringy
