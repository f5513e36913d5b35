#pragma once
// One-variable rational functions N(t) / prod (1 - t^k), t = L^{-1/m}.

#include <map>
#include <optional>

#include "stringy/exact.hpp"

namespace stringy {

using Poly1 = std::map<long, Int>;  // exponent -> coefficient, exponents may be negative

Poly1 poly_mul(const Poly1& a, const Poly1& b);
Poly1 poly_add(const Poly1& a, const Poly1& b);
void poly_prune(Poly1& p);
// Divides by (1 - t^k) if exact.
std::optional<Poly1> poly_div_one_minus(const Poly1& p, long k);

class LatticeSeries {
 public:
  Poly1 num;
  std::map<long, int> den;  // k -> multiplicity of (1 - t^k)
  long m = 1;

  LatticeSeries() = default;
  static LatticeSeries constant(const Int& c, long m = 1);
  static LatticeSeries monomial(const Int& c, long e, long m = 1);

  LatticeSeries rescaled(long new_m) const;
  LatticeSeries& operator+=(const LatticeSeries& o);
  LatticeSeries operator+(const LatticeSeries& o) const { LatticeSeries r(*this); return r += o; }
  LatticeSeries operator*(const LatticeSeries& o) const;
  LatticeSeries operator-() const;
  LatticeSeries operator-(const LatticeSeries& o) const { return *this + (-o); }
  // divide by (1 - t^k)
  LatticeSeries divided_by_one_minus(long k) const;

  // cancels exact (1 - t^k) factors
  void normalize();
  bool equals(const LatticeSeries& o) const;
  // Re-express over the given denominator if it is a multiple of the current one.
  std::optional<LatticeSeries> over(const std::map<long, int>& target) const;
  bool is_polynomial() const;
  // Taylor coefficients of t^e for e <= hi.
  Poly1 expand(long hi) const;
  // value at t = 1; nullopt on a pole
  std::optional<Rat> limit_at_one() const;

  std::string str_t() const;
  std::string str_L() const;
};

std::string poly_str(const Poly1& p, const std::string& var, long m, bool L_form);

}  // namespace stringy
