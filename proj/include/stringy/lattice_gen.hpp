#pragma once
// Lattice points of simplicial cones and multivariate generating functions.

#include <functional>
#include <map>

#include "stringy/polyhedra.hpp"

namespace stringy {

// Lattice points sum(mu_i r_i) with 0 <= mu_i < 1 for linearly independent integral r_i.
std::vector<IntVec> parallelotope(const std::vector<IntVec>& rays);

// Multivariate Laurent polynomial sum c_v chi^v.
struct LaurentPoly {
  std::map<IntVec, Int> terms;

  static LaurentPoly one(int dim);
  static LaurentPoly monomial(const IntVec& v, const Int& c = 1);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator+(const LaurentPoly& o) const { LaurentPoly r(*this); return r += o; }
  LaurentPoly operator-(const LaurentPoly& o) const { LaurentPoly r(*this); return r -= o; }
  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
  void prune();
};

// numerator / prod over den of (1 - chi^rho)
struct MultiRational {
  LaurentPoly num;
  std::vector<IntVec> den;
  MultiRational& operator+=(const MultiRational& o);
};

// Points of the cone, graded by a functional positive on the cone, up to degree bound.
using Truncation = std::map<IntVec, Int>;
Truncation expand(const MultiRational& f, const IntVec& grading, const Int& bound);

// Numerator Q(tau) of the interior series: sum over relint(tau) of chi^v times prod_{rho in tau(1)} (1 - chi^rho).
// Computed through a triangulation given by the priority order.
LaurentPoly interior_numerator(const Cone& tau, const std::vector<IntVec>& priority = {});
// Q(tau) / prod (1 - chi^rho)
MultiRational interior_series(const Cone& tau, const std::vector<IntVec>& priority = {});
// Series of all lattice points of tau: sum over faces of the interior series.
MultiRational count_series(const Cone& tau);

// A functional strictly positive on tau \ {0} (tau pointed).
IntVec positive_grading(const Cone& tau);

}  // namespace stringy
