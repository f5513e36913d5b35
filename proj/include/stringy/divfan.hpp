#pragma once
// Colored polyhedral divisors over a curve and divisorial fans.

#include <optional>
#include <set>
#include <string>

#include "stringy/polyhedra.hpp"
#include "stringy/rootdata.hpp"

namespace stringy {

inline const std::string kGeneric = "generic";

struct Curve {
  int genus = 0;
  std::vector<std::string> points;  // named points
};

struct PolyDivisor {
  Cone tail;
  bool projective = true;
  std::vector<std::string> removed;          // affine locus = C minus these points
  std::map<std::string, Polyhedron> coeff;   // listed coefficients; others equal the tail
  std::vector<int> colors;                   // 0-based simple roots

  bool in_locus(const std::string& y) const;
  Polyhedron delta(const std::string& y) const;
  bool special_at(const std::string& y) const;
  // Cayley cone in N ⊕ Z over a named point of the locus
  Cone cayley(const std::string& y) const;
  // Cayley cone over a generic point: tail x 0 plus (0,1)
  Cone cayley_generic() const;
};

struct DivisorialFan {
  int n = 0;
  Curve curve;
  std::optional<HoroPair> horo;
  std::vector<PolyDivisor> divisors;

  bool torus() const { return !horo.has_value(); }
  IntVec color_image(int alpha) const;
  Int a(int alpha) const;
  std::vector<int> color_domain() const;
  Fan tail_fan() const;
  // Named points in the locus of some divisor.
  std::vector<std::string> points_in_some_locus() const;
  // Named points where some divisor has a nontrivial coefficient or which are removed.
  std::vector<std::string> special_points() const;
  MotiveExpr gh_class() const;
  Int weyl_order() const;
};

// Minkowski sum of the coefficients; only meaningful for projective locus.
Polyhedron degree(const PolyDivisor& d, int n);
// min over each listed Delta_y of <m, .>; m must lie in the dual of the tail
std::map<std::string, Rat> evaluate(const PolyDivisor& d, const Curve& c, const RatVec& m);

struct Properness {
  bool proper = true;
  bool conditional = false;  // genus >= 1: principality assumed
  std::string reason;
};
Properness is_proper(const PolyDivisor& d, const Curve& c, int n);

enum class RayKind { Free, Colored, MeetsDegree };
// classification of a tail ray of d
RayKind ray_kind(const DivisorialFan& f, const PolyDivisor& d, const IntVec& rho);
// Ray(D, F): uncolored rays not meeting the degree
std::vector<IntVec> free_rays(const DivisorialFan& f, const PolyDivisor& d);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> assumptions;
  bool ok() const { return violations.empty(); }
};
ValidationReport validate_fan(const DivisorialFan& f);

// Intersection of two members; nullopt if empty.
std::optional<PolyDivisor> intersect(const PolyDivisor& a, const PolyDivisor& b, const Curve& c);

DivisorialFan discolor(const DivisorialFan& f);
// Each projective-locus divisor is split into two affine charts.
DivisorialFan affinize(const DivisorialFan& f);

struct HyperPoint {
  std::string y;  // kGeneric for l == 0
  IntVec nu;
  Int l = 0;
  auto operator<=>(const HyperPoint&) const = default;
};
// Lattice points of the hypercone with coordinates bounded by bound (|nu_i| <= bound, l <= bound).
std::vector<HyperPoint> support_points(const DivisorialFan& f, int bound);

}  // namespace stringy
