#pragma once
// Canonical class, support functions, resolution and stringy invariants.

#include "stringy/divfan.hpp"
#include "stringy/lattice_gen.hpp"

namespace stringy {

// K_C = sum b_y [y] on named points plus an optional mass at one unnamed point.
struct KCGauge {
  std::map<std::string, Int> b;
  Int anonymous = 0;
  static KCGauge anonymous_gauge(const Curve& c);
  static KCGauge on_points(const Curve& c, const std::map<std::string, Int>& b);
  Int at(const std::string& y) const;
};

struct InventoryEntry {
  enum Kind { Vertical, Horizontal, Color } kind;
  std::string y;   // vertical
  RatVec p;        // vertical vertex
  IntVec rho;      // horizontal ray
  int alpha = -1;  // color
  Rat coefficient = 0;
  std::string label() const;
};

struct DivisorInventory {
  std::vector<InventoryEntry> entries;
};

DivisorInventory invariant_divisors(const DivisorialFan& f);
DivisorInventory canonical_divisor(const DivisorialFan& f, const KCGauge& g);

// (nu, l) -> <m, nu> + l c
struct LinearPiece {
  RatVec m;
  Rat c = 0;
  Rat operator()(const RatVec& nu, const Rat& l) const { return dot(m, nu) + l * c; }
  RatVec functional() const;
};

struct PLSupport {
  std::vector<RatVec> tail;                              // per divisor, the l = 0 functional
  std::vector<std::map<std::string, LinearPiece>> at;    // per divisor, named points of the locus
  std::vector<Rat> generic_c;                            // per divisor, c over unnamed points
  std::map<int, Rat> r;                                  // colors outside every F
  KCGauge gauge;
  long m = 1;
  std::vector<std::string> assumptions;

  // Value at (y, nu, l); y = kGeneric for unnamed points. Uses the first divisor whose cone contains the point.
  std::optional<Rat> value(const DivisorialFan& f, const std::string& y, const IntVec& nu, const Int& l) const;
  LinearPiece piece(size_t div, const std::string& y) const;
};

struct ThetaResult {
  PLSupport theta;
  PLSupport alternate;  // another point of the affine solution space
  int kernel_dim = 0;
};

ThetaResult solve_theta(const DivisorialFan& f, const KCGauge& g);

struct LogTerminalVerdict {
  bool ok = true;
  std::vector<std::string> details;
};
LogTerminalVerdict check_log_terminal(const DivisorialFan& f);

PLSupport build_omega(const DivisorialFan& f, const PLSupport& theta);

// phi(Q(tau)) / prod (1 - t^{-m omega(rho)})
LatticeSeries cone_series(const Cone& tau, const RatVec& omega, long m);

struct SRForm {
  Poly1 P;  // polynomial in L^{1/m}
  Rat eta;
};
SRForm stanley_reisner(const Cone& tau, const RatVec& omega, long m);

struct StringyResult {
  LatticeSeries tail_sum;                      // sum over the tail fan
  std::map<std::string, LatticeSeries> point_sums;  // per named point
  MotiveExpr efunction;
  std::optional<LatticeSeries> volume;         // genus 0: the motivic volume as a series in L
  std::optional<Rat> e_st;                     // nullopt: pole
  std::vector<Rat> poles;            // candidate poles: omega on rays
  std::vector<Rat> remaining_poles;  // after cancellation
  long m = 1;
  std::vector<std::string> assumptions;
  std::string symbolic;                        // [G/H]([Γ] S + (L-1) sum S_y)
};

struct Engine {
  DivisorialFan fan;
  KCGauge gauge;
  ThetaResult theta;
  PLSupport omega;
  LogTerminalVerdict lt;
};
// validate, solve theta, omega, log-terminal verdict; throws on invalid or non Q-Gorenstein input
Engine prepare(const DivisorialFan& f, std::optional<KCGauge> g = std::nullopt);

StringyResult stringy_volume(const DivisorialFan& f, const PLSupport& omega);
// Simplicial shortcut for e_st; nullopt when a cone has more rays than its dimension.
std::optional<Rat> euler_shortcut(const DivisorialFan& f, const PLSupport& omega);

MotiveExpr fiber_volume(const DivisorialFan& f, const HyperPoint& xi);

struct Exceptional {
  std::string kind;  // discoloration, degree, horizontal, vertical
  std::string y;
  IntVec nu;
  Int l = 0;
  Rat discrepancy;  // from theta
  Rat via_omega;    // -1 - omega
};

struct Resolution {
  Fan tail;
  std::map<std::string, Fan> cayley;
  std::vector<IntVec> centers;
  std::map<std::string, std::vector<IntVec>> point_centers;
  std::vector<Exceptional> exceptional;
};
Resolution resolve(const Engine& e);

struct OrbitInfo {
  std::string kind;  // horizontal, vertical
  std::string y;
  std::string face;
  int face_dim = 0;
  std::vector<int> colors;
  int torus_rank = 0;
  Int index = 1;  // [M ∩ V : M_y]
  std::vector<int> flag_I;
  Rat euler = 0;
};
std::vector<OrbitInfo> orbits(const DivisorialFan& f);
Rat euler_from_orbits(const DivisorialFan& f);

struct FactorialResult {
  bool ok = true;
  std::vector<std::string> non_cartier;
};
FactorialResult locally_factorial(const DivisorialFan& f);

struct SmoothnessResult {
  std::vector<std::string> unmet;  // hypotheses that fail
  Rat e_C0;
  Rat e_st;          // full rational form
  Rat e_st_closed;   // closed formula
  Rat e;             // closed formula
  Rat e_orbits;
  bool inequality = true;
  bool smooth = false;
  bool applicable() const { return unmet.empty(); }
};
SmoothnessResult euler_and_smoothness(const DivisorialFan& f);

}  // namespace stringy
