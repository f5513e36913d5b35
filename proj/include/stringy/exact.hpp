#pragma once
// Exact integer/rational linear algebra on top of GMP.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stringy {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;  // row major
using RatMat = std::vector<RatVec>;

enum class ErrorKind { Internal = 1, Validation = 2, NotQGorenstein = 3, NotLogTerminal = 4, Hypothesis = 5 };

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] void fail(ErrorKind k, const std::string& msg);

// "p/q" or "p"; throws Validation on malformed input or zero denominator.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);
Rat frac(const Rat& r);  // r - floor(r)
Int floor(const Rat& r);

RatVec to_rat(const IntVec& v);
RatMat to_rat(const IntMat& m);
Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& k);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& k);

// Smallest positive k with k*v integral.
Int kappa(const RatVec& v);
// Primitive lattice vector on the ray through v (v != 0).
IntVec primitive(const IntVec& v);
IntVec primitive(const RatVec& v);
// Scales a rational vector to an integral primitive one (sign kept).
IntVec clear_denominators(const RatVec& v);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& a);
int rank(const RatMat& a);
int rank(const IntMat& a);
Rat det(RatMat a);
Int det(const IntMat& a);
RatMat transpose(const RatMat& a);
IntMat transpose(const IntMat& a);
RatMat mul(const RatMat& a, const RatMat& b);
IntMat mul(const IntMat& a, const IntMat& b);
RatVec mul(const RatMat& a, const RatVec& x);
IntVec mul(const IntMat& a, const IntVec& x);
IntMat identity(int n);
std::optional<RatMat> inverse(const RatMat& a);

// Rational null space basis of a (vectors x with a x = 0), cols = ncols.
RatMat kernel(const RatMat& a, int ncols);

struct AffineSolution {
  RatVec particular;
  RatMat kernel;  // basis of homogeneous solutions
};
// Solves a x = b over Q.
std::optional<AffineSolution> solve(const RatMat& a, const RatVec& b, int ncols);

// Row-style Hermite normal form: h = u * a with u unimodular.
struct HNF {
  IntMat h, u;
  int rank = 0;
};
HNF hnf(const IntMat& a);

// Smith normal form: d = u * a * v, d diagonal with d_i | d_{i+1}. vinv = v^{-1}.
struct SNF {
  IntMat d, u, v, vinv;
  std::vector<Int> diag;  // nonzero invariant factors
};
SNF snf(const IntMat& a);

// Saturated integral basis of {x in Z^n : a x = 0}.
IntMat integer_kernel(const IntMat& a, int ncols);
// Saturated integral basis of span(rows) ∩ Z^n.
IntMat saturated_basis(const IntMat& rows, int n);
// Integral basis of the orthogonal complement of span(rows).
IntMat orthogonal_complement(const IntMat& rows, int n);

// Integer solution of a x = b if one exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b, int ncols);

}  // namespace stringy
