#pragma once
// Rational polyhedral cones, tailed polyhedra and fans.

#include <map>
#include <set>

#include "stringy/exact.hpp"

namespace stringy {

class Cone {
 public:
  Cone() = default;
  // Cone generated by the given vectors in Q^dim (zero vectors ignored).
  Cone(int dim, const std::vector<IntVec>& gens);
  static Cone from_rat(int dim, const std::vector<RatVec>& gens);
  static Cone zero(int dim) { return Cone(dim, {}); }

  int ambient() const { return dim_; }
  int dim() const { return span_rank_; }
  bool pointed() const { return pointed_; }
  // Extreme rays (primitive) for pointed cones; otherwise the reduced generator list.
  const std::vector<IntVec>& rays() const { return rays_; }
  // Inequalities <u,x> >= 0 (u inside the span) and equations <e,x> = 0.
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<IntVec>& equations() const { return equations_; }

  bool contains(const IntVec& x) const;
  bool contains(const RatVec& x) const;
  bool relint_contains(const IntVec& x) const;
  bool simplicial() const { return pointed_ && (int)rays_.size() == span_rank_; }
  bool unimodular() const;
  bool is_face_of(const Cone& other) const;

  Cone dual() const;
  Cone intersect(const Cone& other) const;
  // Faces as ray-index sets into rays(); includes {} (zero face) and the full set.
  std::vector<std::vector<int>> face_indices() const;
  std::vector<Cone> faces() const;
  Cone face(const std::vector<int>& idx) const;
  std::vector<Cone> facet_cones() const;
  // Coordinates of x in the ray basis of a simplicial cone.
  RatVec coords(const RatVec& x) const;

  bool operator==(const Cone& o) const { return dim_ == o.dim_ && key() == o.key(); }
  bool operator<(const Cone& o) const { return key() < o.key(); }
  std::set<IntVec> key() const { return std::set<IntVec>(rays_.begin(), rays_.end()); }
  std::string str() const;

 private:
  int dim_ = 0;
  int span_rank_ = 0;
  bool pointed_ = true;
  std::vector<IntVec> rays_, facets_, equations_;
};

// A polyhedron Δ = conv(vertices) + tail with pointed tail cone.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::vector<RatVec> vertices, Cone tail);

  int ambient() const { return tail_.ambient(); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const Cone& tail() const { return tail_; }
  // Homogenization in Q^{d+1}: cone over vertices at height 1 and tail at height 0.
  const Cone& homogenized() const { return hom_; }
  bool empty() const { return vertices_.empty(); }

  bool contains(const RatVec& x) const;
  std::optional<Polyhedron> intersect(const Polyhedron& o) const;
  Polyhedron minkowski(const Polyhedron& o) const;
  std::vector<Polyhedron> faces() const;
  bool is_face_of(const Polyhedron& o) const;
  int dim() const { return hom_.dim() - 1; }
  // min over Δ of <m,x>; nullopt if unbounded below.
  std::optional<Rat> min_pairing(const RatVec& m) const;
  // Does the ray Q>=0 * r meet Δ?
  bool ray_meets(const IntVec& r) const;

  bool operator==(const Polyhedron& o) const;
  std::string str() const;

 private:
  std::vector<RatVec> vertices_;
  Cone tail_;
  Cone hom_;
};

Polyhedron polyhedron_from_hom(const Cone& hom);

// A fan given by maximal cones; faces are implicit.
struct Fan {
  int dim = 0;
  std::vector<Cone> maximal;

  std::vector<Cone> all_cones() const;  // sorted, deduplicated
  std::set<IntVec> rays() const;
  bool smooth() const;
  bool simplicial() const;
  bool support_contains(const IntVec& x) const;
  // Star subdivision at a lattice point of the support.
  Fan star_subdivide(const IntVec& nu) const;
};

// Pulling triangulation using only the cone's rays. Rays earlier in priority are pulled first;
// rays missing from priority come after, in lex order.
std::vector<Cone> triangulate(const Cone& c, const std::vector<IntVec>& priority = {});

struct RefineResult {
  Fan fan;
  std::vector<IntVec> centers;  // star subdivision centers in order applied
};
// Refine to a unimodular fan by star subdivisions.
RefineResult smooth_refine(const Fan& f);

}  // namespace stringy
