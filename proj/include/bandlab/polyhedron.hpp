#pragma once

#include <optional>

#include "bandlab/linalg.hpp"

namespace bandlab {

/// {x in Q^n : A x >= b}. Rows with a zero normal are rejected.
class HPoly {
 public:
  HPoly(std::size_t n, RMat a, RVec b);
  /// The cone {x : A x >= 0}.
  static HPoly cone(std::size_t n, RMat a);
  static HPoly whole(std::size_t n) { return HPoly(n, {}, {}); }

  std::size_t dim() const { return n_; }
  std::size_t rows() const { return a_.size(); }
  const RMat& a() const { return a_; }
  const RVec& b() const { return b_; }

  bool contains(const RVec& x) const;
  HPoly intersect(const HPoly& other) const;
  /// Adds the rows `row . x >= rhs` and `-row . x >= -rhs`.
  HPoly with_equality(const RVec& row, const Rat& rhs) const;

 private:
  std::size_t n_;
  RMat a_;
  RVec b_;
};

/// conv(vertices) + cone(rays) + span(lineality). Empty iff no vertices.
struct VPoly {
  std::size_t n = 0;
  RMat vertices;
  RMat rays;
  RMat lineality;

  bool empty() const { return vertices.empty(); }
};

/// Double description: H- to V-representation. Rays are extreme rays of the
/// polyhedron's recession cone modulo lineality, canonically scaled so their
/// first nonzero coordinate has magnitude 1, and sorted lexicographically.
VPoly dd_convert(const HPoly& p);
/// Inverse direction: irredundant inequalities (equalities appear as a pair
/// of opposite rows). An empty VPoly yields an infeasible HPoly.
HPoly dd_convert(const VPoly& v);

/// Extreme rays and lineality of {z : P z >= 0}.
struct ConeGenerators {
  RMat rays;
  RMat lineality;
};
ConeGenerators cone_generators(const RMat& p, std::size_t n);

struct SubsetResult {
  bool holds = false;
  std::optional<RVec> witness;  // a point of p outside q when !holds
};

SubsetResult poly_subset(const VPoly& p, const HPoly& q);
SubsetResult poly_subset(const HPoly& p, const HPoly& q);
bool poly_equal(const HPoly& p, const HPoly& q);

}  // namespace bandlab
