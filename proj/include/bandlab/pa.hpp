#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bandlab/rational.hpp"

namespace bandlab {

/// Continuous piecewise-affine function on [-1,1], stored as breakpoints
/// (t, value) with t strictly increasing from -1 to 1. Canonical: interior
/// breakpoints where the slope does not change are removed. Evaluation
/// outside [-1,1] extends the first/last piece affinely.
class PAFunc {
 public:
  PAFunc() : PAFunc(Rat(0)) {}
  explicit PAFunc(const Rat& constant);
  /// Points must start at t = -1, end at t = 1, strictly increasing.
  explicit PAFunc(std::vector<std::pair<Rat, Rat>> points);
  /// The affine function a t + b.
  static PAFunc affine(const Rat& a, const Rat& b);

  const std::vector<std::pair<Rat, Rat>>& points() const { return pts_; }
  std::vector<Rat> breakpoints() const;
  Rat operator()(const Rat& t) const;
  /// Slope and intercept of the piece containing [lo, hi] (lo < hi).
  std::pair<Rat, Rat> piece_coefficients(const Rat& lo, const Rat& hi) const;

  friend PAFunc operator+(const PAFunc& a, const PAFunc& b);
  friend PAFunc operator-(const PAFunc& a, const PAFunc& b);
  friend PAFunc operator*(const Rat& s, const PAFunc& a);
  friend bool operator==(const PAFunc& a, const PAFunc& b) { return a.pts_ == b.pts_; }

  /// Pointwise max/min; breakpoints are the union of breakpoints plus the
  /// crossing points on each common piece.
  static PAFunc max(const PAFunc& a, const PAFunc& b);
  static PAFunc min(const PAFunc& a, const PAFunc& b);

 private:
  void canonicalize();
  std::vector<std::pair<Rat, Rat>> pts_;
};

std::vector<Rat> merge_breakpoints(const PAFunc& a, const PAFunc& b);

/// Symbolic function: pa(t) + quad * t^2 on the interval part of the domain,
/// plus finitely many atoms (values added at single points of [-1,1], or at
/// the extra point 2) and a base value `extra` at the extra point.
struct FElem {
  PAFunc pa;
  Rat quad = 0;
  std::map<Rat, Rat> atoms;  // point -> added value; key 2 is the extra point
  Rat extra = 0;             // base value at the extra point 2

  static FElem constant(const Rat& c);
  static FElem from_pa(PAFunc p);
  static FElem square();  // t^2

  /// Value at t in [-1,1] (or any real for polynomial elements).
  Rat at(const Rat& t) const;
  Rat at_extra() const;
  /// Value of pa + quad t^2 without atoms.
  Rat base(const Rat& t) const;

  FElem& canonicalize();
  friend FElem operator+(const FElem& a, const FElem& b);
  friend FElem operator-(const FElem& a, const FElem& b);
  friend FElem operator-(const FElem& a);
  friend FElem operator*(const Rat& s, const FElem& a);
  friend bool operator==(const FElem& a, const FElem& b);
  bool is_zero() const;
};

std::string to_string(const FElem& f);

/// Domain on which a family's functions live.
struct Domain {
  enum class Kind { interval, real_line };
  Kind kind = Kind::interval;
  Rat lo = -1, hi = 1;     // the interval part (ignored for real_line)
  bool extra_point = false;  // the isolated point 2
};

/// A subset of an interval: union of intervals with open/closed ends.
struct ZeroPiece {
  Rat lo, hi;
  bool lo_closed = true, hi_closed = true;
};

/// Exact zero set. Irrational roots of quadratic pieces are not listed as
/// points; `omitted_irrational` records that such roots exist.
struct ZeroSet {
  std::vector<ZeroPiece> pieces;  // sorted, disjoint, merged
  bool whole_line = false;        // real_line domain: identically zero
  bool extra_point = false;       // zero at the point 2
  bool at_infinity = false;       // leading t^2 coefficient is zero
  bool omitted_irrational = false;

  bool contains(const Rat& t) const;
  void normalize();
  std::string describe() const;
};

ZeroSet zero_set(const FElem& x, const Domain& d);

/// Union of the two zero sets covers the domain (including the extra point
/// and, for the real line, the point at infinity).
bool zero_sets_cover(const ZeroSet& a, const ZeroSet& b, const Domain& d);

/// Nonnegativity of x on the domain, decided exactly.
bool nonnegative(const FElem& x, const Domain& d);
/// Nonnegativity of a t^2 + b t + c on [lo, hi].
bool quadratic_nonneg_on(const Rat& a, const Rat& b, const Rat& c, const Rat& lo, const Rat& hi);

/// Closed subsets of [-1,1] given as finite unions of closed intervals
/// (points are degenerate intervals). Used for zero-set ideals.
class ClosedSet {
 public:
  ClosedSet() = default;
  explicit ClosedSet(std::vector<std::pair<Rat, Rat>> intervals);
  static ClosedSet point(const Rat& t) { return ClosedSet({{t, t}}); }
  static ClosedSet interval(const Rat& a, const Rat& b) { return ClosedSet({{a, b}}); }
  static ClosedSet whole() { return interval(-1, 1); }

  const std::vector<std::pair<Rat, Rat>>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  bool contains(const Rat& t) const;
  bool contains(const ClosedSet& other) const;
  bool finite() const;
  ClosedSet unite(const ClosedSet& other) const;
  /// Closure of [-1,1] minus this set.
  ClosedSet closure_of_complement() const;
  /// Some point of [-1,1] outside the set, if any.
  std::optional<Rat> point_outside() const;
  /// Some point of this set outside `other`, if any.
  std::optional<Rat> point_not_in(const ClosedSet& other) const;
  std::string describe() const;
  friend bool operator==(const ClosedSet& a, const ClosedSet& b) { return a.iv_ == b.iv_; }

 private:
  void normalize();
  std::vector<std::pair<Rat, Rat>> iv_;
};

}  // namespace bandlab
