#pragma once

#include <optional>

#include "bandlab/polyhedron.hpp"
#include "bandlab/verdict.hpp"

namespace bandlab {

/// How a polyhedral cone is specified: by generating rays or by the
/// homogeneous inequalities a . x >= 0.
struct ConeSpec {
  enum class Kind { rays, inequalities };
  Kind kind = Kind::rays;
  std::size_t n = 0;
  RMat vectors;
};

/// The cone contains a line; `witness` is a nonzero x with x, -x in K.
class NotPointed : public InputError {
 public:
  NotPointed(const std::string& msg, RVec w) : InputError(msg), witness(std::move(w)) {}
  RVec witness;
};

/// The cone spans a proper subspace; `witness` is a nonzero functional
/// vanishing on K.
class NotGenerating : public InputError {
 public:
  NotGenerating(const std::string& msg, RVec w) : InputError(msg), witness(std::move(w)) {}
  RVec witness;
};

/// Raised when an operation's stated precondition on its arguments fails.
class PreconditionViolated : public InputError {
 public:
  using InputError::InputError;
};

/// Finite-dimensional ordered space (R^n, K) with K pointed, generating and
/// polyhedral, together with its functional cover i(x) = F x in R^m.
struct PolySpace {
  std::size_t n = 0;
  HPoly cone_h = HPoly::whole(1);  // {x : F x >= 0}
  RMat cone_v;                     // extreme rays of K, canonical, sorted
  RMat F;                          // extreme rays of the dual cone (m x n)

  std::size_t m() const { return F.size(); }
  RVec embed(const RVec& x) const;
  bool in_cone(const RVec& x) const;
};

PolySpace build_space(const ConeSpec& spec);

bool order_leq(const RVec& x, const RVec& y, const PolySpace& s);

/// Order density of a subspace U of R^m (coordinatewise order).
PredicateResult is_order_dense(const SubspaceBasis& u, std::size_t m);
/// Order density of U in V, both subspaces of R^m with U contained in V and
/// V ordered by V intersected with the positive orthant.
PredicateResult is_order_dense_in(const SubspaceBasis& u, const SubspaceBasis& v);
/// Independent check: the coordinatewise infimum of {u in U : u >= y}
/// (nullopt if the set is empty or unbounded below in some coordinate).
std::optional<RVec> order_dense_inf(const SubspaceBasis& u, const RVec& y);

PredicateResult is_lattice_rdp(const PolySpace& s);
PredicateResult rdp_witness_check(const PolySpace& s, const RVec& x1, const RVec& x2,
                                  const RVec& z);
PredicateResult is_pervasive(const PolySpace& s);
PredicateResult is_fordable(const PolySpace& s);

/// Per-sample outcome of the pervasiveness characterization.
struct PervasiveSample {
  RVec y;
  bool cond_ii = false;   // i(a) < y' admits i(a) < i(x) <= y' (shifted sample)
  bool cond_iii = false;  // y = sup(i(X) intersected with ]0,y])
  bool cond_iv = false;   // y' = sup(i(X) intersected with ]i(a),y'])
  bool empty_section = false;
  RVec section_sup;       // coordinatewise sup of i(X) in [0,y]
};

struct PervasiveReport {
  PredicateResult pervasive;
  std::vector<PervasiveSample> samples;
  bool consistent = false;  // verdict agrees with the per-sample outcomes
};

/// Checks conditions (ii)-(iv) at each cover sample y > 0. The shift for
/// (ii)/(iv) is `shift` (an element of X; default 0 plus a fixed offset).
PervasiveReport pervasive_certificates(const PolySpace& s, const RMat& samples,
                                       const std::optional<RVec>& shift = std::nullopt);

/// Coordinatewise maximum of F x over the polytope {x : lo <= F x <= hi}
/// inside X; nullopt if that set is empty.
std::optional<RVec> cover_section_sup(const PolySpace& s, const RVec& lo, const RVec& hi);

}  // namespace bandlab
