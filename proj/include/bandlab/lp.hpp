#pragma once

#include <optional>

#include "bandlab/polyhedron.hpp"

namespace bandlab {

enum class LpStatus { optimal, unbounded, infeasible };
enum class Sense { minimize, maximize };

const char* to_string(LpStatus s);

/// Result of an exact LP over {x : A x >= b} with free variables x.
///
/// Certificates:
///  - optimal:    witness x attains `value`; `dual` y >= 0 satisfies
///                A^T y = c (c = objective, negated for maximize) and
///                b . y equals the minimized value.
///  - unbounded:  witness is a feasible point, `ray` d has A d >= 0 and
///                strictly improves the objective.
///  - infeasible: `dual` y >= 0 with A^T y = 0 and b . y > 0 (Farkas).
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::optional<Rat> value;
  std::optional<RVec> witness;
  RVec dual;
  std::optional<RVec> ray;
};

LpResult lp_optimize(const RVec& objective, const HPoly& region, Sense sense);

/// Feasible point of the region, if any.
std::optional<RVec> lp_feasible_point(const HPoly& region);

/// Re-checks every certificate of `r` exactly; false on any mismatch.
bool lp_certificate_valid(const RVec& objective, const HPoly& region, Sense sense,
                          const LpResult& r);

/// Standard form: min c.x s.t. A x = b, x >= 0. Exposed for tests.
struct StandardLp {
  LpStatus status = LpStatus::infeasible;
  RVec x;
};
StandardLp simplex_standard(const RMat& a, const RVec& b, const RVec& c);

}  // namespace bandlab
