#pragma once

#include <vector>

#include "bandlab/polyspace.hpp"

namespace bandlab {

/// M^u = {u : m <= u for all m in M}, as {u : F u >= max_m F m}.
HPoly upper_set(const RMat& elements, const PolySpace& s);

/// Disjointness straight from the definition: {x+y,-x-y}^u = {x-y,-x+y}^u,
/// decided by polyhedral inclusion in both directions.
bool is_disjoint_def(const RVec& x, const RVec& y, const PolySpace& s);
/// Disjointness through the cover: i(x) and i(y) have disjoint supports.
bool is_disjoint_cover(const RVec& x, const RVec& y, const PolySpace& s);

/// Cover coordinates j with F_j w != 0 for some w in the span (0-based).
std::vector<std::size_t> support(const SubspaceBasis& w, const PolySpace& s);
std::vector<std::size_t> support(const RMat& elements, const PolySpace& s);

/// Restriction to X of the cover band R^T: {x : F_j x = 0 for j not in T}.
SubspaceBasis restrict_cover_band(const std::vector<std::size_t>& coords, const PolySpace& s);

SubspaceBasis disjoint_complement(const RMat& elements, const PolySpace& s);
SubspaceBasis disjoint_complement(const SubspaceBasis& w, const PolySpace& s);
SubspaceBasis band_generated(const RMat& elements, const PolySpace& s);
SubspaceBasis band_generated(const SubspaceBasis& w, const PolySpace& s);

/// yes iff W = W^dd; witness for no: an element of W^dd outside W.
PredicateResult is_band(const SubspaceBasis& w, const PolySpace& s);

struct RestrictionExtensionReport {
  bool extension_holds = false;           // [R^{supp i(B)}]i = B
  PredicateResult fordable;
  bool restriction_checked = false;       // (R) is only asserted on fordable spaces
  bool restriction_holds = false;         // every cover band restricts to a band
  std::optional<std::vector<std::size_t>> restriction_failure;  // offending T
  bool identity_holds = false;            // [i(A)^dd]i = A^dd for the supplied A
  std::optional<RVec> identity_witness;   // element in one side only
};

/// Checks (E) for the band B, (R) for all cover bands when the space is
/// fordable, and the identity [i(A)^dd]i = A^dd for A (defaults to B).
RestrictionExtensionReport check_restriction_extension(const SubspaceBasis& b, const PolySpace& s,
                                                       const std::optional<RMat>& a = std::nullopt);

}  // namespace bandlab
