#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandlab/disjoint.hpp"

namespace bandlab {

/// Search budgets for the incomplete refutation searches.
struct Budget {
  std::size_t solid_samples = 10000;
  std::size_t solvex_depth = 3;
};

/// {x,-x}^u contains {y,-y}^u.
bool dominates(const RVec& y, const RVec& x, const PolySpace& s);

/// The set of x dominated by the list ys, i.e. by the signed convex hull of
/// ys: {x : |F_j x| <= h_j} with h_j = min{F_j u : F u >= max_i |F y_i|}.
HPoly dominated_set(const RMat& ys, const PolySpace& s);

/// Extreme rays of W intersected with K (elements of X).
RMat positive_generators(const SubspaceBasis& w, const PolySpace& s);

PredicateResult is_solid(const SubspaceBasis& w, const PolySpace& s, const Budget& budget = {});
PredicateResult is_directed(const SubspaceBasis& w, const PolySpace& s);
PredicateResult is_solvex(const SubspaceBasis& w, const PolySpace& s, const Budget& budget = {});

/// I intersected with [a, z], in coordinates alpha of the basis of I.
struct SectionDescriptor {
  SubspaceBasis ideal;
  RVec lower;
  RVec upper;
  HPoly alpha_region = HPoly::whole(1);
  bool nonempty = false;

  RVec point(const RVec& alpha) const;
};

SectionDescriptor section(const SubspaceBasis& ideal, const RVec& a, const RVec& z, const PolySpace& s);

struct SupResult {
  enum class Kind { exists, not_in_x, empty };
  Kind kind = Kind::empty;
  RVec cover_sup;               // coordinatewise supremum in R^m
  std::optional<RVec> element;  // preimage in X when kind == exists
};

SupResult sup_over_set(const SectionDescriptor& sec, const PolySpace& s);
/// Supremum of a finite set of elements of X.
SupResult sup_over_set(const RMat& elements, const PolySpace& s);

PredicateResult is_s_closed(const SubspaceBasis& ideal, const PolySpace& s);
PredicateResult is_o_closed(const SubspaceBasis& w, const PolySpace& s);

/// Checks the sufficient-supremum condition: for each family (a finite subset
/// of I) whose supremum exists in X, the supremum lies in I.
struct LzFamilyOutcome {
  SupResult sup;
  bool in_ideal = false;
};
struct LzReport {
  std::vector<LzFamilyOutcome> families;
  bool all_in_ideal = true;
  PredicateResult s_closed;
  bool consistent = true;  // on pervasive spaces: all_in_ideal agrees with s_closed
};
LzReport lz_band_condition(const SubspaceBasis& ideal, const std::vector<RMat>& families,
                           const PolySpace& s);

/// Is I intersected with [0, x] upward directed?
PredicateResult directed_section_check(const SubspaceBasis& ideal, const RVec& x, const PolySpace& s);

/// Hypotheses and verdicts for one ideal, with every implication checked.
struct TheoremRow {
  std::string name;
  PredicateResult solid, directed, dd_directed, band, o_closed, s_closed;
  std::vector<std::string> checked;     // implications whose hypotheses held
  std::vector<std::string> violations;  // hypothesis-satisfying failures
  std::vector<std::string> counterexample_edges;  // diagram edges broken with hypotheses missing
  std::vector<std::string> near_misses;  // implications failing with exactly one hypothesis dropped
};

struct TheoremSuiteReport {
  bool pervasive = false;
  bool rdp = false;
  std::vector<TheoremRow> rows;
  bool ok() const;
};

struct NamedSubspace {
  std::string name;
  SubspaceBasis basis;
};

/// Evaluates the three closure notions on each ideal and checks every
/// implication of the diagram whose hypotheses hold. `samples` are elements
/// of X used for the pointwise characterizations.
TheoremSuiteReport theorem_suite(const PolySpace& s, const std::vector<NamedSubspace>& ideals,
                                 const RMat& samples = {});

}  // namespace bandlab
