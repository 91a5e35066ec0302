#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bandlab/ideals.hpp"
#include "bandlab/pa.hpp"
#include "bandlab/verdict.hpp"

namespace bandlab {

/// The function-space families. Each comes with a cover in which
/// disjointness is decided:
///  - namioka_pa:   PA functions on [-1,1] with f(0) = (f(-1)+f(1))/2; cover C[-1,1].
///  - pa_lattice:   all PA functions on [-1,1]; cover C[-1,1].
///  - example3_paq: PA functions plus multiples of t^2 on [-1,1]; cover C[-1,1].
///  - ex_quad:      polynomials of degree <= 2 on R; cover: continuous functions
///                  on R with a point at infinity (the t^2 coefficient).
///  - ex1_atom:     span of 1_A and 1_{a}+1_{2} (a in [0,1]) on A = [0,1] u {2};
///                  cover: bounded functions on A.
///  - band_h:       span of 1_A, h and 1_{a}+1_{2} (a in [0,1]) on
///                  A = [-1,1] u {2}; cover Y (coordinates below).
enum class Family { namioka_pa, pa_lattice, example3_paq, ex_quad, ex1_atom, band_h };

std::string to_string(Family f);

struct FuncSpace {
  Family family = Family::pa_lattice;
  Domain domain;

  /// Membership in X (shape of the symbolic element plus family constraints).
  bool contains(const FElem& x) const;
  /// Membership in the cover (for the C-type covers: any PA + t^2 element).
  bool cover_contains(const FElem& x) const;
};

FuncSpace make_space(Family f);

/// The tent function h of the band family: 2t+2 on [-1,-1/2], -2t on [-1/2,0], 0 after.
FElem h_function();
/// Indicator of A (constant 1 on the interval part and 1 at the extra point).
FElem indicator_A();
/// 1_{a} + 1_{2}.
FElem atom_pair(const Rat& a);
/// The constant function 1 on [-1,1] (no extra point).
FElem one_function();
/// Tent of height `height` at p with half-width r (clipped to [-1,1]).
FElem tent(const Rat& p, const Rat& r, const Rat& height);

/// x >= 0 in X (exact).
bool cone_test(const FElem& x, const FuncSpace& s);
ZeroSet zero_set(const FElem& x, const FuncSpace& s);
/// Disjointness decided in the family's cover.
bool is_disjoint_cover(const FElem& x, const FElem& y, const FuncSpace& s);
/// x <= y in X.
bool func_leq(const FElem& x, const FElem& y, const FuncSpace& s);

// ------------------------------------------------------------ zero-set ideals

/// I(Z) = {x in X : x vanishes on Z}, Z closed in [-1,1]. Used for the
/// C[-1,1]-covered families.
struct ZIdeal {
  ClosedSet zeros;
};

/// Common zero set of I(Z): Z plus the points forced by X's linear constraint.
ClosedSet linear_closure(const ClosedSet& z, const FuncSpace& s);
/// Common zero set of the positive part of I(Z).
ClosedSet positive_closure(const ClosedSet& z, const FuncSpace& s);

bool member(const FElem& x, const ZIdeal& i, const FuncSpace& s);
ZIdeal disjoint_complement(const ZIdeal& i, const FuncSpace& s);
ZIdeal band_generated(const ZIdeal& i, const FuncSpace& s);
/// Same ideal (canonical zero sets agree).
bool same_ideal(const ZIdeal& a, const ZIdeal& b, const FuncSpace& s);

/// An element of X vanishing on w with value +-1 at p (positive if requested).
std::optional<FElem> element_nonzero_at(const Rat& p, const ClosedSet& w, const FuncSpace& s,
                                        bool positive);

PredicateResult is_band(const ZIdeal& i, const FuncSpace& s);
PredicateResult is_directed(const ZIdeal& i, const FuncSpace& s);
PredicateResult is_s_closed(const ZIdeal& i, const FuncSpace& s);

// ------------------------------------------------- atomic-coordinate subspaces

/// Coordinates of an element of ex1_atom / band_h:
/// x = c 1_A + mu h + sum_a lambda_a (1_{a} + 1_{2}).
struct AtomCoeffs {
  Rat c, mu;
  std::map<Rat, Rat> lambda;
};
AtomCoeffs atom_coeffs(const FElem& x, const FuncSpace& s);
FElem from_atom_coeffs(const AtomCoeffs& a, const FuncSpace& s);

/// Subspaces {x : (c, mu) in head, atoms free or zero, optionally x(2) = 0}.
struct AtomSubspace {
  SubspaceBasis head{2};
  bool atoms_free = false;
  bool two_zero = false;

  bool contains(const FElem& x, const FuncSpace& s) const;
  friend bool operator==(const AtomSubspace& a, const AtomSubspace& b) {
    return a.head == b.head && a.atoms_free == b.atoms_free && a.two_zero == b.two_zero;
  }
};

AtomSubspace canonical(AtomSubspace w, const FuncSpace& s);
AtomSubspace disjoint_complement(const AtomSubspace& w, const FuncSpace& s);
AtomSubspace band_generated(const AtomSubspace& w, const FuncSpace& s);
std::string describe(const AtomSubspace& w, const FuncSpace& s);

/// Finite section of ex1_atom / band_h using k generic atom points; it is a
/// polyhedral pre-Riesz space with the same cover coordinates.
struct FiniteSection {
  PolySpace space;
  std::vector<Rat> atom_points;
  RVec coords(const FElem& x, const FuncSpace& s) const;
  SubspaceBasis restrict(const AtomSubspace& w) const;
};
FiniteSection finite_section(const FuncSpace& s, std::size_t k = 2);

PredicateResult is_band(const AtomSubspace& w, const FuncSpace& s);
PredicateResult is_directed(const AtomSubspace& w, const FuncSpace& s);
PredicateResult is_s_closed(const AtomSubspace& w, const FuncSpace& s);

// ------------------------------------------------------- suprema of families

/// Parametric families whose supremum is computed symbolically.
struct ParamFamily {
  enum class Kind {
    atom_pairs,       // {alpha (1_{t} + 1_{2}) : t in [0,1]}
    tent_sequence,    // f_n = 1 outside R + [-1/n,1/n], 0 on R + [-1/(n+1),1/(n+1)]
  };
  Kind kind = Kind::atom_pairs;
  Rat alpha = 1;
  std::vector<Rat> points;  // R for tent_sequence
  long n0 = 1, n1 = 40;     // prefix checked for sequences
};

struct FamilySup {
  bool exists = false;
  FElem sup;
  std::vector<std::string> certificate;  // checked facts, in order
};

FamilySup sup_parametric_family(const ParamFamily& fam, const FuncSpace& s);
/// Members of a tent sequence.
FElem tent_sequence_member(const std::vector<Rat>& points, long n);

// ------------------------------------------------------------ pervasiveness

/// Pervasiveness of the family; `samples` are cover elements y >= 0, y != 0
/// for which an explicit 0 < x <= y is constructed when the verdict is yes.
PredicateResult pervasive_func(const FuncSpace& s, const std::vector<FElem>& samples = {});

/// Refutes the Riesz decomposition property in example3_paq for the triple
/// (x1, x2, z): 0 <= z <= x1 + x2 has no decomposition z = z1 + z2 with
/// 0 <= z_i <= x_i.
PredicateResult rdp_refute_example3(const FElem& x1, const FElem& x2, const FElem& z,
                                    const FuncSpace& s);

/// Grid search for RDP counterexamples on namioka_pa (no decision procedure).
PredicateResult rdp_search_namioka(const FuncSpace& s, std::size_t trials, unsigned long seed);

// --------------------------------------------------- o-convergence certificates

/// Declares that members x_n in W order-converge to `limit`: |limit - x_n| <= y_n
/// with y_n decreasing and y_n vanishing outside the C/n-neighbourhood of the
/// finite set E (so inf y_n = 0 by continuity). Checked exactly for n0..n1.
struct OConvCertificate {
  std::function<FElem(long)> member;
  std::function<FElem(long)> dominator;
  FElem limit;
  std::vector<Rat> exceptional;
  Rat radius_constant = 1;
  long n0 = 1, n1 = 40;
};

struct OConvCheck {
  bool valid = false;
  long failed_n = 0;
  std::string failure;
};

/// Checks only the order convergence x_n -> limit (no membership in W).
OConvCheck check_order_convergence(const OConvCertificate& cert, const FuncSpace& s);

/// Members in W, order convergence, and limit in X outside W.
OConvCheck verify_not_o_closed_certificate(const OConvCertificate& cert,
                                           const std::function<bool(const FElem&)>& in_w,
                                           const FuncSpace& s);

/// Sequences of the non-o-closed certificate for the namioka ideal.
FElem namioka_g();
FElem namioka_g_n(long n);
FElem namioka_u_n(long n);          // corrected dominator
FElem namioka_u_n_printed(long n);  // dominator with the sign error

// --------------------------------------------------------------- examples

/// Lower-envelope constructor for ex1_atom: f_a in X with f <= f_a,
/// f_a(a) = f(a), f_a(2) = f(2); f is a bounded function given by a cover
/// element (generic value plus finitely many point values).
struct CoverPointFunction {
  Rat generic;
  std::map<Rat, Rat> values;  // points of [0,1] and the point 2
  Rat at(const Rat& t) const;
  Rat sup_norm() const;
};
FElem ex1_f_a(const CoverPointFunction& f, const Rat& a);

/// Least upper bound in the band family's Z-part of g_i = c_i 1 + lambda_i h.
FElem z_formula(const Rat& c1, const Rat& l1, const Rat& c2, const Rat& l2);

struct FlagRow {
  std::string name;
  Verdict expected = Verdict::unknown;
  PredicateResult computed;
  bool matches() const { return computed.verdict == expected; }
};

struct ExampleReport {
  std::string name;
  FuncSpace space;
  std::vector<FlagRow> flags;
  std::map<std::string, FElem> elements;
  std::vector<std::string> notes;
  bool ok() const;
};

std::vector<std::string> example_names();
/// Throws InputError for unknown names.
ExampleReport make_example(const std::string& name);

}  // namespace bandlab
