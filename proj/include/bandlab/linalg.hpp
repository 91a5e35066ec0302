#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandlab/rational.hpp"

namespace bandlab {

using RVec = std::vector<Rat>;
/// Row-major: a list of rows.
using RMat = std::vector<RVec>;

RVec zeros(std::size_t n);
RVec unit(std::size_t n, std::size_t j);
Rat dot(const RVec& a, const RVec& b);
RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator-(const RVec& a);
RVec operator*(const Rat& s, const RVec& a);
bool is_zero(const RVec& a);
RVec mat_vec(const RMat& a, const RVec& x);
RMat transpose(const RMat& a, std::size_t cols);
RMat mat_mul(const RMat& a, const RMat& b, std::size_t inner_cols);

/// Scales v by 1/|first nonzero| so the first nonzero entry is +1 or -1.
/// Direction is preserved; used for rays.
RVec canonical_ray(RVec v);
/// Scales v so that its first nonzero entry is exactly 1 (sign may flip);
/// used for lines and lineality directions.
RVec canonical_line(RVec v);

bool lex_less(const RVec& a, const RVec& b);

std::string to_string(const RVec& v);

struct EchelonForm {
  RMat rows;                       // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row echelon form of the given rows (each of length `cols`).
EchelonForm rref(const RMat& rows, std::size_t cols);
std::size_t rank(const RMat& rows, std::size_t cols);

/// Basis of {x : A x = 0}.
RMat nullspace(const RMat& a, std::size_t cols);

/// Some solution of A x = b, or nullopt if none exists.
std::optional<RVec> solve(const RMat& a, const RVec& b, std::size_t cols);

/// Finite-dimensional linear subspace of Q^n stored in canonical reduced
/// echelon form, so two bases span the same space iff they compare equal.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}
  SubspaceBasis(std::size_t ambient, const RMat& spanning);

  static SubspaceBasis whole(std::size_t ambient);
  /// {x : rows * x = 0}
  static SubspaceBasis kernel_of(const RMat& rows, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const RMat& basis() const { return basis_; }

  bool contains(const RVec& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coefficients c with v = sum c_i basis_i, if v lies in the subspace.
  std::optional<RVec> coordinates(const RVec& v) const;
  /// Linear functionals whose common kernel is this subspace.
  RMat annihilator() const;

  SubspaceBasis intersect(const SubspaceBasis& other) const;
  SubspaceBasis join(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  RMat basis_;
};

}  // namespace bandlab
