#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bandlab/ideals.hpp"

namespace bandlab {

/// Deterministic integer draws from a 64-bit Mersenne twister. The mapping
/// from engine output to integers is fixed here (not left to the standard
/// library's distributions) so generated instances are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  Rat rational(long lo, long hi, long den);

 private:
  std::mt19937_64 eng_;
};

/// Random pointed generating cone in R^n with exactly m extreme dual rays,
/// as an inequality spec. Rows are points of the moment curve
/// (1, x, ..., x^{n-1}) at distinct integers, mapped by a random invertible
/// integer matrix; rejection-sampled until build_space validates.
/// Requires 2 <= n <= 6, n <= m <= 2n+2, and m = 2 when n = 2.
ConeSpec random_cone(std::uint64_t seed, std::size_t n, std::size_t m);

/// The randomized corpus: for each seed a cone with 2 <= n <= n_max and
/// n <= m <= min(2n+2, n+3), drawn from the seed.
struct CorpusCone {
  std::size_t n = 0, m = 0;
  ConeSpec spec;
};
CorpusCone corpus_cone(std::uint64_t seed, std::size_t n_max = 4);

/// Ideal candidates for the theorem suites: every restricted cover band
/// (up to 64 coordinate subsets), spans of extreme rays and of pairs of
/// extreme rays, and a random line.
std::vector<NamedSubspace> candidate_subspaces(const PolySpace& s, std::uint64_t seed);

/// Sample elements of X (random integer combinations of extreme rays and
/// random vectors).
RMat sample_elements(const PolySpace& s, std::uint64_t seed, std::size_t count);

/// Sample cover elements y >= 0, y != 0 of R^m.
RMat sample_cover_positive(std::size_t m, std::uint64_t seed, std::size_t count);

/// A chain U in V in R^m with U = i(X) for a random cone and V = U plus
/// random directions.
struct DenseChain {
  std::size_t m = 0;
  SubspaceBasis u, v;
};
DenseChain random_dense_chain(std::uint64_t seed);

}  // namespace bandlab
