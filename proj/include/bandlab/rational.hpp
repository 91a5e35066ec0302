#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bandlab {

/// Exact rational scalar. mpq_class keeps numerator/denominator in lowest
/// terms with a positive denominator after every arithmetic operation.
using Rat = mpq_class;

/// Raised for malformed user input (bad literals, mismatched dimensions,
/// unsupported shapes). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// p/q in lowest terms (mpq_class(p, q) alone does not canonicalize).
inline Rat make_rat(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Decimal points are rejected.
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace bandlab
