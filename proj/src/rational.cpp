#include "bandlab/rational.hpp"

#include <cctype>

namespace bandlab {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rat(mpz_class(num_s));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class d(std::string{den});
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rat r(mpz_class(num_s), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace bandlab
