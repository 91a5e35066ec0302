#include <gmp.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "bandlab/pa.hpp"

namespace bandlab {

namespace {

std::optional<Rat> rational_sqrt(const Rat& d) {
  if (d < 0) return std::nullopt;
  if (!mpz_perfect_square_p(d.get_num_mpz_t()) || !mpz_perfect_square_p(d.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n, q;
  mpz_sqrt(n.get_mpz_t(), d.get_num_mpz_t());
  mpz_sqrt(q.get_mpz_t(), d.get_den_mpz_t());
  return Rat(n, q);
}

/// Sorted cut points of the interval domain: lo, hi, and pa breakpoints in between.
std::vector<Rat> domain_cuts(const FElem& x, const Domain& d) {
  std::set<Rat> s{d.lo, d.hi};
  for (const auto& t : x.pa.breakpoints()) {
    if (t > d.lo && t < d.hi) s.insert(t);
  }
  return {s.begin(), s.end()};
}

void remove_point(std::vector<ZeroPiece>& pieces, const Rat& p) {
  std::vector<ZeroPiece> out;
  for (const auto& z : pieces) {
    bool inside = (z.lo < p || (z.lo == p && z.lo_closed)) && (p < z.hi || (p == z.hi && z.hi_closed));
    if (!inside) {
      out.push_back(z);
      continue;
    }
    if (z.lo < p) out.push_back({z.lo, p, z.lo_closed, false});
    if (p < z.hi) out.push_back({p, z.hi, false, z.hi_closed});
  }
  pieces = std::move(out);
}

}  // namespace

bool ZeroSet::contains(const Rat& t) const {
  if (whole_line) return true;
  for (const auto& z : pieces) {
    bool lo_ok = z.lo < t || (z.lo == t && z.lo_closed);
    bool hi_ok = t < z.hi || (t == z.hi && z.hi_closed);
    if (lo_ok && hi_ok) return true;
  }
  return false;
}

void ZeroSet::normalize() {
  std::vector<ZeroPiece> ps;
  for (const auto& z : pieces) {
    if (z.lo < z.hi || (z.lo == z.hi && z.lo_closed && z.hi_closed)) ps.push_back(z);
  }
  std::sort(ps.begin(), ps.end(), [](const ZeroPiece& a, const ZeroPiece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<ZeroPiece> out;
  for (const auto& z : ps) {
    if (!out.empty()) {
      auto& last = out.back();
      bool touch = last.hi > z.lo || (last.hi == z.lo && (last.hi_closed || z.lo_closed));
      if (touch) {
        if (z.hi > last.hi) {
          last.hi = z.hi;
          last.hi_closed = z.hi_closed;
        } else if (z.hi == last.hi) {
          last.hi_closed = last.hi_closed || z.hi_closed;
        }
        continue;
      }
    }
    out.push_back(z);
  }
  pieces = std::move(out);
}

std::string ZeroSet::describe() const {
  std::ostringstream os;
  if (whole_line) {
    os << "R";
  } else {
    bool first = true;
    for (const auto& z : pieces) {
      if (!first) os << " u ";
      first = false;
      if (z.lo == z.hi) {
        os << "{" << to_string(z.lo) << "}";
      } else {
        os << (z.lo_closed ? "[" : "]") << to_string(z.lo) << "," << to_string(z.hi)
           << (z.hi_closed ? "]" : "[");
      }
    }
    if (first) os << "{}";
  }
  if (extra_point) os << " u {2}";
  if (at_infinity) os << " u {inf}";
  if (omitted_irrational) os << " (+ irrational roots)";
  return os.str();
}

ZeroSet zero_set(const FElem& x, const Domain& d) {
  ZeroSet z;
  if (d.kind == Domain::Kind::real_line) {
    auto [b, c] = x.pa.piece_coefficients(0, 0);
    const Rat& a = x.quad;
    z.at_infinity = (a == 0);
    if (a == 0 && b == 0) {
      z.whole_line = (c == 0);
      return z;
    }
    if (a == 0) {
      Rat r = -c / b;
      z.pieces.push_back({r, r});
    } else {
      Rat disc = b * b - 4 * a * c;
      if (disc >= 0) {
        auto sq = rational_sqrt(disc);
        if (!sq) {
          z.omitted_irrational = true;
        } else {
          for (Rat s : {Rat(-*sq), *sq}) {
            Rat r = (-b + s) / (2 * a);
            z.pieces.push_back({r, r});
          }
        }
      }
    }
    z.normalize();
    return z;
  }
  auto cuts = domain_cuts(x, d);
  if (cuts.size() == 1) {
    if (x.base(cuts[0]) == 0) z.pieces.push_back({cuts[0], cuts[0]});
  }
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const Rat& lo = cuts[i - 1];
    const Rat& hi = cuts[i];
    auto [b, c] = x.pa.piece_coefficients(lo, hi);
    const Rat& a = x.quad;
    std::vector<Rat> roots;
    if (a == 0 && b == 0) {
      if (c == 0) z.pieces.push_back({lo, hi});
      continue;
    }
    if (a == 0) {
      roots.push_back(-c / b);
    } else {
      Rat disc = b * b - 4 * a * c;
      if (disc >= 0) {
        auto sq = rational_sqrt(disc);
        if (!sq) {
          z.omitted_irrational = true;
        } else {
          roots.push_back((-b - *sq) / (2 * a));
          roots.push_back((-b + *sq) / (2 * a));
        }
      }
    }
    for (const auto& r : roots) {
      if (r >= lo && r <= hi) z.pieces.push_back({r, r});
    }
  }
  z.normalize();
  for (const auto& [p, v] : x.atoms) {
    if (p < d.lo || p > d.hi) continue;
    if (x.at(p) == 0) {
      z.pieces.push_back({p, p});
    } else {
      remove_point(z.pieces, p);
    }
    z.normalize();
  }
  z.extra_point = d.extra_point && x.at_extra() == 0;
  return z;
}

bool zero_sets_cover(const ZeroSet& a, const ZeroSet& b, const Domain& d) {
  if (d.extra_point && !a.extra_point && !b.extra_point) return false;
  if (d.kind == Domain::Kind::real_line) {
    if (!a.at_infinity && !b.at_infinity) return false;
    return a.whole_line || b.whole_line;
  }
  ZeroSet u;
  u.pieces = a.pieces;
  u.pieces.insert(u.pieces.end(), b.pieces.begin(), b.pieces.end());
  u.normalize();
  for (const auto& z : u.pieces) {
    bool lo_ok = z.lo < d.lo || (z.lo == d.lo && z.lo_closed);
    bool hi_ok = z.hi > d.hi || (z.hi == d.hi && z.hi_closed);
    if (lo_ok && hi_ok) return true;
  }
  return false;
}

bool quadratic_nonneg_on(const Rat& a, const Rat& b, const Rat& c, const Rat& lo, const Rat& hi) {
  auto val = [&](const Rat& t) { return Rat(a * t * t + b * t + c); };
  if (val(lo) < 0 || val(hi) < 0) return false;
  if (a > 0) {
    Rat v = -b / (2 * a);
    if (v > lo && v < hi && val(v) < 0) return false;
  }
  return true;
}

bool nonnegative(const FElem& x, const Domain& d) {
  if (d.kind == Domain::Kind::real_line) {
    auto [b, c] = x.pa.piece_coefficients(0, 0);
    const Rat& a = x.quad;
    if (a < 0) return false;
    if (a == 0) return b == 0 && c >= 0;
    return b * b - 4 * a * c <= 0;
  }
  auto cuts = domain_cuts(x, d);
  if (cuts.size() == 1 && x.base(cuts[0]) < 0) return false;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    auto [b, c] = x.pa.piece_coefficients(cuts[i - 1], cuts[i]);
    if (!quadratic_nonneg_on(x.quad, b, c, cuts[i - 1], cuts[i])) return false;
  }
  for (const auto& [p, v] : x.atoms) {
    if (p >= d.lo && p <= d.hi && x.at(p) < 0) return false;
  }
  if (d.extra_point && x.at_extra() < 0) return false;
  return true;
}

// ---------------------------------------------------------------- ClosedSet

ClosedSet::ClosedSet(std::vector<std::pair<Rat, Rat>> intervals) : iv_(std::move(intervals)) {
  for (const auto& [a, b] : iv_) {
    if (a > b || a < -1 || b > 1) throw InputError("ClosedSet: interval outside [-1,1] or reversed");
  }
  normalize();
}

void ClosedSet::normalize() {
  std::sort(iv_.begin(), iv_.end());
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& iv : iv_) {
    if (!out.empty() && out.back().second >= iv.first) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(iv);
    }
  }
  iv_ = std::move(out);
}

bool ClosedSet::contains(const Rat& t) const {
  for (const auto& [a, b] : iv_) {
    if (a <= t && t <= b) return true;
  }
  return false;
}

bool ClosedSet::contains(const ClosedSet& other) const {
  for (const auto& [c, d] : other.iv_) {
    bool ok = false;
    for (const auto& [a, b] : iv_) ok = ok || (a <= c && d <= b);
    if (!ok) return false;
  }
  return true;
}

bool ClosedSet::finite() const {
  for (const auto& [a, b] : iv_) {
    if (a != b) return false;
  }
  return true;
}

ClosedSet ClosedSet::unite(const ClosedSet& other) const {
  auto all = iv_;
  all.insert(all.end(), other.iv_.begin(), other.iv_.end());
  return ClosedSet(std::move(all));
}

ClosedSet ClosedSet::closure_of_complement() const {
  std::vector<std::pair<Rat, Rat>> gaps;
  if (iv_.empty()) return whole();
  Rat cur = -1;
  for (const auto& [a, b] : iv_) {
    if (a > cur) gaps.push_back({cur, a});
    cur = b;
  }
  if (cur < 1) gaps.push_back({cur, Rat(1)});
  return ClosedSet(std::move(gaps));
}

std::optional<Rat> ClosedSet::point_not_in(const ClosedSet& other) const {
  std::set<Rat> crit;
  for (const auto& [a, b] : iv_) crit.insert({a, b});
  for (const auto& [a, b] : other.iv_) crit.insert({a, b});
  std::vector<Rat> pts(crit.begin(), crit.end());
  std::vector<Rat> cand = pts;
  for (std::size_t i = 1; i < pts.size(); ++i) cand.push_back((pts[i - 1] + pts[i]) / 2);
  for (const auto& t : cand) {
    if (contains(t) && !other.contains(t)) return t;
  }
  return std::nullopt;
}

std::optional<Rat> ClosedSet::point_outside() const { return whole().point_not_in(*this); }

std::string ClosedSet::describe() const {
  if (iv_.empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, b] : iv_) {
    if (!first) os << " u ";
    first = false;
    if (a == b) {
      os << "{" << to_string(a) << "}";
    } else {
      os << "[" << to_string(a) << "," << to_string(b) << "]";
    }
  }
  return os.str();
}

}  // namespace bandlab
