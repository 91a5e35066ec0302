#include "bandlab/pa.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bandlab {

// ---------------------------------------------------------------- PAFunc

PAFunc::PAFunc(const Rat& constant) : pts_{{Rat(-1), constant}, {Rat(1), constant}} {}

PAFunc::PAFunc(std::vector<std::pair<Rat, Rat>> points) : pts_(std::move(points)) {
  if (pts_.size() < 2 || pts_.front().first != -1 || pts_.back().first != 1) {
    throw InputError("PAFunc: breakpoints must start at -1 and end at 1");
  }
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (!(pts_[i - 1].first < pts_[i].first)) {
      throw InputError("PAFunc: breakpoints must be strictly increasing");
    }
  }
  canonicalize();
}

PAFunc PAFunc::affine(const Rat& a, const Rat& b) {
  return PAFunc(std::vector<std::pair<Rat, Rat>>{{Rat(-1), Rat(b - a)}, {Rat(1), Rat(a + b)}});
}

void PAFunc::canonicalize() {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& p : pts_) {
    if (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      Rat s1 = (b.second - a.second) / (b.first - a.first);
      Rat s2 = (p.second - b.second) / (p.first - b.first);
      if (s1 == s2) out.pop_back();
    }
    out.push_back(p);
  }
  pts_ = std::move(out);
}

std::vector<Rat> PAFunc::breakpoints() const {
  std::vector<Rat> out;
  for (const auto& p : pts_) out.push_back(p.first);
  return out;
}

std::pair<Rat, Rat> PAFunc::piece_coefficients(const Rat& lo, const Rat& hi) const {
  Rat mid = (lo + hi) / 2;
  std::size_t i = 1;
  if (mid >= 1) {
    i = pts_.size() - 1;
  } else if (mid > -1) {
    while (i + 1 < pts_.size() && pts_[i].first <= mid) ++i;
  }
  const auto& a = pts_[i - 1];
  const auto& b = pts_[i];
  Rat slope = (b.second - a.second) / (b.first - a.first);
  return {slope, Rat(a.second - slope * a.first)};
}

Rat PAFunc::operator()(const Rat& t) const {
  for (const auto& p : pts_) {
    if (p.first == t) return p.second;
  }
  auto [a, b] = piece_coefficients(t, t);
  return a * t + b;
}

std::vector<Rat> merge_breakpoints(const PAFunc& a, const PAFunc& b) {
  std::set<Rat> s;
  for (const auto& p : a.points()) s.insert(p.first);
  for (const auto& p : b.points()) s.insert(p.first);
  return {s.begin(), s.end()};
}

namespace {

PAFunc combine(const PAFunc& a, const PAFunc& b, const Rat& sa, const Rat& sb) {
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& t : merge_breakpoints(a, b)) pts.emplace_back(t, Rat(sa * a(t) + sb * b(t)));
  return PAFunc(std::move(pts));
}

PAFunc extremum(const PAFunc& a, const PAFunc& b, bool take_max) {
  std::set<Rat> ts;
  auto bp = merge_breakpoints(a, b);
  ts.insert(bp.begin(), bp.end());
  for (std::size_t i = 1; i < bp.size(); ++i) {
    Rat d0 = a(bp[i - 1]) - b(bp[i - 1]);
    Rat d1 = a(bp[i]) - b(bp[i]);
    if (sgn(d0) * sgn(d1) < 0) ts.insert(bp[i - 1] + (bp[i] - bp[i - 1]) * d0 / (d0 - d1));
  }
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& t : ts) {
    Rat va = a(t), vb = b(t);
    pts.emplace_back(t, take_max ? std::max(va, vb) : std::min(va, vb));
  }
  return PAFunc(std::move(pts));
}

}  // namespace

PAFunc operator+(const PAFunc& a, const PAFunc& b) { return combine(a, b, 1, 1); }
PAFunc operator-(const PAFunc& a, const PAFunc& b) { return combine(a, b, 1, -1); }
PAFunc operator*(const Rat& s, const PAFunc& a) { return combine(a, a, s, 0); }
PAFunc PAFunc::max(const PAFunc& a, const PAFunc& b) { return extremum(a, b, true); }
PAFunc PAFunc::min(const PAFunc& a, const PAFunc& b) { return extremum(a, b, false); }

// ---------------------------------------------------------------- FElem

FElem FElem::constant(const Rat& c) {
  FElem f;
  f.pa = PAFunc(c);
  f.extra = c;
  return f;
}

FElem FElem::from_pa(PAFunc p) {
  FElem f;
  f.pa = std::move(p);
  return f;
}

FElem FElem::square() {
  FElem f;
  f.quad = 1;
  return f;
}

Rat FElem::base(const Rat& t) const { return pa(t) + quad * t * t; }

Rat FElem::at(const Rat& t) const {
  Rat v = base(t);
  auto it = atoms.find(t);
  if (it != atoms.end()) v += it->second;
  return v;
}

Rat FElem::at_extra() const {
  auto it = atoms.find(Rat(2));
  return it == atoms.end() ? extra : Rat(extra + it->second);
}

FElem& FElem::canonicalize() {
  for (auto it = atoms.begin(); it != atoms.end();) {
    if (it->second == 0) {
      it = atoms.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

FElem operator+(const FElem& a, const FElem& b) {
  FElem r;
  r.pa = a.pa + b.pa;
  r.quad = a.quad + b.quad;
  r.atoms = a.atoms;
  for (const auto& [t, v] : b.atoms) r.atoms[t] += v;
  r.extra = a.extra + b.extra;
  return r.canonicalize();
}

FElem operator*(const Rat& s, const FElem& a) {
  FElem r;
  r.pa = s * a.pa;
  r.quad = s * a.quad;
  for (const auto& [t, v] : a.atoms) r.atoms[t] = s * v;
  r.extra = s * a.extra;
  return r.canonicalize();
}

FElem operator-(const FElem& a) { return Rat(-1) * a; }
FElem operator-(const FElem& a, const FElem& b) { return a + (-b); }

bool operator==(const FElem& a, const FElem& b) {
  return a.pa == b.pa && a.quad == b.quad && a.atoms == b.atoms && a.extra == b.extra;
}

bool FElem::is_zero() const { return *this == FElem(); }

std::string to_string(const FElem& f) {
  std::ostringstream os;
  os << "pa[";
  bool first = true;
  for (const auto& [t, v] : f.pa.points()) {
    if (!first) os << ", ";
    first = false;
    os << "(" << to_string(t) << ", " << to_string(v) << ")";
  }
  os << "]";
  if (f.quad != 0) os << " + " << to_string(f.quad) << " t^2";
  for (const auto& [t, v] : f.atoms) os << " + " << to_string(v) << " @" << to_string(t);
  if (f.extra != 0) os << " ; base@2 = " << to_string(f.extra);
  return os.str();
}

}  // namespace bandlab
