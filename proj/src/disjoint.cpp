#include "bandlab/disjoint.hpp"

#include <algorithm>

namespace bandlab {

HPoly upper_set(const RMat& elements, const PolySpace& s) {
  if (elements.empty()) throw InputError("upper_set: empty set of elements");
  RVec rhs(s.m());
  for (std::size_t j = 0; j < s.m(); ++j) {
    for (std::size_t e = 0; e < elements.size(); ++e) {
      Rat v = dot(s.F[j], elements[e]);
      if (e == 0 || v > rhs[j]) rhs[j] = v;
    }
  }
  return HPoly(s.n, s.F, rhs);
}

bool is_disjoint_def(const RVec& x, const RVec& y, const PolySpace& s) {
  HPoly sum = upper_set({x + y, -(x + y)}, s);
  HPoly diff = upper_set({x - y, y - x}, s);
  return poly_equal(sum, diff);
}

bool is_disjoint_cover(const RVec& x, const RVec& y, const PolySpace& s) {
  RVec ix = s.embed(x);
  RVec iy = s.embed(y);
  for (std::size_t j = 0; j < s.m(); ++j) {
    if (ix[j] != 0 && iy[j] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> support(const RMat& elements, const PolySpace& s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.m(); ++j) {
    for (const auto& e : elements) {
      if (dot(s.F[j], e) != 0) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> support(const SubspaceBasis& w, const PolySpace& s) {
  if (w.ambient() != s.n) throw DimensionMismatch("support: subspace has wrong ambient dimension");
  return support(w.basis(), s);
}

SubspaceBasis restrict_cover_band(const std::vector<std::size_t>& coords, const PolySpace& s) {
  RMat rows;
  for (std::size_t j = 0; j < s.m(); ++j) {
    if (std::find(coords.begin(), coords.end(), j) == coords.end()) rows.push_back(s.F[j]);
  }
  return SubspaceBasis::kernel_of(rows, s.n);
}

namespace {

SubspaceBasis kernel_on(const std::vector<std::size_t>& coords, const PolySpace& s) {
  RMat rows;
  for (auto j : coords) rows.push_back(s.F[j]);
  return SubspaceBasis::kernel_of(rows, s.n);
}

}  // namespace

SubspaceBasis disjoint_complement(const RMat& elements, const PolySpace& s) {
  for (const auto& e : elements) {
    if (e.size() != s.n) throw DimensionMismatch("disjoint_complement: element has wrong dimension");
  }
  return kernel_on(support(elements, s), s);
}

SubspaceBasis disjoint_complement(const SubspaceBasis& w, const PolySpace& s) {
  return kernel_on(support(w, s), s);
}

SubspaceBasis band_generated(const RMat& elements, const PolySpace& s) {
  return disjoint_complement(disjoint_complement(elements, s), s);
}

SubspaceBasis band_generated(const SubspaceBasis& w, const PolySpace& s) {
  return disjoint_complement(disjoint_complement(w, s), s);
}

PredicateResult is_band(const SubspaceBasis& w, const PolySpace& s) {
  SubspaceBasis dd = band_generated(w, s);
  if (dd == w) return PredicateResult(Verdict::yes).because("W = W^dd (canonical bases agree)");
  for (const auto& b : dd.basis()) {
    if (!w.contains(b)) {
      return PredicateResult(Verdict::no)
          .with("element", b)
          .because("element of W^dd outside W");
    }
  }
  throw std::logic_error("is_band: W^dd differs from W yet contains no new element");
}

RestrictionExtensionReport check_restriction_extension(const SubspaceBasis& b, const PolySpace& s,
                                                       const std::optional<RMat>& a) {
  RestrictionExtensionReport rep;
  rep.extension_holds = restrict_cover_band(support(b, s), s) == b;
  rep.fordable = is_fordable(s);
  if (rep.fordable.yes()) {
    rep.restriction_checked = true;
    rep.restriction_holds = true;
    const std::size_t m = s.m();
    if (m > 16) throw InputError("check_restriction_extension: too many cover coordinates");
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      std::vector<std::size_t> t;
      for (std::size_t j = 0; j < m; ++j) {
        if (mask & (1ul << j)) t.push_back(j);
      }
      if (!is_band(restrict_cover_band(t, s), s).yes()) {
        rep.restriction_holds = false;
        rep.restriction_failure = t;
        break;
      }
    }
  }
  RMat elems = a ? *a : b.basis();
  SubspaceBasis lhs = restrict_cover_band(support(elems, s), s);
  SubspaceBasis rhs = elems.empty() ? SubspaceBasis(s.n) : band_generated(elems, s);
  rep.identity_holds = lhs == rhs;
  if (!rep.identity_holds) {
    for (const auto& v : lhs.basis()) {
      if (!rhs.contains(v)) rep.identity_witness = v;
    }
    for (const auto& v : rhs.basis()) {
      if (!lhs.contains(v)) rep.identity_witness = v;
    }
  }
  return rep;
}

}  // namespace bandlab
