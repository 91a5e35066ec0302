#include "bandlab/polyspace.hpp"

#include <algorithm>

#include "bandlab/lp.hpp"

namespace bandlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

RVec PolySpace::embed(const RVec& x) const {
  if (x.size() != n) throw DimensionMismatch("embed: element has wrong dimension");
  return mat_vec(F, x);
}

bool PolySpace::in_cone(const RVec& x) const {
  for (const auto& c : embed(x)) {
    if (c < 0) return false;
  }
  return true;
}

namespace {

void sort_unique(RMat& rows) {
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

RMat nonneg_rows(std::size_t k) {
  RMat rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(unit(k, i));
  return rows;
}

// Nonzero x in K with -x in K, if the rays generate a cone containing a line.
std::optional<RVec> line_in_cone(const RMat& rays, std::size_t n) {
  const std::size_t k = rays.size();
  HPoly region(k, nonneg_rows(k), zeros(k));
  region = region.with_equality(RVec(k, Rat(1)), 1);
  for (std::size_t c = 0; c < n; ++c) {
    RVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = rays[i][c];
    if (!is_zero(row)) region = region.with_equality(row, 0);
  }
  auto lambda = lp_feasible_point(region);
  if (!lambda) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i) {
    if ((*lambda)[i] > 0) return (*lambda)[i] * rays[i];
  }
  return std::nullopt;
}

}  // namespace

PolySpace build_space(const ConeSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw InputError("cone spec: dimension must be at least 1");
  if (spec.vectors.empty()) throw InputError("cone spec: no vectors given");
  for (const auto& v : spec.vectors) {
    if (v.size() != n) throw DimensionMismatch("cone spec: vector length differs from dimension");
  }
  PolySpace s;
  s.n = n;
  if (spec.kind == ConeSpec::Kind::rays) {
    RMat rays;
    for (const auto& v : spec.vectors) {
      if (!is_zero(v)) rays.push_back(canonical_ray(v));
    }
    sort_unique(rays);
    if (rays.empty()) throw NotGenerating("cone spec: only zero rays", unit(n, 0));
    if (auto line = line_in_cone(rays, n)) {
      throw NotPointed("cone is not pointed: contains the line through " + to_string(*line), *line);
    }
    if (rank(rays, n) < n) {
      RVec f = nullspace(rays, n).front();
      throw NotGenerating("cone is not generating: functional " + to_string(f) + " vanishes on it", f);
    }
    s.F = cone_generators(rays, n).rays;
    // Descending lexicographic order: a coordinate cone gets F = e_1, ..., e_n.
    std::reverse(s.F.begin(), s.F.end());
  } else {
    RMat rows;
    for (const auto& v : spec.vectors) {
      if (is_zero(v)) throw InputError("cone spec: inequality with zero normal");
      rows.push_back(canonical_ray(v));
    }
    ConeGenerators g = cone_generators(rows, n);
    if (!g.lineality.empty()) {
      const RVec& w = g.lineality.front();
      throw NotPointed("cone is not pointed: contains the line through " + to_string(w), w);
    }
    if (rank(g.rays, n) < n) {
      RVec f = g.rays.empty() ? unit(n, 0) : nullspace(g.rays, n).front();
      throw NotGenerating("cone is not generating: functional " + to_string(f) + " vanishes on it", f);
    }
    RMat extreme = cone_generators(g.rays, n).rays;
    for (const auto& r : rows) {
      bool is_extreme = std::find(extreme.begin(), extreme.end(), r) != extreme.end();
      bool seen = std::find(s.F.begin(), s.F.end(), r) != s.F.end();
      if (is_extreme && !seen) s.F.push_back(r);
    }
  }
  s.cone_h = HPoly::cone(n, s.F);
  s.cone_v = cone_generators(s.F, n).rays;
  return s;
}

bool order_leq(const RVec& x, const RVec& y, const PolySpace& s) {
  if (x.size() != s.n || y.size() != s.n) throw DimensionMismatch("order_leq: wrong dimension");
  return s.in_cone(y - x);
}

namespace {

// phi_k: the k-th coordinate functional restricted to U, in basis coordinates.
RMat coordinate_functionals(const SubspaceBasis& u) {
  const RMat& b = u.basis();
  RMat phi(u.ambient(), zeros(b.size()));
  for (std::size_t l = 0; l < b.size(); ++l) {
    for (std::size_t k = 0; k < u.ambient(); ++k) phi[k][l] = b[l][k];
  }
  return phi;
}

}  // namespace

PredicateResult is_order_dense(const SubspaceBasis& u, std::size_t m) {
  if (u.ambient() != m) throw DimensionMismatch("is_order_dense: ambient dimension differs");
  RMat phi = coordinate_functionals(u);
  const std::size_t d = u.dim();
  for (std::size_t j = 0; j < m; ++j) {
    if (is_zero(phi[j])) {
      return PredicateResult(Verdict::no)
          .with("coordinate", static_cast<long>(j + 1))
          .with("y", RVec(-unit(m, j)))
          .because("coordinate vanishes on the subspace, so -e_j is not an infimum of elements above it");
    }
    HPoly region(m, nonneg_rows(m), zeros(m));
    for (std::size_t l = 0; l < d; ++l) {
      RVec row(m);
      for (std::size_t k = 0; k < m; ++k) row[k] = phi[k][l];
      region = region.with_equality(row, phi[j][l]);
    }
    RVec others(m, Rat(1));
    others[j] = 0;
    LpResult r = lp_optimize(others, region, Sense::maximize);
    bool fails = r.status == LpStatus::unbounded ||
                 (r.status == LpStatus::optimal && *r.value > 0);
    if (fails) {
      RVec lambda = *r.witness;
      if (r.status == LpStatus::unbounded) lambda = lambda + *r.ray;
      return PredicateResult(Verdict::no)
          .with("coordinate", static_cast<long>(j + 1))
          .with("lambda", lambda)
          .because("phi_j is a nonnegative combination of the other coordinate functionals (lambda != e_j)");
    }
  }
  return PredicateResult(Verdict::yes)
      .because("every coordinate functional is an extreme, non-repeated generator of the dual cone");
}

std::optional<RVec> order_dense_inf(const SubspaceBasis& u, const RVec& y) {
  const std::size_t m = u.ambient();
  if (y.size() != m) throw DimensionMismatch("order_dense_inf: wrong length");
  RMat phi = coordinate_functionals(u);
  const std::size_t d = u.dim();
  RMat rows;
  RVec rhs;
  for (std::size_t k = 0; k < m; ++k) {
    if (is_zero(phi[k])) {
      if (y[k] > 0) return std::nullopt;
      continue;
    }
    rows.push_back(phi[k]);
    rhs.push_back(y[k]);
  }
  RVec out = zeros(m);
  if (d == 0) return out;
  HPoly region(d, rows, rhs);
  for (std::size_t k = 0; k < m; ++k) {
    if (is_zero(phi[k])) continue;
    LpResult r = lp_optimize(phi[k], region, Sense::minimize);
    if (r.status != LpStatus::optimal) return std::nullopt;
    out[k] = *r.value;
  }
  return out;
}

PredicateResult is_order_dense_in(const SubspaceBasis& u, const SubspaceBasis& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("is_order_dense_in: ambient dimensions differ");
  if (!v.contains(u)) throw PreconditionViolated("is_order_dense_in: U is not contained in V");
  if (v.dim() == 0) return PredicateResult(Verdict::yes).because("V = {0}");
  RMat phi = coordinate_functionals(v);
  ConeSpec spec{ConeSpec::Kind::inequalities, v.dim(), {}};
  for (const auto& p : phi) {
    if (!is_zero(p)) spec.vectors.push_back(p);
  }
  PolySpace vs;
  try {
    vs = build_space(spec);
  } catch (const NotGenerating&) {
    return PredicateResult(Verdict::unknown)
        .because("V's positive cone is not generating; no cover is constructed for V");
  }
  RMat images;
  for (const auto& b : u.basis()) images.push_back(vs.embed(*v.coordinates(b)));
  PredicateResult r = is_order_dense(SubspaceBasis(vs.m(), images), vs.m());
  r.because("density of U in V is decided inside the functional cover of V");
  return r;
}

PredicateResult is_lattice_rdp(const PolySpace& s) {
  PredicateResult r(s.m() == s.n ? Verdict::yes : Verdict::no);
  r.with("m", static_cast<long>(s.m())).with("n", static_cast<long>(s.n));
  r.because(s.m() == s.n ? "simplicial cone: i is an order isomorphism onto R^n, a vector lattice"
                         : "more extreme dual rays than the dimension: not a lattice");
  r.because("for finite-dimensional spaces with a closed generating cone, RDP holds iff the space is a lattice");
  return r;
}

PredicateResult rdp_witness_check(const PolySpace& s, const RVec& x1, const RVec& x2,
                                  const RVec& z) {
  for (const RVec* v : {&x1, &x2, &z}) {
    if (v->size() != s.n) throw DimensionMismatch("rdp_witness_check: wrong dimension");
    if (!s.in_cone(*v)) throw PreconditionViolated("rdp_witness_check: argument not positive");
  }
  if (!order_leq(z, x1 + x2, s)) throw PreconditionViolated("rdp_witness_check: z is not below x1 + x2");
  // z1 with 0 <= z1 <= x1 and 0 <= z - z1 <= x2.
  RMat rows;
  RVec rhs;
  auto add = [&](const RVec& row, const Rat& b) {
    rows.push_back(row);
    rhs.push_back(b);
  };
  for (const auto& f : s.F) {
    add(f, 0);
    add(-f, -dot(f, x1));
    add(-f, -dot(f, z));
    add(f, dot(f, z) - dot(f, x2));
  }
  HPoly region(s.n, rows, rhs);
  LpResult r = lp_optimize(zeros(s.n), region, Sense::minimize);
  if (r.status == LpStatus::infeasible) {
    return PredicateResult(Verdict::no)
        .with("farkas", r.dual)
        .because("Farkas certificate: no z1 with 0 <= z1 <= x1, 0 <= z - z1 <= x2");
  }
  RVec z1 = *r.witness;
  return PredicateResult(Verdict::yes).with("z1", z1).with("z2", RVec(z - z1)).because("explicit decomposition");
}

namespace {

PredicateResult unit_images(const PolySpace& s, const char* yes_reason) {
  RMat preimages;
  for (std::size_t j = 0; j < s.m(); ++j) {
    auto x = solve(s.F, unit(s.m(), j), s.n);
    if (!x) {
      return PredicateResult(Verdict::no)
          .with("coordinate", static_cast<long>(j + 1))
          .with("blocker", unit(s.m(), j))
          .because("e_j is not in i(X); any 0 <= v <= e_j is a multiple of e_j, so no image fits below e_j");
    }
    preimages.push_back(*x);
  }
  return PredicateResult(Verdict::yes).with("unit_preimages", preimages).because(yes_reason);
}

}  // namespace

PredicateResult is_pervasive(const PolySpace& s) {
  return unit_images(s, "every cover unit vector e_j lies in i(X)");
}

PredicateResult is_fordable(const PolySpace& s) {
  PredicateResult r = unit_images(s, "for every j some x has supp(i(x)) = {j}");
  r.because("for this backend fordable coincides with pervasive (both reduce to e_j in i(X))");
  return r;
}

std::optional<RVec> cover_section_sup(const PolySpace& s, const RVec& lo, const RVec& hi) {
  if (lo.size() != s.m() || hi.size() != s.m()) throw DimensionMismatch("cover_section_sup: wrong length");
  RMat rows;
  RVec rhs;
  for (std::size_t j = 0; j < s.m(); ++j) {
    rows.push_back(s.F[j]);
    rhs.push_back(lo[j]);
    rows.push_back(-s.F[j]);
    rhs.push_back(-hi[j]);
  }
  HPoly region(s.n, rows, rhs);
  RVec out(s.m());
  for (std::size_t j = 0; j < s.m(); ++j) {
    LpResult r = lp_optimize(s.F[j], region, Sense::maximize);
    if (r.status == LpStatus::infeasible) return std::nullopt;
    out[j] = *r.value;
  }
  return out;
}

PervasiveReport pervasive_certificates(const PolySpace& s, const RMat& samples,
                                       const std::optional<RVec>& shift) {
  PervasiveReport rep;
  rep.pervasive = is_pervasive(s);
  RVec a = zeros(s.n);
  if (shift) {
    a = *shift;
  } else {
    for (const auto& r : s.cone_v) a = a + r;
  }
  RVec ia = s.embed(a);
  RMat ys = samples;
  if (rep.pervasive.no()) ys.push_back(rep.pervasive.get<RVec>("blocker"));
  bool all_hold = true;
  for (const auto& y : ys) {
    if (y.size() != s.m()) throw DimensionMismatch("pervasive_certificates: sample has wrong length");
    if (is_zero(y) || std::any_of(y.begin(), y.end(), [](const Rat& c) { return c < 0; })) {
      throw PreconditionViolated("pervasive_certificates: samples must be positive and nonzero");
    }
    PervasiveSample ps;
    ps.y = y;
    ps.section_sup = *cover_section_sup(s, zeros(s.m()), y);
    ps.empty_section = is_zero(ps.section_sup);
    ps.cond_iii = !ps.empty_section && ps.section_sup == y;
    RVec shifted = ia + y;
    RVec ssup = *cover_section_sup(s, ia, shifted);
    ps.cond_ii = ssup != ia;
    ps.cond_iv = ps.cond_ii && ssup == shifted;
    all_hold = all_hold && ps.cond_ii && ps.cond_iii && ps.cond_iv;
    rep.samples.push_back(std::move(ps));
  }
  rep.consistent = rep.pervasive.yes() ? all_hold : !all_hold;
  return rep;
}

}  // namespace bandlab
