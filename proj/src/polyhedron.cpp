#include "bandlab/polyhedron.hpp"

#include <algorithm>

#include "bandlab/lp.hpp"

namespace bandlab {

HPoly::HPoly(std::size_t n, RMat a, RVec b) : n_(n), a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) throw DimensionMismatch("polyhedron: row count differs from rhs length");
  for (const auto& row : a_) {
    if (row.size() != n_) throw DimensionMismatch("polyhedron: row length differs from dimension");
    if (is_zero(row)) throw InputError("polyhedron: inequality with zero normal");
  }
}

HPoly HPoly::cone(std::size_t n, RMat a) {
  RVec b = zeros(a.size());
  return HPoly(n, std::move(a), std::move(b));
}

bool HPoly::contains(const RVec& x) const {
  if (x.size() != n_) throw DimensionMismatch("polyhedron membership: wrong point length");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (dot(a_[i], x) < b_[i]) return false;
  }
  return true;
}

HPoly HPoly::intersect(const HPoly& other) const {
  if (other.n_ != n_) throw DimensionMismatch("polyhedron intersection: dimensions differ");
  RMat a = a_;
  RVec b = b_;
  a.insert(a.end(), other.a_.begin(), other.a_.end());
  b.insert(b.end(), other.b_.begin(), other.b_.end());
  return HPoly(n_, std::move(a), std::move(b));
}

HPoly HPoly::with_equality(const RVec& row, const Rat& rhs) const {
  RMat a = a_;
  RVec b = b_;
  a.push_back(row);
  b.push_back(rhs);
  a.push_back(-row);
  b.push_back(-rhs);
  return HPoly(n_, std::move(a), std::move(b));
}

namespace {

void sort_unique(RMat& rows) {
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

struct DdRay {
  RVec w;
  std::vector<bool> zero;  // zero[i]: processed row i is tight on w
};

}  // namespace

ConeGenerators cone_generators(const RMat& p, std::size_t n) {
  for (const auto& row : p) {
    if (row.size() != n) throw DimensionMismatch("cone generators: row length differs from dimension");
  }
  ConeGenerators out;
  out.lineality = SubspaceBasis(n, nullspace(p, n)).basis();
  EchelonForm e = rref(p, n);
  const RMat& q = e.rows;  // basis of the row space
  const std::size_t r = q.size();
  if (r == 0) return out;

  // Reparametrize z = sum_l w_l q_l; the cone in w-space is pointed.
  const std::size_t k = p.size();
  RMat m(k, zeros(r));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < r; ++l) m[i][l] = dot(p[i], q[l]);
  }

  // Initial simplicial cone from r independent rows.
  std::vector<std::size_t> chosen;
  RMat chosen_rows;
  for (std::size_t i = 0; i < k && chosen.size() < r; ++i) {
    RMat trial = chosen_rows;
    trial.push_back(m[i]);
    if (rank(trial, r) == trial.size()) {
      chosen.push_back(i);
      chosen_rows = std::move(trial);
    }
  }
  std::vector<bool> processed(k, false);
  for (auto i : chosen) processed[i] = true;

  auto zero_pattern = [&](const RVec& w) {
    std::vector<bool> z(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      if (processed[i] && dot(m[i], w) == 0) z[i] = true;
    }
    return z;
  };

  std::vector<DdRay> rays;
  for (std::size_t c = 0; c < r; ++c) {
    RVec rhs = unit(r, c);
    auto w = solve(chosen_rows, rhs, r);
    rays.push_back({canonical_ray(*w), {}});
  }
  for (auto& ray : rays) ray.zero = zero_pattern(ray.w);

  for (std::size_t i = 0; i < k; ++i) {
    if (processed[i]) continue;
    const RVec& a = m[i];
    std::vector<DdRay> pos, neg, zer;
    for (auto& ray : rays) {
      Rat v = dot(a, ray.w);
      if (v > 0) pos.push_back(ray);
      else if (v < 0) neg.push_back(ray);
      else zer.push_back(ray);
    }
    std::vector<DdRay> next = pos;
    next.insert(next.end(), zer.begin(), zer.end());
    for (const auto& pr : pos) {
      for (const auto& nr : neg) {
        RMat common;
        for (std::size_t t = 0; t < k; ++t) {
          if (pr.zero[t] && nr.zero[t]) common.push_back(m[t]);
        }
        if (r >= 2 && (common.size() < r - 2 || rank(common, r) != r - 2)) continue;
        RVec w = dot(a, pr.w) * nr.w - dot(a, nr.w) * pr.w;
        next.push_back({canonical_ray(w), {}});
      }
    }
    processed[i] = true;
    for (auto& ray : next) ray.zero = zero_pattern(ray.w);
    rays = std::move(next);
  }

  for (const auto& ray : rays) {
    RVec z = zeros(n);
    for (std::size_t l = 0; l < r; ++l) z = z + ray.w[l] * q[l];
    out.rays.push_back(canonical_ray(z));
  }
  sort_unique(out.rays);
  return out;
}

VPoly dd_convert(const HPoly& p) {
  const std::size_t n = p.dim();
  RMat hom;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    RVec row = p.a()[i];
    row.push_back(-p.b()[i]);
    hom.push_back(std::move(row));
  }
  hom.push_back(unit(n + 1, n));
  ConeGenerators g = cone_generators(hom, n + 1);

  VPoly v;
  v.n = n;
  for (const auto& z : g.rays) {
    RVec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
    const Rat& t = z[n];
    if (t > 0) {
      v.vertices.push_back((1 / t) * x);
    } else {
      v.rays.push_back(canonical_ray(x));
    }
  }
  if (v.vertices.empty()) {
    v.rays.clear();
    return v;
  }
  RMat lin;
  for (const auto& l : g.lineality) lin.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
  v.lineality = SubspaceBasis(n, lin).basis();
  sort_unique(v.vertices);
  sort_unique(v.rays);
  return v;
}

HPoly dd_convert(const VPoly& v) {
  const std::size_t n = v.n;
  if (v.empty()) {
    if (n == 0) throw InputError("polyhedron: empty set in dimension 0 has no inequality form");
    return HPoly(n, {unit(n, 0), -unit(n, 0)}, {Rat(1), Rat(0)});
  }
  RMat gens;
  auto add = [&](const RVec& x, int t) {
    if (x.size() != n) throw DimensionMismatch("polyhedron generator: wrong length");
    RVec row = x;
    row.push_back(t);
    gens.push_back(std::move(row));
  };
  for (const auto& x : v.vertices) add(x, 1);
  for (const auto& x : v.rays) add(x, 0);
  for (const auto& x : v.lineality) {
    add(x, 0);
    add(-x, 0);
  }
  ConeGenerators dual = cone_generators(gens, n + 1);
  RMat a;
  RVec b;
  auto emit = [&](const RVec& f) {
    RVec normal(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(normal)) return;  // the row t >= 0 of the homogenization
    a.push_back(normal);
    b.push_back(-f[n]);
  };
  for (const auto& f : dual.rays) emit(f);
  for (const auto& f : dual.lineality) {
    emit(f);
    emit(-f);
  }
  return HPoly(n, std::move(a), std::move(b));
}

SubsetResult poly_subset(const VPoly& p, const HPoly& q) {
  if (p.n != q.dim()) throw DimensionMismatch("poly_subset: dimensions differ");
  SubsetResult res;
  if (p.empty()) {
    res.holds = true;
    return res;
  }
  const RVec& v0 = p.vertices.front();
  for (std::size_t i = 0; i < q.rows(); ++i) {
    const RVec& row = q.a()[i];
    for (const auto& v : p.vertices) {
      if (dot(row, v) < q.b()[i]) {
        res.witness = v;
        return res;
      }
    }
    auto escape = [&](const RVec& d) {
      Rat s = dot(row, d);  // negative
      Rat t = (dot(row, v0) - q.b()[i]) / (-s) + 1;
      res.witness = v0 + t * d;
    };
    for (const auto& d : p.rays) {
      if (dot(row, d) < 0) {
        escape(d);
        return res;
      }
    }
    for (const auto& l : p.lineality) {
      Rat s = dot(row, l);
      if (s != 0) {
        escape(s < 0 ? l : RVec(-l));
        return res;
      }
    }
  }
  res.holds = true;
  return res;
}

SubsetResult poly_subset(const HPoly& p, const HPoly& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("poly_subset: dimensions differ");
  SubsetResult res;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    LpResult r = lp_optimize(q.a()[i], p, Sense::minimize);
    if (r.status == LpStatus::infeasible) break;
    if (r.status == LpStatus::unbounded) {
      Rat s = dot(q.a()[i], *r.ray);
      Rat t = (dot(q.a()[i], *r.witness) - q.b()[i]) / (-s) + 1;
      res.witness = *r.witness + t * *r.ray;
      return res;
    }
    if (*r.value < q.b()[i]) {
      res.witness = *r.witness;
      return res;
    }
  }
  res.holds = true;
  return res;
}

bool poly_equal(const HPoly& p, const HPoly& q) {
  return poly_subset(p, q).holds && poly_subset(q, p).holds;
}

}  // namespace bandlab
