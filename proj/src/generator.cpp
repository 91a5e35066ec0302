#include "bandlab/generator.hpp"

#include <algorithm>
#include <set>

namespace bandlab {

long Rng::integer(long lo, long hi) {
  if (hi < lo) throw InputError("Rng::integer: empty range");
  std::uint64_t span = std::uint64_t(hi - lo) + 1;
  return lo + long(eng_() % span);
}

Rat Rng::rational(long lo, long hi, long den) { return make_rat(integer(lo * den, hi * den), den); }

ConeSpec random_cone(std::uint64_t seed, std::size_t n, std::size_t m) {
  if (n < 2 || n > 6) throw InputError("random_cone: n must satisfy 2 <= n <= 6");
  if (m < n || m > 2 * n + 2) throw InputError("random_cone: m must satisfy n <= m <= 2n+2");
  if (n == 2 && m != 2) throw InputError("random_cone: a pointed cone in R^2 has exactly 2 extreme dual rays");
  Rng rng(seed);
  const long range = long(m / 2 + 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<long> xs;
    while (xs.size() < m) xs.insert(rng.integer(-range, range));
    RMat t(n, RVec(n));
    for (auto& row : t) {
      for (auto& v : row) v = rng.integer(-1, 1);
    }
    for (std::size_t i = 0; i < n; ++i) t[i][i] += rng.integer(1, 2);
    if (rank(t, n) != n) continue;
    ConeSpec spec;
    spec.kind = ConeSpec::Kind::inequalities;
    spec.n = n;
    for (long x : xs) {
      RVec p(n);
      Rat pw = 1;
      for (std::size_t k = 0; k < n; ++k, pw *= x) p[k] = pw;
      spec.vectors.push_back(mat_vec(transpose(t, n), p));
    }
    try {
      PolySpace s = build_space(spec);
      if (s.m() == m) {
        spec.vectors = s.F;
        return spec;
      }
    } catch (const InputError&) {
    }
  }
  throw std::runtime_error("random_cone: rejection sampling did not converge");
}

CorpusCone corpus_cone(std::uint64_t seed, std::size_t n_max) {
  if (n_max < 2 || n_max > 6) throw InputError("corpus_cone: n_max must satisfy 2 <= n_max <= 6");
  Rng rng(seed);
  CorpusCone c;
  c.n = std::size_t(rng.integer(2, long(n_max)));
  c.m = c.n == 2 ? 2 : std::size_t(rng.integer(long(c.n), long(std::min(2 * c.n + 2, c.n + 3))));
  c.spec = random_cone(seed, c.n, c.m);
  return c;
}

std::vector<NamedSubspace> candidate_subspaces(const PolySpace& s, std::uint64_t seed) {
  std::vector<NamedSubspace> out;
  std::set<RMat> seen;
  auto add = [&](std::string name, SubspaceBasis b) {
    if (b.dim() == 0 || b.dim() == s.n) return;
    if (!seen.insert(b.basis()).second) return;
    out.push_back({std::move(name), std::move(b)});
  };
  const std::size_t m = s.m();
  const unsigned long subsets = m >= 6 ? 64ul : (1ul << m);
  Rng rng(seed ^ 0x5eedULL);
  for (unsigned long k = 0; k < subsets; ++k) {
    unsigned long mask = m >= 6 ? std::uint64_t(rng.integer(0, (1L << m) - 1)) : k;
    std::vector<std::size_t> t;
    std::string name = "band{";
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (1ul << j)) {
        t.push_back(j);
        name += std::to_string(j + 1) + ",";
      }
    }
    add(name + "}", restrict_cover_band(t, s));
  }
  for (std::size_t i = 0; i < s.cone_v.size(); ++i) {
    add("ray" + std::to_string(i + 1), SubspaceBasis(s.n, {s.cone_v[i]}));
    for (std::size_t j = i + 1; j < s.cone_v.size(); ++j) {
      add("rays" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
          SubspaceBasis(s.n, {s.cone_v[i], s.cone_v[j]}));
    }
  }
  RVec line(s.n);
  for (auto& v : line) v = rng.integer(-3, 3);
  if (!is_zero(line)) add("line", SubspaceBasis(s.n, {line}));
  return out;
}

RMat sample_elements(const PolySpace& s, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  RMat out;
  for (std::size_t i = 0; i < count; ++i) {
    RVec x = zeros(s.n);
    if (i % 2 == 0) {
      for (const auto& r : s.cone_v) x = x + Rat(rng.integer(0, 3)) * r;
    } else {
      for (auto& v : x) v = rng.rational(-3, 3, 2);
    }
    out.push_back(x);
  }
  return out;
}

RMat sample_cover_positive(std::size_t m, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  RMat out;
  while (out.size() < count) {
    RVec y(m);
    for (auto& v : y) v = rng.integer(0, 1) ? Rat(0) : rng.rational(0, 3, 2);
    if (!is_zero(y)) out.push_back(y);
  }
  return out;
}

DenseChain random_dense_chain(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t n = std::size_t(rng.integer(3, 4));
  std::size_t m = std::size_t(rng.integer(long(n) + 1, long(n) + 2));
  PolySpace s = build_space(random_cone(seed, n, m));
  DenseChain c;
  c.m = m;
  c.u = SubspaceBasis(m, transpose(s.F, s.n));
  RMat span = c.u.basis();
  std::size_t extra = std::size_t(rng.integer(1, long(m - n)));
  for (std::size_t k = 0; k < extra; ++k) {
    RVec d(m);
    for (auto& v : d) v = rng.integer(-2, 2);
    span.push_back(d);
  }
  c.v = SubspaceBasis(m, span);
  return c;
}

}  // namespace bandlab
