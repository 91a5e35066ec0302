#include "bandlab/lp.hpp"

#include <limits>

namespace bandlab {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau. Column `cols` holds the right-hand side.
struct Tableau {
  RMat t;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (std::size_t k = 0; k <= cols; ++k) t[i][k] -= f * t[r][k];
    }
    basis[r] = c;
  }

  // Bland's rule over columns [0, active). Returns false when unbounded.
  bool run(const RVec& cost, std::size_t active, std::size_t* unbounded_col) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < active && enter == kNone; ++j) {
        Rat rc = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i) rc -= cost[basis[i]] * t[i][j];
        if (rc < 0) enter = j;
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][cols] / t[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) {
        if (unbounded_col) *unbounded_col = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  RVec solution(std::size_t n) const {
    RVec x = zeros(n);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (basis[i] < n) x[basis[i]] = t[i][cols];
    }
    return x;
  }
};

}  // namespace

StandardLp simplex_standard(const RMat& a, const RVec& b, const RVec& c) {
  const std::size_t k = a.size();
  const std::size_t n = c.size();
  if (b.size() != k) throw DimensionMismatch("simplex: rhs length differs from row count");
  Tableau tab;
  tab.cols = n + k;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("simplex: row length differs from cost length");
    bool flip = b[i] < 0;
    RVec row(n + k + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rat(-a[i][j]) : a[i][j];
    row[n + i] = 1;
    row[n + k] = flip ? Rat(-b[i]) : b[i];
    tab.t.push_back(std::move(row));
    tab.basis.push_back(n + i);
  }

  RVec phase1(n + k, Rat(0));
  for (std::size_t i = 0; i < k; ++i) phase1[n + i] = 1;
  tab.run(phase1, n + k, nullptr);
  Rat infeas = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (tab.basis[i] >= n) infeas += tab.t[i][tab.cols];
  }
  StandardLp out;
  if (infeas > 0) {
    out.status = LpStatus::infeasible;
    return out;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n && col == kNone; ++j) {
      if (tab.t[i][j] != 0) col = j;
    }
    if (col == kNone) {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      tab.pivot(i, col);
      ++i;
    }
  }

  RVec cost(n + k, Rat(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  std::size_t ucol = kNone;
  bool bounded = tab.run(cost, n, &ucol);
  out.x = tab.solution(n);
  out.status = bounded ? LpStatus::optimal : LpStatus::unbounded;
  return out;
}

namespace {

// Nonnegative y with M^T y = target (M is k x n, y has length k).
std::optional<RVec> nonneg_combination(const RMat& m, std::size_t n, const RVec& target,
                                       const std::optional<std::pair<RVec, Rat>>& extra) {
  const std::size_t k = m.size();
  RMat a = transpose(m, n);  // n x k
  RVec b = target;
  if (extra) {
    a.push_back(extra->first);
    b.push_back(extra->second);
  }
  StandardLp r = simplex_standard(a, b, zeros(k));
  if (r.status == LpStatus::infeasible) return std::nullopt;
  return r.x;
}

}  // namespace

std::optional<RVec> lp_feasible_point(const HPoly& region) {
  const std::size_t n = region.dim();
  const std::size_t k = region.rows();
  if (k == 0) return zeros(n);
  RMat a;
  for (std::size_t i = 0; i < k; ++i) {
    RVec row(2 * n + k, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = region.a()[i][j];
      row[n + j] = -region.a()[i][j];
    }
    row[2 * n + i] = -1;
    a.push_back(std::move(row));
  }
  StandardLp r = simplex_standard(a, region.b(), zeros(2 * n + k));
  if (r.status == LpStatus::infeasible) return std::nullopt;
  RVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
  return x;
}

LpResult lp_optimize(const RVec& objective, const HPoly& region, Sense sense) {
  const std::size_t n = region.dim();
  const std::size_t k = region.rows();
  if (objective.size() != n) throw DimensionMismatch("lp: objective length differs from dimension");
  RVec c = sense == Sense::maximize ? -objective : objective;

  LpResult res;
  if (k == 0) {
    res.witness = zeros(n);
    if (is_zero(c)) {
      res.status = LpStatus::optimal;
      res.value = 0;
    } else {
      res.status = LpStatus::unbounded;
      res.ray = -c;
    }
    return res;
  }

  RMat a;
  for (std::size_t i = 0; i < k; ++i) {
    RVec row(2 * n + k, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = region.a()[i][j];
      row[n + j] = -region.a()[i][j];
    }
    row[2 * n + i] = -1;
    a.push_back(std::move(row));
  }
  RVec cost(2 * n + k, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = c[j];
    cost[n + j] = -c[j];
  }
  StandardLp r = simplex_standard(a, region.b(), cost);

  if (r.status == LpStatus::infeasible) {
    res.status = LpStatus::infeasible;
    auto y = nonneg_combination(region.a(), n, zeros(n), std::make_pair(region.b(), Rat(1)));
    if (!y) throw std::logic_error("lp: Farkas certificate missing for infeasible region");
    res.dual = *y;
    return res;
  }

  RVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
  res.witness = x;

  if (r.status == LpStatus::unbounded) {
    res.status = LpStatus::unbounded;
    // Direction d with A d >= 0 and c.d <= -1.
    RMat rows = region.a();
    RVec rhs = zeros(k);
    rows.push_back(-c);
    rhs.push_back(1);
    auto d = lp_feasible_point(HPoly(n, rows, rhs));
    if (!d) throw std::logic_error("lp: improving ray missing for unbounded problem");
    res.ray = *d;
    return res;
  }

  res.status = LpStatus::optimal;
  Rat minval = dot(c, x);
  res.value = sense == Sense::maximize ? Rat(-minval) : minval;
  auto y = nonneg_combination(region.a(), n, c, std::make_pair(region.b(), minval));
  if (!y) throw std::logic_error("lp: dual certificate missing for optimal problem");
  res.dual = *y;
  return res;
}

bool lp_certificate_valid(const RVec& objective, const HPoly& region, Sense sense,
                          const LpResult& r) {
  const std::size_t n = region.dim();
  RVec c = sense == Sense::maximize ? -objective : objective;
  auto nonneg = [](const RVec& v) {
    for (const auto& x : v) {
      if (x < 0) return false;
    }
    return true;
  };
  auto at_y = [&](const RVec& y) {
    RVec s = zeros(n);
    for (std::size_t i = 0; i < y.size(); ++i) s = s + y[i] * region.a()[i];
    return s;
  };
  switch (r.status) {
    case LpStatus::optimal: {
      if (!r.witness || !r.value || !region.contains(*r.witness)) return false;
      if (dot(objective, *r.witness) != *r.value) return false;
      if (r.dual.size() != region.rows() || !nonneg(r.dual)) return false;
      if (region.rows() == 0) return is_zero(c);
      if (at_y(r.dual) != c) return false;
      Rat minval = sense == Sense::maximize ? Rat(-*r.value) : *r.value;
      return dot(region.b(), r.dual) == minval;
    }
    case LpStatus::unbounded: {
      if (!r.witness || !r.ray || !region.contains(*r.witness)) return false;
      for (const auto& row : region.a()) {
        if (dot(row, *r.ray) < 0) return false;
      }
      return dot(c, *r.ray) < 0;
    }
    case LpStatus::infeasible: {
      if (r.dual.size() != region.rows() || !nonneg(r.dual)) return false;
      return is_zero(at_y(r.dual)) && dot(region.b(), r.dual) > 0;
    }
  }
  return false;
}

}  // namespace bandlab
