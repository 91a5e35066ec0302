#include "bandlab/linalg.hpp"

#include <algorithm>

namespace bandlab {

namespace {

void check_len(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " differ");
  }
}

}  // namespace

RVec zeros(std::size_t n) { return RVec(n, Rat(0)); }

RVec unit(std::size_t n, std::size_t j) {
  RVec v = zeros(n);
  v.at(j) = 1;
  return v;
}

Rat dot(const RVec& a, const RVec& b) {
  check_len(a, b);
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec operator+(const RVec& a, const RVec& b) {
  check_len(a, b);
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec operator-(const RVec& a, const RVec& b) {
  check_len(a, b);
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec operator-(const RVec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RVec operator*(const Rat& s, const RVec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const RVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

RVec mat_vec(const RMat& a, const RVec& x) {
  RVec r;
  r.reserve(a.size());
  for (const auto& row : a) r.push_back(dot(row, x));
  return r;
}

RMat transpose(const RMat& a, std::size_t cols) {
  RMat t(cols, zeros(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

RMat mat_mul(const RMat& a, const RMat& b, std::size_t inner_cols) {
  RMat bt = transpose(b, inner_cols);
  RMat r;
  r.reserve(a.size());
  for (const auto& row : a) {
    RVec out;
    out.reserve(inner_cols);
    for (const auto& col : bt) out.push_back(dot(row, col));
    r.push_back(std::move(out));
  }
  return r;
}

RVec canonical_ray(RVec v) {
  for (const auto& x : v) {
    if (x != 0) {
      Rat s = rat_abs(x);
      for (auto& y : v) y /= s;
      break;
    }
  }
  return v;
}

RVec canonical_line(RVec v) {
  for (const auto& x : v) {
    if (x != 0) {
      Rat s = x;
      for (auto& y : v) y /= s;
      break;
    }
  }
  return v;
}

bool lex_less(const RVec& a, const RVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

EchelonForm rref(const RMat& rows, std::size_t cols) {
  RMat m = rows;
  for (const auto& r : m) {
    if (r.size() != cols) throw DimensionMismatch("row length differs from column count");
  }
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < m.size(); ++c) {
    std::size_t p = lead_row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[lead_row]);
    Rat inv = 1 / m[lead_row][c];
    for (auto& x : m[lead_row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead_row || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[lead_row][k];
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  m.resize(lead_row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RMat& rows, std::size_t cols) { return rref(rows, cols).rows.size(); }

RMat nullspace(const RMat& a, std::size_t cols) {
  EchelonForm e = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v = zeros(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> solve(const RMat& a, const RVec& b, std::size_t cols) {
  if (a.size() != b.size()) throw DimensionMismatch("solve: row count differs from rhs length");
  RMat aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RVec row = a[i];
    if (row.size() != cols) throw DimensionMismatch("solve: row length differs from column count");
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  EchelonForm e = rref(aug, cols + 1);
  RVec x = zeros(cols);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient, const RMat& spanning) : ambient_(ambient) {
  basis_ = rref(spanning, ambient).rows;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient) {
  RMat id;
  for (std::size_t j = 0; j < ambient; ++j) id.push_back(unit(ambient, j));
  return SubspaceBasis(ambient, id);
}

SubspaceBasis SubspaceBasis::kernel_of(const RMat& rows, std::size_t ambient) {
  return SubspaceBasis(ambient, nullspace(rows, ambient));
}

bool SubspaceBasis::contains(const RVec& v) const { return coordinates(v).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const RVec& v) { return contains(v); });
}

std::optional<RVec> SubspaceBasis::coordinates(const RVec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace membership: wrong vector length");
  // Rows are in reduced echelon form, so the coefficient of row r is the
  // entry of v at that row's pivot.
  RVec coeff;
  coeff.reserve(basis_.size());
  RVec rest = v;
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    Rat c = v[p];
    coeff.push_back(c);
    for (std::size_t k = 0; k < ambient_; ++k) rest[k] -= c * row[k];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeff;
}

RMat SubspaceBasis::annihilator() const { return nullspace(basis_, ambient_); }

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace intersection: ambient differs");
  RMat rows = annihilator();
  for (auto& r : other.annihilator()) rows.push_back(std::move(r));
  return kernel_of(rows, ambient_);
}

SubspaceBasis SubspaceBasis::join(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace sum: ambient differs");
  RMat rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return SubspaceBasis(ambient_, rows);
}

}  // namespace bandlab
