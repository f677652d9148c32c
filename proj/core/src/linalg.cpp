#include "nhodge/linalg.hpp"

#include <utility>

#include "nhodge/errors.hpp"

namespace nhodge {
namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_rat_vec(row));
  return r;
}

// Integer row reduction to Hermite form on columns [0, ncols); operations act on
// whole rows. Returns the number of pivot rows, which come first.
std::size_t hermite_reduce(IntMatrix& m, std::size_t ncols) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      }
      if (best == rows) break;
      std::swap(m[best], m[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r == rows || m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank_of(const RatMatrix& rows) {
  RatMatrix m = rows;
  return static_cast<int>(rref(m).size());
}

int rank_of(const IntMatrix& rows) { return rank_of(to_rat(rows)); }

IntMatrix rational_kernel(const IntMatrix& rows, int ncols) {
  RatMatrix m = to_rat(rows);
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  IntMatrix out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    out.push_back(primitive_direction(v));
  }
  return out;
}

IntMatrix hnf_basis(const IntMatrix& vectors) {
  if (vectors.empty()) return {};
  IntMatrix m = vectors;
  std::size_t r = hermite_reduce(m, m[0].size());
  m.resize(r);
  return m;
}

IntMatrix integer_kernel(const IntMatrix& rows, int ncols) {
  const std::size_t nrows = rows.size();
  IntMatrix w(ncols, IntVec(nrows + ncols, 0));
  for (int i = 0; i < ncols; ++i) {
    for (std::size_t j = 0; j < nrows; ++j) w[i][j] = rows[j][i];
    w[i][nrows + i] = 1;
  }
  std::size_t r = hermite_reduce(w, nrows);
  IntMatrix kernel;
  for (std::size_t i = r; i < w.size(); ++i) kernel.emplace_back(w[i].begin() + nrows, w[i].end());
  return hnf_basis(kernel);
}

AffineLatticeBasis affine_lattice_basis(const IntMatrix& points) {
  if (points.empty()) raise(ErrorCode::Internal, "affine_lattice_basis of no points");
  AffineLatticeBasis out;
  out.base_point = points.front();
  const int n = static_cast<int>(out.base_point.size());
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVec d = sub(points[i], out.base_point);
    if (gcd_of(d) != 0) diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return out;
  IntMatrix equations = rational_kernel(diffs, n);
  if (equations.empty()) {
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      out.basis.push_back(std::move(e));
    }
  } else {
    out.basis = integer_kernel(equations, n);
  }
  return out;
}

LatticeChart::LatticeChart(AffineLatticeBasis frame) : frame_(std::move(frame)) {
  const int d = dim();
  const int n = ambient_dim();
  RatMatrix picked;
  for (int row = 0; row < n && static_cast<int>(pivot_rows_.size()) < d; ++row) {
    RatVec candidate(d);
    for (int j = 0; j < d; ++j) candidate[j] = frame_.basis[j][row];
    picked.push_back(candidate);
    if (rank_of(picked) == static_cast<int>(picked.size())) {
      pivot_rows_.push_back(row);
    } else {
      picked.pop_back();
    }
  }
  if (static_cast<int>(pivot_rows_.size()) != d) raise(ErrorCode::Internal, "lattice basis is not independent");
  // Invert the d x d block via Gauss-Jordan on [B | I].
  RatMatrix aug(d, RatVec(2 * d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug[i][j] = picked[i][j];
    aug[i][d + i] = 1;
  }
  rref(aug);
  block_inverse_.assign(d, RatVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) block_inverse_[i][j] = aug[i][d + j];
}

std::optional<RatVec> LatticeChart::coordinates(const RatVec& x, const Integer& scale) const {
  const int d = dim();
  const int n = ambient_dim();
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = x[i] - scale * frame_.base_point[i];
  RatVec y(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) y[i] += block_inverse_[i][j] * v[pivot_rows_[j]];
  for (int r = 0; r < n; ++r) {
    Rational s = 0;
    for (int j = 0; j < d; ++j) s += y[j] * frame_.basis[j][r];
    if (s != v[r]) return std::nullopt;
  }
  return y;
}

std::optional<IntVec> LatticeChart::lattice_coordinates(const IntVec& x, const Integer& scale) const {
  auto y = coordinates(to_rat_vec(x), scale);
  if (!y) return std::nullopt;
  IntVec out;
  out.reserve(y->size());
  for (const auto& c : *y) {
    if (!is_integral(c)) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

IntVec LatticeChart::point(const IntVec& y, const Integer& scale) const {
  IntVec x(ambient_dim());
  for (int i = 0; i < ambient_dim(); ++i) {
    x[i] = scale * frame_.base_point[i];
    for (int j = 0; j < dim(); ++j) x[i] += y[j] * frame_.basis[j][i];
  }
  return x;
}

RatMatrix LatticeChart::coordinate_matrix() const {
  RatMatrix m(dim(), RatVec(ambient_dim(), 0));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) m[i][pivot_rows_[j]] = block_inverse_[i][j];
  return m;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace nhodge
