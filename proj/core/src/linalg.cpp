#include "predual/linalg.hpp"

#include <stdexcept>

namespace predual {

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat out(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("mat_mul: dimension mismatch");
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t l = 0; l < m; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  }
  return out;
}

Mat mat_transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat out(m[0].size(), Vec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

Mat identity_matrix(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

// Row echelon reduction in place; returns pivot column per pivot row.
// Deterministic: first nonzero entry in column order is the pivot.
std::vector<int> row_reduce(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rational inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational factor = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(row_reduce(m).size()); }

std::optional<Vec> solve(Mat m, Vec b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (m.empty()) return Vec{};
  const int cols = static_cast<int>(m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  const auto pivots = row_reduce(m);
  for (std::size_t i = pivots.size(); i < m.size(); ++i) {
    if (!m[i].back().is_zero()) return std::nullopt;  // 0 = nonzero row
  }
  for (const int c : pivots) {
    if (c == cols) return std::nullopt;  // pivot in the rhs column
  }
  Vec x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r].back();
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  const int n = static_cast<int>(m.size());
  Mat work(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw std::invalid_argument("inverse: not square");
    work[i] = m[i];
    for (int j = 0; j < n; ++j) work[i].push_back(i == j ? Rational(1) : Rational(0));
  }
  const auto pivots = row_reduce(work);
  // The augmented block always has n pivots; singularity shows up as a pivot
  // escaping into the identity half.
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  for (const int c : pivots) {
    if (c >= n) return std::nullopt;
  }
  Mat out(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = work[i][n + j];
  return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  Mat work = m;
  const auto pivots = row_reduce(work);
  std::vector<bool> is_pivot(cols, false);
  for (const int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace predual
