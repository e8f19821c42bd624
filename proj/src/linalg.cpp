#include "ksgap/linalg.hpp"

#include "ksgap/errors.hpp"

#include <utility>

namespace ksgap {

int matrix_rank(RationalMatrix a) {
  if (a.empty()) return 0;
  const std::size_t ncol = a[0].size();
  for (const auto& row : a)
    if (row.size() != ncol)
      throw BadParameters("matrix rows have mismatched widths");
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncol && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const Rational p = a[r][c];
    for (std::size_t j = c; j < ncol; ++j) a[r][j] /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < ncol; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int affine_dimension(const std::vector<RationalPoint>& points) {
  if (points.empty()) return -1;
  RationalMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(points[i].size());
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  return matrix_rank(std::move(diffs));
}

int affine_dimension_of_sum(const std::vector<RationalPoint>& a,
                            const std::vector<RationalPoint>& b) {
  if (a.empty() || b.empty())
    throw BadParameters("sum of point sets needs both sets nonempty");
  if (a[0].size() != b[0].size())
    throw BadParameters("sum of point sets needs equal ambient dimensions");
  RationalMatrix diffs;
  diffs.reserve(a.size() + b.size() - 2);
  for (const auto* set : {&a, &b}) {
    const std::vector<RationalPoint>& pts = *set;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      std::vector<Rational> row(pts[i].size());
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = pts[i][j] - pts[0][j];
      diffs.push_back(std::move(row));
    }
  }
  return matrix_rank(std::move(diffs));
}

LinearSolution solve_linear_system(const RationalMatrix& a,
                                   const std::vector<Rational>& b, int nvar) {
  if (a.size() != b.size())
    throw BadParameters("system has " + std::to_string(a.size()) +
                        " rows but " + std::to_string(b.size()) +
                        " right-hand sides");
  if (nvar < 0) throw BadParameters("negative variable count");
  const std::size_t cols = static_cast<std::size_t>(nvar);
  RationalMatrix m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols)
      throw BadParameters("system row width differs from variable count");
    std::vector<Rational> row = a[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Rational p = m[r][c];
    for (std::size_t j = c; j <= cols; ++j) m[r][j] /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  LinearSolution out;
  for (std::size_t i = r; i < m.size(); ++i)
    if (m[i][cols] != 0) return out;  // 0 = nonzero: inconsistent
  out.feasible = true;
  out.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    out.particular[static_cast<std::size_t>(pivot_col[i])] = m[i][cols];
  std::size_t next_pivot = 0;
  for (int c = 0; c < nvar; ++c) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    RationalPoint vec(cols, Rational(0));
    vec[static_cast<std::size_t>(c)] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      vec[static_cast<std::size_t>(pivot_col[i])] =
          -m[i][static_cast<std::size_t>(c)];
    out.null_basis.push_back(std::move(vec));
  }
  return out;
}

}  // namespace ksgap
