#include "flattice/linalg.hpp"

#include <cstddef>

#include "flattice/errors.hpp"

namespace flattice {

Echelon rref(const Matrix& input, bool track_transform) {
  const std::size_t nrows = input.size();
  const std::size_t ncols = nrows ? input[0].size() : 0;
  for (const auto& r : input)
    if (r.size() != ncols) fail(ErrorCode::DimensionError, "ragged matrix");

  Matrix m = input;
  Matrix t;
  if (track_transform) {
    t.assign(nrows, Row(nrows, Rational(0)));
    for (std::size_t i = 0; i < nrows; ++i) t[i][i] = 1;
  }

  std::vector<int> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t sel = row;
    while (sel < nrows && m[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[row]);
    if (track_transform) std::swap(t[sel], t[row]);

    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    if (track_transform)
      for (auto& x : t[row]) x *= inv;

    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c) m[r][c] -= factor * m[row][c];
      if (track_transform)
        for (std::size_t c = 0; c < nrows; ++c) t[r][c] -= factor * t[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }

  Echelon e;
  e.pivots = std::move(pivots);
  e.rows.assign(m.begin(), m.begin() + row);
  if (track_transform) e.transform.assign(t.begin(), t.begin() + row);
  return e;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).rows.size()); }

std::optional<Row> coords_in_echelon(const Echelon& e, const Row& v) {
  const std::size_t k = e.rows.size();
  Row coords(k);
  for (std::size_t j = 0; j < k; ++j) coords[j] = v[e.pivots[j]];
  // Membership check: the pivot readout must reproduce v exactly.
  Row rebuilt(v.size(), Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < v.size(); ++c) rebuilt[c] += coords[j] * e.rows[j][c];
  if (rebuilt != v) return std::nullopt;
  return coords;
}

Matrix nullspace(const Matrix& constraint_rows, int vars) {
  if (constraint_rows.empty()) {
    Matrix basis;
    for (int i = 0; i < vars; ++i) {
      Row v(vars, Rational(0));
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Echelon e = rref(constraint_rows);
  std::vector<bool> is_pivot(vars, false);
  for (int p : e.pivots) is_pivot[p] = true;

  Matrix basis;
  for (int free_col = 0; free_col < vars; ++free_col) {
    if (is_pivot[free_col]) continue;
    Row v(vars, Rational(0));
    v[free_col] = 1;
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
      v[e.pivots[j]] = -e.rows[j][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Row matvec(const Matrix& rows, const Row& x) {
  Row y(rows.size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
  return y;
}

Rational dot(const Row& a, const Row& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace flattice
