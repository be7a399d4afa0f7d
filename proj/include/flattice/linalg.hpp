#pragma once

#include <optional>
#include <vector>

#include "flattice/rational.hpp"

namespace flattice {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form. Zero rows are dropped; pivots are 1 with
/// zeros above and below, so the row set is a canonical basis of the
/// row space. When tracked, `transform[i]` expresses rows[i] as a
/// combination of the input rows.
struct Echelon {
  Matrix rows;
  std::vector<int> pivots;
  Matrix transform;
};

Echelon rref(const Matrix& input, bool track_transform = false);

int rank(const Matrix& m);

/// Coordinates of v in an RREF basis, or nullopt if v is outside the span.
std::optional<Row> coords_in_echelon(const Echelon& e, const Row& v);

/// Basis of {x : row · x = 0 for every row}. `vars` is the ambient dimension.
Matrix nullspace(const Matrix& constraint_rows, int vars);

Row matvec(const Matrix& rows, const Row& x);
Rational dot(const Row& a, const Row& b);

}  // namespace flattice
