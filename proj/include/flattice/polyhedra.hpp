#pragma once

#include <optional>
#include <vector>

#include "flattice/linalg.hpp"
#include "flattice/rational.hpp"

namespace flattice {

enum class Rel { Ge, Gt, Eq };  // a·t + c  >= 0, > 0, == 0

struct LinRow {
  Row a;
  Rational c;  // constant term
  Rel rel = Rel::Ge;
};

struct LinSystem {
  int vars = 0;
  std::vector<LinRow> rows;

  void add(Row a, Rational c, Rel rel) { rows.push_back({std::move(a), std::move(c), rel}); }
  void add_homogeneous(Row a, Rel rel) { rows.push_back({std::move(a), Rational(0), rel}); }
};

/// Exact feasibility over the rationals by Fourier-Motzkin elimination.
bool fm_feasible(const LinSystem& system);

/// A satisfying assignment, found by back substitution through the
/// elimination stack; nullopt iff infeasible.
std::optional<Row> fm_sample(const LinSystem& system);

/// Linear span of the cone {t : row · t >= 0 for all rows}, computed from
/// the implicit equalities (rows whose strict version is infeasible over
/// the cone). Returns a basis of the span.
Matrix cone_span(const Matrix& ge_rows, int vars);

}  // namespace flattice
