#pragma once

#include <utility>
#include <vector>

#include "flattice/point_set.hpp"

namespace flattice {

/// Expression tree over a list of generator vectors. Leaves are indices
/// into the generator list; internal nodes are SUP, INF or a rational
/// linear combination. Evaluation is pointwise in any function lattice,
/// which is what lets the same certificate be replayed inside a codomain
/// algebra when extending homomorphisms.
struct SupInfExpr {
  enum class Kind { Leaf, Linear, Sup, Inf };

  Kind kind = Kind::Leaf;
  int leaf = -1;
  std::vector<std::pair<Rational, SupInfExpr>> terms;  // Linear
  std::vector<SupInfExpr> args;                        // Sup / Inf

  static SupInfExpr leaf_of(int index) {
    SupInfExpr e;
    e.kind = Kind::Leaf;
    e.leaf = index;
    return e;
  }
  static SupInfExpr linear(std::vector<std::pair<Rational, SupInfExpr>> ts) {
    SupInfExpr e;
    e.kind = Kind::Linear;
    e.terms = std::move(ts);
    return e;
  }
  static SupInfExpr zero() { return linear({}); }
  static SupInfExpr scaled(const Rational& c, SupInfExpr inner) {
    return linear({{c, std::move(inner)}});
  }
  static SupInfExpr sup_of(std::vector<SupInfExpr> xs) {
    SupInfExpr e;
    e.kind = Kind::Sup;
    e.args = std::move(xs);
    return e;
  }
  static SupInfExpr inf_of(std::vector<SupInfExpr> xs) {
    SupInfExpr e;
    e.kind = Kind::Inf;
    e.args = std::move(xs);
    return e;
  }
};

/// Evaluates with the given vectors at the leaves and pointwise sup/inf.
/// `domain` settles the ambient for leafless (pure linear) expressions.
FnVector eval_expr(const SupInfExpr& expr, const std::vector<FnVector>& leaves,
                   PointSet domain);

int expr_node_count(const SupInfExpr& expr);

}  // namespace flattice
