#include "flattice/supinf.hpp"

#include "flattice/errors.hpp"

namespace flattice {

FnVector eval_expr(const SupInfExpr& expr, const std::vector<FnVector>& leaves,
                   PointSet domain) {
  switch (expr.kind) {
    case SupInfExpr::Kind::Leaf:
      if (expr.leaf < 0 || expr.leaf >= static_cast<int>(leaves.size()))
        fail(ErrorCode::Internal, "certificate leaf index out of range");
      return leaves[expr.leaf];
    case SupInfExpr::Kind::Linear: {
      FnVector acc = zero_vector(domain);
      for (const auto& [coeff, child] : expr.terms)
        acc = acc + coeff * eval_expr(child, leaves, domain);
      return acc;
    }
    case SupInfExpr::Kind::Sup:
    case SupInfExpr::Kind::Inf: {
      if (expr.args.empty()) fail(ErrorCode::Internal, "empty sup/inf node");
      FnVector acc = eval_expr(expr.args[0], leaves, domain);
      for (std::size_t i = 1; i < expr.args.size(); ++i) {
        FnVector next = eval_expr(expr.args[i], leaves, domain);
        acc = expr.kind == SupInfExpr::Kind::Sup ? sup(acc, next) : inf(acc, next);
      }
      return acc;
    }
  }
  fail(ErrorCode::Internal, "unreachable expression kind");
}

int expr_node_count(const SupInfExpr& expr) {
  int n = 1;
  for (const auto& [c, child] : expr.terms) n += expr_node_count(child);
  for (const auto& child : expr.args) n += expr_node_count(child);
  return n;
}

}  // namespace flattice
