#include "flattice/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "flattice/errors.hpp"

namespace flattice {

namespace {

constexpr std::size_t kRowLimit = 200000;

struct WorkRow {
  Row a;
  Rational c;
  bool strict = false;

  auto key() const { return std::tie(a, c, strict); }
  bool operator<(const WorkRow& o) const { return key() < o.key(); }
};

// Scales by a positive factor so the first nonzero coefficient is +-1.
void canonicalize(WorkRow& r) {
  for (const auto& x : r.a) {
    if (x != 0) {
      Rational f = x < 0 ? Rational(-x) : x;
      for (auto& y : r.a) y /= f;
      r.c /= f;
      return;
    }
  }
  if (r.c != 0) {
    Rational f = r.c < 0 ? Rational(-r.c) : r.c;
    r.c /= f;
  }
}

bool constant_only(const WorkRow& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; });
}

// True = satisfied (drop), false = contradiction.
bool constant_satisfied(const WorkRow& r) {
  return r.strict ? r.c > 0 : r.c >= 0;
}

struct FmState {
  bool feasible = true;
  std::vector<int> elim_order;
  // Snapshot of the system just before each variable was eliminated.
  std::vector<std::vector<WorkRow>> snapshots;
};

std::vector<WorkRow> prepare(const LinSystem& system, bool& feasible) {
  std::set<WorkRow> rows;
  auto push = [&](Row a, Rational c, bool strict) {
    WorkRow r{std::move(a), std::move(c), strict};
    canonicalize(r);
    if (constant_only(r)) {
      if (!constant_satisfied(r)) feasible = false;
      return;
    }
    rows.insert(std::move(r));
  };
  for (const auto& row : system.rows) {
    if (static_cast<int>(row.a.size()) != system.vars)
      fail(ErrorCode::DimensionError, "constraint row has wrong arity");
    if (row.rel == Rel::Eq) {
      push(row.a, row.c, false);
      Row na = row.a;
      for (auto& x : na) x = -x;
      push(std::move(na), -row.c, false);
    } else {
      push(row.a, row.c, row.rel == Rel::Gt);
    }
  }
  return {rows.begin(), rows.end()};
}

std::vector<WorkRow> eliminate(const std::vector<WorkRow>& rows, int var, bool& feasible) {
  std::vector<const WorkRow*> pos, neg;
  std::set<WorkRow> out;
  auto keep = [&](WorkRow r) {
    canonicalize(r);
    if (constant_only(r)) {
      if (!constant_satisfied(r)) feasible = false;
      return;
    }
    out.insert(std::move(r));
  };
  for (const auto& r : rows) {
    if (r.a[var] > 0)
      pos.push_back(&r);
    else if (r.a[var] < 0)
      neg.push_back(&r);
    else
      keep(r);
  }
  for (const WorkRow* p : pos) {
    for (const WorkRow* n : neg) {
      const Rational fp = -n->a[var];  // > 0
      const Rational fn = p->a[var];   // > 0
      WorkRow r;
      r.a.resize(p->a.size());
      for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = fp * p->a[i] + fn * n->a[i];
      r.a[var] = 0;
      r.c = fp * p->c + fn * n->c;
      r.strict = p->strict || n->strict;
      keep(std::move(r));
      if (out.size() > kRowLimit) fail(ErrorCode::SizeLimit, "fourier-motzkin row blowup");
    }
  }
  return {out.begin(), out.end()};
}

int pick_variable(const std::vector<WorkRow>& rows, const std::vector<bool>& done, int vars) {
  int best = -1;
  long best_cost = -1;
  for (int v = 0; v < vars; ++v) {
    if (done[v]) continue;
    long p = 0, n = 0;
    for (const auto& r : rows) {
      if (r.a[v] > 0) ++p;
      else if (r.a[v] < 0) ++n;
    }
    long cost = p * n - (p + n);
    if (best == -1 || cost < best_cost) {
      best = v;
      best_cost = cost;
    }
  }
  return best;
}

FmState run_fm(const LinSystem& system) {
  FmState st;
  std::vector<WorkRow> rows = prepare(system, st.feasible);
  std::vector<bool> done(system.vars, false);
  for (int step = 0; step < system.vars && st.feasible; ++step) {
    int v = pick_variable(rows, done, system.vars);
    done[v] = true;
    st.elim_order.push_back(v);
    st.snapshots.push_back(rows);
    rows = eliminate(rows, v, st.feasible);
  }
  return st;
}

}  // namespace

bool fm_feasible(const LinSystem& system) { return run_fm(system).feasible; }

std::optional<Row> fm_sample(const LinSystem& system) {
  FmState st = run_fm(system);
  if (!st.feasible) return std::nullopt;

  Row assign(system.vars, Rational(0));
  std::vector<bool> assigned(system.vars, false);
  for (int i = static_cast<int>(st.elim_order.size()) - 1; i >= 0; --i) {
    const int v = st.elim_order[i];
    const auto& rows = st.snapshots[i];
    bool has_lower = false, has_upper = false, lower_strict = false, upper_strict = false;
    Rational lower, upper;
    for (const auto& r : rows) {
      if (r.a[v] == 0) continue;
      Rational rest = r.c;
      for (std::size_t k = 0; k < r.a.size(); ++k) {
        if (static_cast<int>(k) == v || r.a[k] == 0) continue;
        rest += r.a[k] * assign[k];
      }
      // r.a[v]*t + rest >= 0
      const Rational bound = -rest / r.a[v];
      if (r.a[v] > 0) {
        if (!has_lower || bound > lower) {
          lower = bound;
          lower_strict = r.strict;
          has_lower = true;
        } else if (bound == lower) {
          lower_strict = lower_strict || r.strict;
        }
      } else {
        if (!has_upper || bound < upper) {
          upper = bound;
          upper_strict = r.strict;
          has_upper = true;
        } else if (bound == upper) {
          upper_strict = upper_strict || r.strict;
        }
      }
    }
    Rational value;
    if (has_lower && has_upper) {
      value = (lower == upper) ? lower : (lower + upper) / 2;
    } else if (has_lower) {
      value = lower_strict ? lower + 1 : lower;
    } else if (has_upper) {
      value = upper_strict ? upper - 1 : upper;
    } else {
      value = 0;
    }
    assign[v] = value;
    assigned[v] = true;
  }

  // The assignment must satisfy the original system exactly.
  for (const auto& r : system.rows) {
    Rational s = r.c;
    for (int k = 0; k < system.vars; ++k) s += r.a[k] * assign[k];
    const bool ok = r.rel == Rel::Eq ? s == 0 : (r.rel == Rel::Gt ? s > 0 : s >= 0);
    if (!ok) fail(ErrorCode::Internal, "fm_sample produced an invalid point");
  }
  return assign;
}

Matrix cone_span(const Matrix& ge_rows, int vars) {
  Matrix implicit;

  auto span_basis = [&]() { return nullspace(implicit, vars); };

  Matrix basis = span_basis();
  while (true) {
    if (basis.empty()) return basis;
    // Project the cone constraints onto the current candidate span.
    const int dim = static_cast<int>(basis.size());
    std::vector<std::pair<Row, int>> projected;  // (coefficients over z, original row)
    for (std::size_t i = 0; i < ge_rows.size(); ++i) {
      Row pz(dim, Rational(0));
      for (int j = 0; j < dim; ++j) pz[j] = dot(ge_rows[i], basis[j]);
      if (std::all_of(pz.begin(), pz.end(), [](const Rational& x) { return x == 0; })) continue;
      projected.emplace_back(std::move(pz), static_cast<int>(i));
    }
    if (projected.empty()) return basis;

    // Syntactic pass: a row and its negation force both to equality.
    std::map<Row, std::vector<int>> seen;
    for (auto& [pz, idx] : projected) {
      Row canon = pz;
      for (const auto& x : canon) {
        if (x != 0) {
          Rational f = x < 0 ? Rational(-x) : x;
          for (auto& y : canon) y /= f;
          break;
        }
      }
      seen[std::move(canon)].push_back(idx);
    }
    std::vector<int> new_implicit;
    for (const auto& [canon, idxs] : seen) {
      Row neg = canon;
      for (auto& x : neg) x = -x;
      auto it = seen.find(neg);
      if (it != seen.end() && neg > canon) {
        for (int i : idxs) new_implicit.push_back(i);
        for (int i : it->second) new_implicit.push_back(i);
      }
    }
    if (!new_implicit.empty()) {
      for (int i : new_implicit) implicit.push_back(ge_rows[i]);
      basis = span_basis();
      continue;
    }

    // Self witness: if the summed gradient is strictly interior, the cone is
    // full-dimensional in the candidate span.
    Row zstar(dim, Rational(0));
    for (const auto& [pz, idx] : projected)
      for (int j = 0; j < dim; ++j) zstar[j] += pz[j];
    bool interior = true;
    for (const auto& [pz, idx] : projected) {
      if (dot(pz, zstar) <= 0) {
        interior = false;
        break;
      }
    }
    if (interior) return basis;

    // Exact pass: strict feasibility row by row.
    bool changed = false;
    for (const auto& [pz, idx] : projected) {
      LinSystem sys;
      sys.vars = dim;
      for (const auto& [qz, qidx] : projected) sys.add_homogeneous(qz, Rel::Ge);
      sys.add_homogeneous(pz, Rel::Gt);
      if (!fm_feasible(sys)) {
        implicit.push_back(ge_rows[idx]);
        changed = true;
      }
    }
    if (!changed) return basis;
    basis = span_basis();
    // One exact sweep identifies all implicit equalities; the loop re-runs
    // only to re-project and exit.
  }
}

}  // namespace flattice
