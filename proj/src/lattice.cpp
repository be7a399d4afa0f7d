#include "flattice/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "flattice/errors.hpp"
#include "flattice/polyhedra.hpp"

namespace flattice {

namespace {

Matrix value_rows(const std::vector<FnVector>& vectors) {
  Matrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) m.push_back(v.values);
  return m;
}

Subspace from_echelon(PointSet ambient, Echelon e) {
  Subspace s;
  s.ambient = ambient;
  s.pivots = std::move(e.pivots);
  for (auto& row : e.rows) s.basis.push_back(FnVector{ambient, std::move(row)});
  return s;
}

// Projection of the space onto a pair of coordinates.
struct PairProjection {
  int dim = 0;
  Rational a, b;  // direction when dim == 1, normalized
};

PairProjection project_pair(const Subspace& space, int sigma, int tau) {
  Matrix m;
  for (const auto& bvec : space.basis) m.push_back({bvec[sigma], bvec[tau]});
  Echelon e = rref(m);
  PairProjection p;
  p.dim = static_cast<int>(e.rows.size());
  if (p.dim == 1) {
    p.a = e.rows[0][0];
    p.b = e.rows[0][1];
  }
  return p;
}

bool mixed_sign(const PairProjection& p) {
  return p.dim == 1 && ((p.a > 0 && p.b < 0) || (p.a < 0 && p.b > 0));
}

}  // namespace

Subspace make_subspace(PointSet ambient, const std::vector<FnVector>& vectors) {
  for (const auto& v : vectors)
    if (!(v.domain == ambient))
      fail(ErrorCode::MixedAmbient, "vectors live on different point sets");
  return from_echelon(ambient, rref(value_rows(vectors)));
}

Subspace make_subspace(const std::vector<FnVector>& vectors) {
  if (vectors.empty())
    fail(ErrorCode::DimensionError, "cannot infer the ambient of an empty family");
  return make_subspace(vectors[0].domain, vectors);
}

Subspace full_space(PointSet ambient) {
  std::vector<FnVector> units;
  for (int p = 0; p < ambient.size; ++p) units.push_back(unit_vector(ambient, p));
  return make_subspace(ambient, units);
}

std::optional<Row> coords(const Subspace& space, const FnVector& v) {
  if (!(v.domain == space.ambient))
    fail(ErrorCode::MixedAmbient, "vector ambient differs from space ambient");
  Echelon e;
  e.rows = value_rows(space.basis);
  e.pivots = space.pivots;
  return coords_in_echelon(e, v.values);
}

bool contains(const Subspace& space, const FnVector& v) {
  return coords(space, v).has_value();
}

FnVector from_coords(const Subspace& space, const Row& c) {
  if (c.size() != space.basis.size())
    fail(ErrorCode::DimensionError, "coordinate arity mismatch");
  FnVector acc = zero_vector(space.ambient);
  for (std::size_t i = 0; i < c.size(); ++i) acc = acc + c[i] * space.basis[i];
  return acc;
}

bool same_space(const Subspace& a, const Subspace& b) {
  return a.ambient == b.ambient && value_rows(a.basis) == value_rows(b.basis);
}

bool contains_subspace(const Subspace& outer, const Subspace& inner) {
  if (!(outer.ambient == inner.ambient)) return false;
  return std::all_of(inner.basis.begin(), inner.basis.end(),
                     [&](const FnVector& v) { return contains(outer, v); });
}

std::vector<int> upsilon(const Subspace& space) {
  std::vector<int> result;
  for (int p = 0; p < space.ambient.size; ++p) {
    bool live = std::any_of(space.basis.begin(), space.basis.end(),
                            [&](const FnVector& b) { return b[p] != 0; });
    if (live) result.push_back(p);
  }
  return result;
}

std::vector<int> upsilon(const Sublattice& lattice) { return upsilon(lattice.space); }

bool is_admissible(const Sublattice& lattice) {
  return static_cast<int>(upsilon(lattice).size()) == lattice.ambient().size;
}

Subspace two_point_span(const Subspace& space) {
  const int n = space.ambient.size;
  Matrix constraints;
  std::vector<bool> dead(n, true);
  for (const auto& b : space.basis)
    for (int p = 0; p < n; ++p)
      if (b[p] != 0) dead[p] = false;
  for (int p = 0; p < n; ++p) {
    if (dead[p]) {
      Row r(n, Rational(0));
      r[p] = 1;
      constraints.push_back(std::move(r));
    }
  }
  for (int sigma = 0; sigma < n; ++sigma) {
    for (int tau = sigma + 1; tau < n; ++tau) {
      if (dead[sigma] || dead[tau]) continue;
      PairProjection p = project_pair(space, sigma, tau);
      if (p.dim != 1 || mixed_sign(p)) continue;
      Row r(n, Rational(0));
      r[sigma] = p.b;
      r[tau] = -p.a;
      constraints.push_back(std::move(r));
    }
  }
  Matrix basis = nullspace(constraints, n);
  Subspace span = from_echelon(space.ambient, rref(basis));
  if (!contains_subspace(span, space))
    fail(ErrorCode::Internal, "two-point span does not contain the space");
  return span;
}

bool member_two_point(const Subspace& space, const FnVector& v) {
  if (!(v.domain == space.ambient))
    fail(ErrorCode::MixedAmbient, "probe ambient differs from space ambient");
  const int n = space.ambient.size;
  for (int sigma = 0; sigma < n; ++sigma) {
    for (int tau = sigma; tau < n; ++tau) {
      PairProjection p = project_pair(space, sigma, tau);
      if (p.dim == 2) continue;
      if (p.dim == 0) {
        if (v[sigma] != 0 || v[tau] != 0) return false;
        continue;
      }
      if (mixed_sign(p)) continue;
      if (p.b * v[sigma] - p.a * v[tau] != 0) return false;
    }
  }
  return true;
}

SublatticeCheck is_sublattice(const Subspace& space) {
  Subspace span = two_point_span(space);
  if (span.dim() == space.dim()) return {true, std::nullopt};

  // Find a concrete escaping join: signed basis pairs first, then a
  // bounded seeded search over small combinations.
  const int d = space.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          FnVector x = Rational(si) * space.basis[i];
          FnVector y = Rational(sj) * space.basis[j];
          FnVector join = sup(x, y);
          if (!contains(space, join)) return {false, SublatticeWitness{x, y, join}};
        }
      }
    }
  }
  std::mt19937_64 rng(0xf1a77);
  for (int trial = 0; trial < 500; ++trial) {
    Row cx(d), cy(d);
    for (int i = 0; i < d; ++i) {
      cx[i] = Rational(static_cast<long long>(rng() % 5) - 2);
      cy[i] = Rational(static_cast<long long>(rng() % 5) - 2);
    }
    FnVector x = from_coords(space, cx);
    FnVector y = from_coords(space, cy);
    FnVector join = sup(x, y);
    if (!contains(space, join)) return {false, SublatticeWitness{x, y, join}};
  }
  return {false, std::nullopt};
}

namespace {

// A spanning family together with its span; certificates point at the
// family, not at the echelon basis.
struct GeneratorFamily {
  PointSet ambient{1};
  std::vector<FnVector> vectors;
  Subspace span;
  Matrix transform;  // span.basis[j] = sum_k transform[j][k] * vectors[k]
};

GeneratorFamily make_family(PointSet ambient, const std::vector<FnVector>& vectors) {
  GeneratorFamily f;
  f.ambient = ambient;
  f.vectors = vectors;
  Matrix values;
  for (const auto& v : vectors) {
    if (!(v.domain == ambient))
      fail(ErrorCode::MixedAmbient, "generators live on different point sets");
    values.push_back(v.values);
  }
  Echelon e = rref(values, true);
  f.transform = e.transform;
  f.span.ambient = ambient;
  f.span.pivots = e.pivots;
  for (auto& row : e.rows) f.span.basis.push_back(FnVector{ambient, std::move(row)});
  return f;
}

// Coordinates of v over the generator family (any particular solution).
std::optional<Row> family_coords(const GeneratorFamily& f, const FnVector& v) {
  auto c = coords(f.span, v);
  if (!c) return std::nullopt;
  Row over_generators(f.vectors.size(), Rational(0));
  for (std::size_t j = 0; j < c->size(); ++j)
    for (std::size_t k = 0; k < f.vectors.size(); ++k)
      over_generators[k] += (*c)[j] * f.transform[j][k];
  return over_generators;
}

FnVector family_combination(const GeneratorFamily& f, const Row& c) {
  FnVector acc = zero_vector(f.ambient);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) acc = acc + c[k] * f.vectors[k];
  return acc;
}

// Particular solution of two interpolation constraints at sigma, tau,
// over the generator family.
std::optional<Row> solve_two_constraints(const GeneratorFamily& f, int sigma, int tau,
                                         const Rational& tsigma, const Rational& ttau,
                                         const std::vector<int>& column_order) {
  const int k = static_cast<int>(f.vectors.size());
  Matrix rows = {{Row(k)}, {Row(k)}};
  for (int i = 0; i < k; ++i) {
    rows[0][i] = f.vectors[i][sigma];
    rows[1][i] = f.vectors[i][tau];
  }
  Row rhs = {tsigma, ttau};

  std::vector<std::pair<int, int>> pivots;  // (row, column)
  std::vector<bool> used_row(2, false);
  for (int col : column_order) {
    int pick = -1;
    for (int r = 0; r < 2; ++r) {
      if (!used_row[r] && rows[r][col] != 0) {
        pick = r;
        break;
      }
    }
    if (pick == -1) continue;
    const Rational inv = Rational(1) / rows[pick][col];
    for (auto& x : rows[pick]) x *= inv;
    rhs[pick] *= inv;
    for (int r = 0; r < 2; ++r) {
      if (r == pick || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (int c = 0; c < k; ++c) rows[r][c] -= f * rows[pick][c];
      rhs[r] -= f * rhs[pick];
    }
    used_row[pick] = true;
    pivots.emplace_back(pick, col);
    if (pivots.size() == 2) break;
  }
  for (int r = 0; r < 2; ++r) {
    if (used_row[r]) continue;
    bool zero = std::all_of(rows[r].begin(), rows[r].end(),
                            [](const Rational& x) { return x == 0; });
    if (zero && rhs[r] != 0) return std::nullopt;
  }
  Row solution(k, Rational(0));
  for (auto [r, c] : pivots) solution[c] = rhs[r];
  return solution;
}

SupInfExpr linear_over_leaves(const Row& coeffs) {
  std::vector<std::pair<Rational, SupInfExpr>> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.emplace_back(coeffs[i], SupInfExpr::leaf_of(static_cast<int>(i)));
  return SupInfExpr::linear(std::move(terms));
}

// An element of lat(X) matching v at both points, as (value, certificate).
std::pair<FnVector, SupInfExpr> pair_witness(const GeneratorFamily& f, int sigma, int tau,
                                             const FnVector& v,
                                             const std::vector<int>& column_order) {
  if (auto c = solve_two_constraints(f, sigma, tau, v[sigma], v[tau], column_order)) {
    return {family_combination(f, *c), linear_over_leaves(*c)};
  }
  // Only the mixed-sign rank-one projection can fail: combine a preimage x
  // of the direction with |x| = x v (-x).
  PairProjection p = project_pair(f.span, sigma, tau);
  if (!mixed_sign(p))
    fail(ErrorCode::Internal, "two-point witness missing on a constrained pair");
  auto cx = solve_two_constraints(f, sigma, tau, p.a, p.b, column_order);
  if (!cx) fail(ErrorCode::Internal, "projection direction has no preimage");
  FnVector x = family_combination(f, *cx);
  const Rational absa = p.a < 0 ? Rational(-p.a) : p.a;
  const Rational absb = p.b < 0 ? Rational(-p.b) : p.b;
  const Rational det = p.a * absb - p.b * absa;
  const Rational alpha = (v[sigma] * absb - v[tau] * absa) / det;
  const Rational beta = (p.a * v[tau] - p.b * v[sigma]) / det;
  FnVector value = alpha * x + beta * abs(x);

  SupInfExpr ex = linear_over_leaves(*cx);
  SupInfExpr abs_x = SupInfExpr::sup_of({ex, SupInfExpr::scaled(Rational(-1), ex)});
  std::vector<std::pair<Rational, SupInfExpr>> terms;
  if (alpha != 0) terms.emplace_back(alpha, ex);
  if (beta != 0) terms.emplace_back(beta, std::move(abs_x));
  return {value, SupInfExpr::linear(std::move(terms))};
}

SupInfExpr build_certificate(const Subspace& space, const FnVector& v, std::mt19937_64& rng) {
  if (auto c = coords(space, v)) return linear_over_leaves(*c);

  const int n = space.ambient.size;
  std::vector<int> sigma_order(n), tau_order(n), column_order(space.dim());
  std::iota(sigma_order.begin(), sigma_order.end(), 0);
  std::iota(tau_order.begin(), tau_order.end(), 0);
  std::iota(column_order.begin(), column_order.end(), 0);
  std::shuffle(sigma_order.begin(), sigma_order.end(), rng);
  std::shuffle(tau_order.begin(), tau_order.end(), rng);
  std::shuffle(column_order.begin(), column_order.end(), rng);

  std::vector<SupInfExpr> sup_args;
  std::set<std::vector<Rational>> sup_seen;
  for (int sigma : sigma_order) {
    std::vector<SupInfExpr> inf_args;
    std::set<std::vector<Rational>> inf_seen;
    FnVector floor_value = zero_vector(v.domain);
    bool first = true;
    for (int tau : tau_order) {
      auto [value, expr] = pair_witness(space, sigma, tau, v, column_order);
      if (!inf_seen.insert(value.values).second) continue;
      inf_args.push_back(std::move(expr));
      floor_value = first ? value : inf(floor_value, value);
      first = false;
    }
    if (!sup_seen.insert(floor_value.values).second) continue;
    sup_args.push_back(inf_args.size() == 1 ? std::move(inf_args[0])
                                            : SupInfExpr::inf_of(std::move(inf_args)));
  }
  return sup_args.size() == 1 ? std::move(sup_args[0])
                              : SupInfExpr::sup_of(std::move(sup_args));
}

}  // namespace

Sublattice sublattice_closure(const Subspace& space, std::uint64_t cert_seed) {
  Sublattice lattice;
  lattice.space = two_point_span(space);
  lattice.generators = space.basis;
  std::mt19937_64 rng(cert_seed ^ 0x5ca1ab1eULL);
  for (const auto& v : lattice.space.basis) {
    SupInfExpr cert = build_certificate(space, v, rng);
    if (!(eval_expr(cert, lattice.generators, space.ambient) == v))
      fail(ErrorCode::Internal, "closure certificate does not evaluate to its basis vector");
    lattice.certificates.push_back(std::move(cert));
  }
  return lattice;
}

Sublattice as_sublattice(const Subspace& space) {
  Sublattice closed = sublattice_closure(space);
  if (closed.dim() != space.dim()) {
    auto check = is_sublattice(space);
    std::string witness =
        check.witness ? to_string(check.witness->x) + " v " + to_string(check.witness->y) +
                            " = " + to_string(check.witness->join)
                      : "closure grows from dim " + std::to_string(space.dim()) + " to " +
                            std::to_string(closed.dim());
    fail(ErrorCode::NotSublattice, "space is not closed under pointwise sup", witness);
  }
  return closed;
}

LatticeHom make_hom(Sublattice domain, PointSet codomain, std::vector<FnVector> images) {
  if (static_cast<int>(images.size()) != domain.dim())
    fail(ErrorCode::DimensionError, "one image per domain basis vector required");
  for (const auto& im : images)
    if (!(im.domain == codomain))
      fail(ErrorCode::DimensionError, "image ambient differs from codomain");
  return LatticeHom{std::move(domain), codomain, std::move(images), false};
}

FnVector apply_hom(const LatticeHom& hom, const FnVector& x) {
  auto c = coords(hom.domain.space, x);
  if (!c) fail(ErrorCode::NotInCarrier, "vector outside the homomorphism domain",
               to_string(x));
  FnVector acc = zero_vector(hom.codomain);
  for (std::size_t i = 0; i < c->size(); ++i) acc = acc + (*c)[i] * hom.images[i];
  return acc;
}

LatticeHom compose(const LatticeHom& second, const LatticeHom& first) {
  std::vector<FnVector> images;
  for (const auto& im : first.images) images.push_back(apply_hom(second, im));
  LatticeHom h = make_hom(first.domain, second.codomain, std::move(images));
  h.certified = first.certified && second.certified;
  return h;
}

int enumeration_bound() {
  if (const char* env = std::getenv("FLATTICE_MAX_POINTS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

namespace {

struct SignClasses {
  std::vector<int> reps;            // representative points
  std::vector<int> rep_index;      // per point: index into reps, -1 if zero column
  std::vector<int> tie_sign;       // per point: sign relative to its rep
};

SignClasses classify_columns(const Matrix& cols) {
  SignClasses sc;
  const int n = static_cast<int>(cols.size());
  sc.rep_index.assign(n, -1);
  sc.tie_sign.assign(n, 1);
  for (int p = 0; p < n; ++p) {
    bool zero = std::all_of(cols[p].begin(), cols[p].end(),
                            [](const Rational& x) { return x == 0; });
    if (zero) continue;
    bool tied = false;
    for (std::size_t r = 0; r < sc.reps.size() && !tied; ++r) {
      const Row& rep = cols[sc.reps[r]];
      // proportional? find lambda with cols[p] = lambda * rep
      Rational lambda;
      bool ok = true, found = false;
      for (std::size_t j = 0; j < rep.size(); ++j) {
        if (rep[j] == 0) {
          if (cols[p][j] != 0) { ok = false; break; }
          continue;
        }
        Rational l = cols[p][j] / rep[j];
        if (!found) { lambda = l; found = true; }
        else if (l != lambda) { ok = false; break; }
      }
      if (ok && found) {
        sc.rep_index[p] = static_cast<int>(r);
        sc.tie_sign[p] = lambda > 0 ? 1 : -1;
        tied = true;
      }
    }
    if (!tied) {
      sc.rep_index[p] = static_cast<int>(sc.reps.size());
      sc.tie_sign[p] = 1;
      sc.reps.push_back(p);
    }
  }
  return sc;
}

bool vanishes_on(const Row& row, const Matrix& basis) {
  return std::all_of(basis.begin(), basis.end(),
                     [&](const Row& b) { return dot(row, b) == 0; });
}

}  // namespace

LatticeHomCheck check_lattice_hom(LatticeHom& hom, int max_points) {
  const int bound = max_points > 0 ? max_points : enumeration_bound();
  const int n = hom.domain.ambient().size;
  const int m = hom.codomain.size;
  if (n + m > bound)
    fail(ErrorCode::SizeLimit, "domain points + codomain points exceed enumeration bound " +
                                   std::to_string(bound));
  const int d = hom.domain.dim();
  if (d == 0) {
    hom.certified = true;
    return {true, std::nullopt};
  }

  const auto& basis = hom.domain.space.basis;
  const auto& pivots = hom.domain.space.pivots;
  Matrix cols(n, Row(d));
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < d; ++i) cols[p][i] = basis[i][p];
  Matrix img_rows(m, Row(d));  // Tx value at rho as a row over coords
  for (int rho = 0; rho < m; ++rho)
    for (int i = 0; i < d; ++i) img_rows[rho][i] = hom.images[i][rho];

  SignClasses sc = classify_columns(cols);
  const int r = static_cast<int>(sc.reps.size());

  auto report_failure = [&](const Matrix& cone_rows, const Row& side_row,
                            const Row& defect) -> LatticeHomCheck {
    LinSystem sys;
    sys.vars = d;
    for (const auto& row : cone_rows) sys.add_homogeneous(row, Rel::Ge);
    sys.add_homogeneous(side_row, Rel::Ge);
    sys.add_homogeneous(defect, Rel::Gt);
    auto t0 = fm_sample(sys);
    if (!t0) {
      Row neg = defect;
      for (auto& x : neg) x = -x;
      LinSystem sys2;
      sys2.vars = d;
      for (const auto& row : cone_rows) sys2.add_homogeneous(row, Rel::Ge);
      sys2.add_homogeneous(side_row, Rel::Ge);
      sys2.add_homogeneous(neg, Rel::Gt);
      t0 = fm_sample(sys2);
    }
    if (!t0) fail(ErrorCode::Internal, "defect cell lost its witness");
    FnVector x = from_coords(hom.domain.space, *t0);
    FnVector lhs = apply_hom(hom, abs(x));
    FnVector rhs = abs(apply_hom(hom, x));
    if (lhs == rhs) fail(ErrorCode::Internal, "witness does not separate T|x| and |Tx|");
    return {false, x};
  };

  // Sign symmetry x <-> -x lets us pin the first representative positive.
  const long long cells = r == 0 ? 1 : (1LL << (r - 1));
  for (long long mask = 0; mask < cells; ++mask) {
    std::vector<int> rep_sign(std::max(r, 1), 1);
    for (int b = 1; b < r; ++b) rep_sign[b] = (mask >> (b - 1)) & 1 ? -1 : 1;
    std::vector<int> sign(n, 1);
    for (int p = 0; p < n; ++p)
      if (sc.rep_index[p] >= 0) sign[p] = rep_sign[sc.rep_index[p]] * sc.tie_sign[p];

    Matrix cone_rows;
    cone_rows.reserve(r);
    for (int b = 0; b < r; ++b) {
      Row row = cols[sc.reps[b]];
      if (rep_sign[b] < 0)
        for (auto& x : row) x = -x;
      cone_rows.push_back(std::move(row));
    }
    Matrix span = cone_span(cone_rows, d);
    if (span.empty()) continue;

    // |x| coordinates on this cell read off the pivots with their signs.
    std::vector<int> pivot_sign(d);
    for (int j = 0; j < d; ++j) pivot_sign[j] = sign[pivots[j]];

    // Audit: D_s x must stay inside the domain space on this cell.
    for (int p = 0; p < n; ++p) {
      Row audit(d);
      bool nonzero = false;
      for (int j = 0; j < d; ++j) {
        audit[j] = cols[p][j] * Rational(pivot_sign[j] - sign[p]);
        nonzero = nonzero || audit[j] != 0;
      }
      if (nonzero && !vanishes_on(audit, span))
        fail(ErrorCode::NotSublattice,
             "domain is not closed under absolute value on a sign cell");
    }

    for (int rho = 0; rho < m; ++rho) {
      Row g(d);  // T|x| at rho over coords
      for (int j = 0; j < d; ++j) g[j] = img_rows[rho][j] * pivot_sign[j];
      const Row& mr = img_rows[rho];
      for (int side : {1, -1}) {
        Row side_row = mr;
        if (side < 0)
          for (auto& x : side_row) x = -x;
        Row defect(d);
        bool zero_defect = true;
        for (int j = 0; j < d; ++j) {
          defect[j] = g[j] - Rational(side) * mr[j];
          zero_defect = zero_defect && defect[j] == 0;
        }
        if (zero_defect) continue;
        Matrix sub = cone_rows;
        sub.push_back(side_row);
        Matrix sub_span = cone_span(sub, d);
        if (sub_span.empty()) continue;
        if (!vanishes_on(defect, sub_span))
          return report_failure(cone_rows, side_row, defect);
      }
    }
  }
  hom.certified = true;
  return {true, std::nullopt};
}

PositivityCheck check_positive_map(const Sublattice& domain,
                                   const std::vector<FnVector>& images,
                                   PointSet codomain, int max_points) {
  const int bound = max_points > 0 ? max_points : enumeration_bound();
  const int n = domain.ambient().size;
  const int m = codomain.size;
  if (n + m > bound)
    fail(ErrorCode::SizeLimit, "domain points + codomain points exceed enumeration bound " +
                                   std::to_string(bound));
  const int d = domain.dim();
  if (d == 0) return {true, std::nullopt};
  Matrix cols(n, Row(d));
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < d; ++i) cols[p][i] = domain.space.basis[i][p];
  for (int rho = 0; rho < m; ++rho) {
    Row neg(d);
    for (int i = 0; i < d; ++i) neg[i] = -images[i][rho];
    LinSystem sys;
    sys.vars = d;
    for (const auto& row : cols) sys.add_homogeneous(row, Rel::Ge);
    sys.add_homogeneous(neg, Rel::Gt);
    if (auto t0 = fm_sample(sys)) {
      return {false, from_coords(domain.space, *t0)};
    }
  }
  return {true, std::nullopt};
}

FnVector restrict_vector(const FnVector& v, const std::vector<int>& points) {
  std::vector<Rational> values;
  values.reserve(points.size());
  for (int p : points) values.push_back(v[p]);
  return FnVector{PointSet{static_cast<int>(points.size())}, std::move(values)};
}

}  // namespace flattice
