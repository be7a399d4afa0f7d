#include "flattice/falgebra.hpp"

#include <algorithm>
#include <set>

#include "flattice/errors.hpp"

namespace flattice {

Weight make_weight(PointSet ambient, std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != ambient.size)
    fail(ErrorCode::DimensionError, "weight length does not match point set");
  for (int p = 0; p < ambient.size; ++p)
    if (values[p] < 0)
      fail(ErrorCode::NegativeWeight, "weight has a negative entry at point " + std::to_string(p));
  return Weight{ambient, std::move(values)};
}

Weight canonicalize_weight(Weight w, const Sublattice& carrier) {
  if (!(w.ambient == carrier.ambient()))
    fail(ErrorCode::MixedAmbient, "weight ambient differs from carrier ambient");
  std::vector<bool> live(w.ambient.size, false);
  for (int p : upsilon(carrier)) live[p] = true;
  for (int p = 0; p < w.ambient.size; ++p)
    if (!live[p]) w.values[p] = 0;
  return w;
}

std::vector<int> weight_support(const Weight& w) {
  std::vector<int> s;
  for (int p = 0; p < w.ambient.size; ++p)
    if (w.values[p] != 0) s.push_back(p);
  return s;
}

FAlgebra build_from_weight(Sublattice carrier, Weight w) {
  w = canonicalize_weight(std::move(w), carrier);
  const auto& basis = carrier.space.basis;
  FnVector wv{w.ambient, w.values};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      FnVector prod = pointwise_mul(wv, pointwise_mul(basis[i], basis[j]));
      if (!contains(carrier.space, prod))
        fail(ErrorCode::NotClosed,
             "weighted product of basis pair (" + std::to_string(i) + "," + std::to_string(j) +
                 ") escapes the carrier",
             to_string(prod));
    }
  }
  FAlgebra a;
  a.carrier = std::move(carrier);
  a.weight_form = true;
  a.weight = std::move(w);
  a.verified = true;
  return a;
}

FAlgebra algebra_from_table(Sublattice carrier, MultTable table) {
  const int d = carrier.dim();
  if (static_cast<int>(table.products.size()) != d)
    fail(ErrorCode::DimensionError, "table must have one row per basis vector");
  for (const auto& row : table.products) {
    if (static_cast<int>(row.size()) != d)
      fail(ErrorCode::DimensionError, "table row arity mismatch");
    for (const auto& entry : row)
      if (!contains(carrier.space, entry))
        fail(ErrorCode::NotClosed, "table entry escapes the carrier", to_string(entry));
  }
  FAlgebra a;
  a.carrier = std::move(carrier);
  a.weight_form = false;
  a.table = std::move(table);
  a.verified = false;
  return a;
}

FnVector mult(const FAlgebra& algebra, const FnVector& x, const FnVector& y) {
  auto cx = coords(algebra.carrier.space, x);
  if (!cx) fail(ErrorCode::NotInCarrier, "left factor outside the carrier", to_string(x));
  auto cy = coords(algebra.carrier.space, y);
  if (!cy) fail(ErrorCode::NotInCarrier, "right factor outside the carrier", to_string(y));
  if (algebra.weight_form) {
    FnVector w{algebra.weight.ambient, algebra.weight.values};
    return pointwise_mul(w, pointwise_mul(x, y));
  }
  FnVector acc = zero_vector(algebra.ambient());
  for (std::size_t i = 0; i < cx->size(); ++i) {
    if ((*cx)[i] == 0) continue;
    for (std::size_t j = 0; j < cy->size(); ++j) {
      if ((*cy)[j] == 0) continue;
      acc = acc + ((*cx)[i] * (*cy)[j]) * algebra.table.products[i][j];
    }
  }
  return acc;
}

MultTable table_of(const FAlgebra& algebra) {
  if (!algebra.weight_form) return algebra.table;
  MultTable t;
  const auto& basis = algebra.carrier.space.basis;
  FnVector w{algebra.weight.ambient, algebra.weight.values};
  t.products.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      t.products[i].push_back(pointwise_mul(w, pointwise_mul(basis[i], basis[j])));
  return t;
}

Weight weight_of(const FAlgebra& algebra) {
  if (algebra.weight_form) return algebra.weight;
  return extract_weight(algebra);
}

Weight extract_weight(const FAlgebra& algebra) {
  if (algebra.weight_form) return algebra.weight;
  const auto& basis = algebra.carrier.space.basis;
  const auto& table = algebra.table.products;
  const PointSet ambient = algebra.ambient();
  std::vector<Rational> w(ambient.size, Rational(0));
  for (int p : upsilon(algebra.carrier)) {
    int pick = -1;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i][p] != 0) {
        pick = static_cast<int>(i);
        break;
      }
    w[p] = table[pick][pick][p] / (basis[pick][p] * basis[pick][p]);
    if (w[p] < 0)
      fail(ErrorCode::NegativeWeight,
           "weight is negative at point " + std::to_string(p), rational_string(w[p]));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (int p = 0; p < ambient.size; ++p) {
        if (table[i][j][p] != w[p] * basis[i][p] * basis[j][p])
          fail(ErrorCode::NotFAlgebra,
               "table is not of weight form at pair (" + std::to_string(i) + "," +
                   std::to_string(j) + "), point " + std::to_string(p),
               to_string(table[i][j]));
      }
    }
  }
  return Weight{ambient, std::move(w)};
}

Weight extract_orthomorphism_weight(const Sublattice& domain,
                                    const std::vector<FnVector>& images,
                                    int max_points) {
  if (images.size() != domain.space.basis.size())
    fail(ErrorCode::DimensionError, "one image per basis vector required");
  for (const auto& im : images)
    if (!(im.domain == domain.ambient()))
      fail(ErrorCode::MixedAmbient, "orthomorphism must map into functions on the same points");

  auto positive = check_positive_map(domain, images, domain.ambient(), max_points);
  if (!positive.ok)
    fail(ErrorCode::NotPositive, "operator is not positive",
         positive.witness ? to_string(*positive.witness) : "");

  const auto& basis = domain.space.basis;
  const PointSet ambient = domain.ambient();
  std::vector<Rational> q(ambient.size, Rational(0));
  for (int p : upsilon(domain)) {
    int pick = -1;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i][p] != 0) {
        pick = static_cast<int>(i);
        break;
      }
    q[p] = images[pick][p] / basis[pick][p];
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (images[i][p] != q[p] * basis[i][p])
        fail(ErrorCode::Inconsistent,
             "no single multiplier reproduces the operator at point " + std::to_string(p) +
                 "; the disjointness-preservation hypothesis fails",
             to_string(images[i]));
    }
    if (q[p] < 0) fail(ErrorCode::Internal, "positive operator produced a negative multiplier");
  }
  return Weight{ambient, std::move(q)};
}

Weight extract_partial_weight(const Sublattice& ambient_lattice, const Sublattice& inner,
                              const MultTable& partial) {
  if (!contains_subspace(ambient_lattice.space, inner.space))
    fail(ErrorCode::PreconditionFailed, "inner lattice is not contained in the ambient lattice");
  const auto& g = inner.space.basis;
  const int d = static_cast<int>(g.size());
  if (static_cast<int>(partial.products.size()) != d)
    fail(ErrorCode::DimensionError, "partial table must cover the inner basis");
  for (const auto& row : partial.products) {
    if (static_cast<int>(row.size()) != d)
      fail(ErrorCode::DimensionError, "partial table row arity mismatch");
    for (const auto& entry : row)
      if (!contains(ambient_lattice.space, entry))
        fail(ErrorCode::PreconditionFailed, "partial product leaves the ambient lattice",
             to_string(entry));
  }

  const PointSet ambient = inner.ambient();
  std::vector<Rational> w(ambient.size, Rational(0));
  for (int p : upsilon(inner)) {
    int pick = -1;
    for (int i = 0; i < d; ++i)
      if (g[i][p] != 0) {
        pick = i;
        break;
      }
    w[p] = partial.products[pick][pick][p] / (g[pick][p] * g[pick][p]);
    if (w[p] < 0)
      fail(ErrorCode::NegativeWeight, "partial weight is negative at point " + std::to_string(p));
  }
  std::vector<bool> live(ambient.size, false);
  for (int p : upsilon(inner)) live[p] = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int p = 0; p < ambient.size; ++p)
        if (live[p] && partial.products[i][j][p] != w[p] * g[i][p] * g[j][p])
          fail(ErrorCode::Inconsistent,
               "partial multiplication does not extend to any f-algebra: mismatch at pair (" +
                   std::to_string(i) + "," + std::to_string(j) + "), point " + std::to_string(p));
  return Weight{ambient, std::move(w)};
}

namespace {

// {x in L : x(p) = 0 for p in pts}, as basis vectors of L.
std::vector<FnVector> kernel_on_points(const Sublattice& lattice, const std::vector<int>& pts) {
  const int d = lattice.dim();
  Matrix constraints;
  for (int p : pts) {
    Row r(d);
    for (int i = 0; i < d; ++i) r[i] = lattice.space.basis[i][p];
    constraints.push_back(std::move(r));
  }
  Matrix coeffs = nullspace(constraints, d);
  std::vector<FnVector> vectors;
  for (const auto& c : coeffs) vectors.push_back(from_coords(lattice.space, c));
  return vectors;
}

}  // namespace

bool is_semi_prime(const FAlgebra& algebra) {
  return !semi_prime_witness(algebra).has_value();
}

std::optional<FnVector> semi_prime_witness(const FAlgebra& algebra) {
  Weight w = weight_of(algebra);
  auto kernel = kernel_on_points(algebra.carrier, weight_support(w));
  for (const auto& v : kernel)
    if (!is_zero(v)) return v;
  return std::nullopt;
}

std::optional<FnVector> find_identity(const FAlgebra& algebra) {
  Weight w = weight_of(algebra);
  FnVector e = zero_vector(algebra.ambient());
  for (int p : upsilon(algebra.carrier)) {
    if (w[p] == 0) return std::nullopt;
    e[p] = Rational(1) / w[p];
  }
  if (!contains(algebra.carrier.space, e)) return std::nullopt;
  for (const auto& b : algebra.carrier.space.basis)
    if (!(mult(algebra, e, b) == b))
      fail(ErrorCode::Internal, "identity candidate failed to act as identity");
  return e;
}

Sublattice nilpotent_band(const FAlgebra& algebra) {
  Weight w = weight_of(algebra);
  auto vectors = kernel_on_points(algebra.carrier, weight_support(w));
  return as_sublattice(make_subspace(algebra.ambient(), vectors));
}

Sublattice band_complement(const Sublattice& lattice, const Sublattice& band) {
  if (!contains_subspace(lattice.space, band.space))
    fail(ErrorCode::PreconditionFailed, "band is not contained in the lattice");
  std::set<int> zset;
  for (const auto& b : band.space.basis)
    for (int p : support(b)) zset.insert(p);
  std::vector<int> z(zset.begin(), zset.end());
  auto vectors = kernel_on_points(lattice, z);
  Sublattice result = as_sublattice(make_subspace(lattice.ambient(), vectors));
  for (const auto& x : result.space.basis)
    for (const auto& y : band.space.basis)
      if (!is_zero(inf(abs(x), abs(y))))
        fail(ErrorCode::Internal, "band complement member not disjoint from the band");
  return result;
}

namespace {

struct Restriction {
  FAlgebra algebra;
  LatticeHom map;
};

Restriction restrict_to_points(const FAlgebra& algebra, std::vector<int> pts) {
  Restriction r;
  if (pts.empty()) {
    // Zero algebra, materialized on a single dummy point.
    PointSet target{1};
    Sublattice zero = as_sublattice(make_subspace(target, {}));
    r.algebra = build_from_weight(zero, Weight{target, {Rational(0)}});
    std::vector<FnVector> images(algebra.dim(), zero_vector(target));
    r.map = make_hom(algebra.carrier, target, std::move(images));
    r.map.certified = true;
    return r;
  }
  PointSet target{static_cast<int>(pts.size())};
  std::vector<FnVector> images;
  for (const auto& b : algebra.carrier.space.basis) images.push_back(restrict_vector(b, pts));
  Sublattice image = as_sublattice(make_subspace(target, images));

  Weight w = weight_of(algebra);
  std::vector<Rational> wr;
  for (int p : pts) wr.push_back(w[p]);
  r.algebra = build_from_weight(image, Weight{target, std::move(wr)});
  r.map = make_hom(algebra.carrier, target, std::move(images));
  // Coordinate restriction commutes with pointwise sup/inf.
  r.map.certified = true;
  return r;
}

}  // namespace

QuotientResult quotient_by_band(const FAlgebra& algebra, const Sublattice& band) {
  Sublattice n = nilpotent_band(algebra);
  if (!same_space(n.space, band.space))
    fail(ErrorCode::PreconditionFailed, "band argument is not the nilpotent band");
  Weight w = weight_of(algebra);
  Restriction r = restrict_to_points(algebra, weight_support(w));
  if (!is_semi_prime(r.algebra))
    fail(ErrorCode::Internal, "quotient by the nilpotent band is not semi-prime");
  // Kernel of the quotient map is exactly the band.
  if (r.algebra.dim() + band.dim() != algebra.dim())
    fail(ErrorCode::Internal, "quotient dimension mismatch");
  for (const auto& b : band.space.basis)
    if (!is_zero(apply_hom(r.map, b)))
      fail(ErrorCode::Internal, "band member survives the quotient map");
  // The quotient map respects the multiplications.
  const auto& basis = algebra.carrier.space.basis;
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!(apply_hom(r.map, mult(algebra, x, y)) ==
            mult(r.algebra, apply_hom(r.map, x), apply_hom(r.map, y))))
        fail(ErrorCode::Internal, "quotient map is not multiplicative");
  return {std::move(r.algebra), std::move(r.map)};
}

SupportRestriction restrict_to_support(const FAlgebra& algebra) {
  if (auto witness = semi_prime_witness(algebra))
    fail(ErrorCode::NotSemiPrime, "algebra has a nonzero nilpotent; restriction would not be injective",
         to_string(*witness));
  Weight w = weight_of(algebra);
  Restriction r = restrict_to_points(algebra, weight_support(w));
  if (r.algebra.dim() != algebra.dim())
    fail(ErrorCode::Internal, "support restriction of a semi-prime algebra lost dimension");
  for (int p : upsilon(r.algebra.carrier))
    if (r.algebra.weight[p] <= 0)
      fail(ErrorCode::Internal, "support restriction weight is not strictly positive");
  return {std::move(r.algebra), std::move(r.map)};
}

CheckReport verify_falgebra(const FAlgebra& algebra) {
  CheckReport report;
  const auto& basis = algebra.carrier.space.basis;

  Subspace closed = two_point_span(algebra.carrier.space);
  report.add("carrier-sublattice", closed.dim() == algebra.carrier.dim());

  bool have_weight = false;
  Weight w{algebra.ambient(), std::vector<Rational>(algebra.ambient().size, Rational(0))};
  if (algebra.weight_form) {
    bool nonneg = std::all_of(algebra.weight.values.begin(), algebra.weight.values.end(),
                              [](const Rational& x) { return x >= 0; });
    report.add("weight-nonnegative", nonneg);
    Weight canon = canonicalize_weight(algebra.weight, algebra.carrier);
    report.add("weight-canonical-off-upsilon", canon == algebra.weight);
    bool closed_products = true;
    std::string witness;
    FnVector wv{algebra.weight.ambient, algebra.weight.values};
    for (std::size_t i = 0; i < basis.size() && closed_products; ++i)
      for (std::size_t j = i; j < basis.size() && closed_products; ++j) {
        FnVector prod = pointwise_mul(wv, pointwise_mul(basis[i], basis[j]));
        if (!contains(algebra.carrier.space, prod)) {
          closed_products = false;
          witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    report.add("products-in-carrier", closed_products, witness);
    have_weight = nonneg && closed_products;
    if (have_weight) w = algebra.weight;
  } else {
    bool entries_ok = true;
    std::string witness;
    for (const auto& row : algebra.table.products)
      for (const auto& entry : row)
        if (!contains(algebra.carrier.space, entry)) {
          entries_ok = false;
          witness = to_string(entry);
        }
    report.add("products-in-carrier", entries_ok, witness);
    try {
      w = extract_weight(algebra);
      have_weight = true;
      report.add("weight-form", true);
    } catch (const Error& e) {
      report.add("weight-form", false, e.what());
    }
  }

  MultTable table = table_of(algebra);
  bool commutative = true;
  std::string comm_witness;
  for (std::size_t i = 0; i < basis.size() && commutative; ++i)
    for (std::size_t j = 0; j < basis.size() && commutative; ++j)
      if (!(table.products[i][j] == table.products[j][i])) {
        commutative = false;
        comm_witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  report.add("commutative", commutative, comm_witness);

  bool associative = true;
  bool assoc_defined = true;
  std::string assoc_witness;
  for (std::size_t i = 0; i < basis.size() && associative && assoc_defined; ++i)
    for (std::size_t j = 0; j < basis.size() && associative && assoc_defined; ++j)
      for (std::size_t k = 0; k < basis.size() && associative && assoc_defined; ++k) {
        try {
          FnVector left = mult(algebra, table.products[i][j], basis[k]);
          FnVector right = mult(algebra, basis[i], table.products[j][k]);
          if (!(left == right)) {
            associative = false;
            assoc_witness = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")";
          }
        } catch (const Error&) {
          assoc_defined = false;
          assoc_witness = "product escaped the carrier";
        }
      }
  report.add("associative", associative && assoc_defined, assoc_witness);

  if (have_weight) {
    // Positivity on positive pairs and the disjointness axiom follow from
    // the weight form; exercise them on lattice-derived elements anyway.
    bool positive = true, disjointness = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        FnVector a = abs(basis[i]);
        FnVector b = abs(basis[j]);
        if (!is_nonnegative(mult(algebra, a, b))) positive = false;
        FnVector da = positive_part(a - b);
        FnVector db = positive_part(b - a);
        for (std::size_t k = 0; k < basis.size(); ++k) {
          FnVector c = abs(basis[k]);
          if (!is_zero(inf(mult(algebra, da, c), db))) disjointness = false;
          if (!is_zero(inf(mult(algebra, c, da), db))) disjointness = false;
        }
      }
    }
    report.add("positive-on-positives", positive);
    report.add("disjointness-axiom", disjointness);
  }
  return report;
}

}  // namespace flattice
