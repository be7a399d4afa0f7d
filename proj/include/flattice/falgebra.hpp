#pragma once

#include <optional>
#include <vector>

#include "flattice/lattice.hpp"
#include "flattice/report.hpp"

namespace flattice {

/// A nonnegative multiplication weight, canonically zero off the carrier's
/// support set Upsilon.
struct Weight {
  PointSet ambient{1};
  std::vector<Rational> values;

  const Rational& operator[](int p) const { return values[p]; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight make_weight(PointSet ambient, std::vector<Rational> values);
Weight canonicalize_weight(Weight w, const Sublattice& carrier);
std::vector<int> weight_support(const Weight& w);

/// Ordered basis products b_i * b_j.
struct MultTable {
  std::vector<std::vector<FnVector>> products;
};

/// An f-algebra on a represented function lattice. The multiplication is
/// either the canonical weight form (x*y)(s) = w(s)x(s)y(s) or a bilinear
/// table over the carrier basis.
struct FAlgebra {
  Sublattice carrier;
  bool weight_form = true;
  Weight weight;
  MultTable table;
  bool verified = false;

  int dim() const { return carrier.dim(); }
  PointSet ambient() const { return carrier.ambient(); }
};

/// The elementary converse: any nonnegative weight whose basis products stay
/// inside the lattice defines an f-algebra multiplication.
FAlgebra build_from_weight(Sublattice carrier, Weight w);
FAlgebra algebra_from_table(Sublattice carrier, MultTable table);

FnVector mult(const FAlgebra& algebra, const FnVector& x, const FnVector& y);
MultTable table_of(const FAlgebra& algebra);
/// The canonical weight; extracts (and thereby checks) it for table algebras.
Weight weight_of(const FAlgebra& algebra);

/// Recovers the weight from a multiplication table by pointwise quotients on
/// Upsilon and verifies every table entry against the weight form. Failure
/// is exactly failure of the f-algebra axioms for this representation.
Weight extract_weight(const FAlgebra& algebra);

/// Weight of a positive, disjointness-preserving linear operator E -> S(Sigma)
/// given by images of the carrier basis (Tx = q.x on Upsilon).
Weight extract_orthomorphism_weight(const Sublattice& domain,
                                    const std::vector<FnVector>& images,
                                    int max_points = 0);

/// Weight on Upsilon(G) reproducing a partial product table G x G -> H.
Weight extract_partial_weight(const Sublattice& ambient_lattice, const Sublattice& inner,
                              const MultTable& partial);

bool is_semi_prime(const FAlgebra& algebra);
/// Nonzero x with x*x = 0, when one exists.
std::optional<FnVector> semi_prime_witness(const FAlgebra& algebra);

std::optional<FnVector> find_identity(const FAlgebra& algebra);

/// N = {c : c*c = 0}, as a sublattice (the kernel of restriction to supp w).
Sublattice nilpotent_band(const FAlgebra& algebra);

/// Disjoint complement of N inside L: members supported away from N.
Sublattice band_complement(const Sublattice& lattice, const Sublattice& band);

struct QuotientResult {
  FAlgebra algebra;       // semi-prime, on the support of the weight
  LatticeHom quotient_map;
};
QuotientResult quotient_by_band(const FAlgebra& algebra, const Sublattice& band);

struct SupportRestriction {
  FAlgebra algebra;  // strictly positive weight
  LatticeHom iso;    // injective lattice/algebra isomorphism onto the image
};
SupportRestriction restrict_to_support(const FAlgebra& algebra);

CheckReport verify_falgebra(const FAlgebra& algebra);

}  // namespace flattice
