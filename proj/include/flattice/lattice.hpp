#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flattice/linalg.hpp"
#include "flattice/point_set.hpp"
#include "flattice/supinf.hpp"

namespace flattice {

/// A linear subspace of the functions on a finite point set, held as the
/// canonical reduced-echelon basis (unique per subspace, so equality of
/// spaces is equality of bases).
struct Subspace {
  PointSet ambient{1};
  std::vector<FnVector> basis;
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(basis.size()); }
};

Subspace make_subspace(PointSet ambient, const std::vector<FnVector>& vectors);
/// Infers the ambient from the vectors; MixedAmbient if they disagree,
/// DimensionError when empty (no ambient to infer).
Subspace make_subspace(const std::vector<FnVector>& vectors);
Subspace full_space(PointSet ambient);

bool contains(const Subspace& space, const FnVector& v);
std::optional<Row> coords(const Subspace& space, const FnVector& v);
FnVector from_coords(const Subspace& space, const Row& c);
bool same_space(const Subspace& a, const Subspace& b);
bool contains_subspace(const Subspace& outer, const Subspace& inner);

/// Points where some member of the space is nonzero.
std::vector<int> upsilon(const Subspace& space);

/// A vector sublattice. When produced by closure it carries the original
/// generators and, per basis vector, a sup-inf certificate over them that
/// evaluates to the basis vector exactly.
struct Sublattice {
  Subspace space;
  std::vector<FnVector> generators;
  std::vector<SupInfExpr> certificates;

  int dim() const { return space.dim(); }
  PointSet ambient() const { return space.ambient; }
  bool has_certificates() const {
    return certificates.size() == space.basis.size();
  }
};

std::vector<int> upsilon(const Sublattice& lattice);
/// Admissible = some member is nonzero at every point.
bool is_admissible(const Sublattice& lattice);

/// The subspace cut out by the two-point criterion: v belongs iff for every
/// pair of points the restriction of v lies in the two-point sublattice
/// closure of the projection of X. Equals the generated sublattice.
Subspace two_point_span(const Subspace& space);

/// Pairwise membership oracle for the generated sublattice.
bool member_two_point(const Subspace& space, const FnVector& v);

struct SublatticeWitness {
  FnVector x, y, join;
};
struct SublatticeCheck {
  bool sublattice = false;
  std::optional<SublatticeWitness> witness;  // a join escaping the space
};
SublatticeCheck is_sublattice(const Subspace& space);

/// Smallest vector sublattice containing the space, with certificates over
/// the space's basis. `cert_seed` varies the (equally valid) certificate
/// choices, which the uniqueness checks exploit.
Sublattice sublattice_closure(const Subspace& space, std::uint64_t cert_seed = 0);

/// Same closure, but certificates are expressed over an explicit spanning
/// family (the tensor module passes the outer-product generators here).
Sublattice sublattice_closure_over(const std::vector<FnVector>& generators,
                                   PointSet ambient, std::uint64_t cert_seed = 0);

/// Wraps a space that is already a sublattice; NotSublattice otherwise.
Sublattice as_sublattice(const Subspace& space);

/// An exact linear map given by the images of the domain basis vectors.
struct LatticeHom {
  Sublattice domain;
  PointSet codomain{1};
  std::vector<FnVector> images;
  bool certified = false;
};

LatticeHom make_hom(Sublattice domain, PointSet codomain, std::vector<FnVector> images);
FnVector apply_hom(const LatticeHom& hom, const FnVector& x);
LatticeHom compose(const LatticeHom& second, const LatticeHom& first);

struct LatticeHomCheck {
  bool ok = false;
  std::optional<FnVector> witness;  // x with T|x| != |Tx|
};

/// Exact decision of T|x| = |Tx| over the whole domain by sign-cell
/// enumeration with Fourier-Motzkin feasibility. Sets `certified` on
/// success. SizeLimit when domain points + codomain points exceed the
/// bound (default from enumeration_bound()).
LatticeHomCheck check_lattice_hom(LatticeHom& hom, int max_points = 0);

struct PositivityCheck {
  bool ok = false;
  std::optional<FnVector> witness;  // x >= 0 with some negative image value
};
/// x >= 0 implies Tx >= 0, decided exactly.
PositivityCheck check_positive_map(const Sublattice& domain,
                                   const std::vector<FnVector>& images,
                                   PointSet codomain, int max_points = 0);

/// FLATTICE_MAX_POINTS env override, default 12.
int enumeration_bound();

FnVector restrict_vector(const FnVector& v, const std::vector<int>& points);

}  // namespace flattice
