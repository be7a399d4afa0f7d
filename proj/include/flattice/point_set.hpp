#pragma once

#include <string>
#include <vector>

#include "flattice/errors.hpp"
#include "flattice/rational.hpp"

namespace flattice {

/// A finite point set; points are the indices 0..size-1.
struct PointSet {
  int size = 1;

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

inline PointSet make_point_set(int size) {
  if (size < 1) fail(ErrorCode::SchemaError, "point set must have size >= 1");
  return PointSet{size};
}

/// A total rational-valued function on a finite point set. This is the
/// finite model of an element of S(Sigma).
struct FnVector {
  PointSet domain;
  std::vector<Rational> values;

  const Rational& operator[](int p) const { return values[p]; }
  Rational& operator[](int p) { return values[p]; }
  int size() const { return domain.size; }

  friend bool operator==(const FnVector&, const FnVector&) = default;
};

FnVector fn_vector(PointSet domain, std::vector<Rational> values);
FnVector zero_vector(PointSet domain);
FnVector unit_vector(PointSet domain, int point);

void require_same_domain(const FnVector& a, const FnVector& b);

FnVector operator+(const FnVector& a, const FnVector& b);
FnVector operator-(const FnVector& a, const FnVector& b);
FnVector operator-(const FnVector& a);
FnVector operator*(const Rational& c, const FnVector& a);

/// Pointwise product (the raw function product, not an algebra product).
FnVector pointwise_mul(const FnVector& a, const FnVector& b);
FnVector sup(const FnVector& a, const FnVector& b);
FnVector inf(const FnVector& a, const FnVector& b);
FnVector abs(const FnVector& a);
FnVector positive_part(const FnVector& a);

bool is_zero(const FnVector& a);
bool is_nonnegative(const FnVector& a);
/// Points where the value is nonzero.
std::vector<int> support(const FnVector& a);

std::string to_string(const FnVector& a);

}  // namespace flattice
