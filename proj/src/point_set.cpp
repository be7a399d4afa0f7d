#include "flattice/point_set.hpp"

#include <algorithm>

namespace flattice {

FnVector fn_vector(PointSet domain, std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != domain.size)
    fail(ErrorCode::DimensionError, "vector length does not match point set size");
  return FnVector{domain, std::move(values)};
}

FnVector zero_vector(PointSet domain) {
  return FnVector{domain, std::vector<Rational>(domain.size, Rational(0))};
}

FnVector unit_vector(PointSet domain, int point) {
  FnVector v = zero_vector(domain);
  v[point] = 1;
  return v;
}

void require_same_domain(const FnVector& a, const FnVector& b) {
  if (!(a.domain == b.domain))
    fail(ErrorCode::MixedAmbient, "vectors live on different point sets");
}

FnVector operator+(const FnVector& a, const FnVector& b) {
  require_same_domain(a, b);
  FnVector r = a;
  for (int p = 0; p < r.size(); ++p) r[p] += b[p];
  return r;
}

FnVector operator-(const FnVector& a, const FnVector& b) {
  require_same_domain(a, b);
  FnVector r = a;
  for (int p = 0; p < r.size(); ++p) r[p] -= b[p];
  return r;
}

FnVector operator-(const FnVector& a) {
  FnVector r = a;
  for (auto& x : r.values) x = -x;
  return r;
}

FnVector operator*(const Rational& c, const FnVector& a) {
  FnVector r = a;
  for (auto& x : r.values) x *= c;
  return r;
}

FnVector pointwise_mul(const FnVector& a, const FnVector& b) {
  require_same_domain(a, b);
  FnVector r = a;
  for (int p = 0; p < r.size(); ++p) r[p] *= b[p];
  return r;
}

FnVector sup(const FnVector& a, const FnVector& b) {
  require_same_domain(a, b);
  FnVector r = a;
  for (int p = 0; p < r.size(); ++p) r[p] = std::max(a[p], b[p]);
  return r;
}

FnVector inf(const FnVector& a, const FnVector& b) {
  require_same_domain(a, b);
  FnVector r = a;
  for (int p = 0; p < r.size(); ++p) r[p] = std::min(a[p], b[p]);
  return r;
}

FnVector abs(const FnVector& a) {
  FnVector r = a;
  for (auto& x : r.values)
    if (x < 0) x = -x;
  return r;
}

FnVector positive_part(const FnVector& a) {
  FnVector r = a;
  for (auto& x : r.values)
    if (x < 0) x = 0;
  return r;
}

bool is_zero(const FnVector& a) {
  return std::all_of(a.values.begin(), a.values.end(),
                     [](const Rational& x) { return x == 0; });
}

bool is_nonnegative(const FnVector& a) {
  return std::all_of(a.values.begin(), a.values.end(),
                     [](const Rational& x) { return x >= 0; });
}

std::vector<int> support(const FnVector& a) {
  std::vector<int> s;
  for (int p = 0; p < a.size(); ++p)
    if (a[p] != 0) s.push_back(p);
  return s;
}

std::string to_string(const FnVector& a) {
  std::string s = "(";
  for (int p = 0; p < a.size(); ++p) {
    if (p) s += ",";
    s += rational_string(a[p]);
  }
  s += ")";
  return s;
}

}  // namespace flattice
