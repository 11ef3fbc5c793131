#include "crooked/vec.hpp"

#include <numeric>

namespace crooked {

namespace {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

}  // namespace

Vec3<Rat> primitive(const Vec3<Rat>& v) {
  if (v.is_zero()) return v;
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Int m = lcm(lcm(denominator(v.x), denominator(v.y)), denominator(v.z));
  Int nx = numerator(v.x) * (m / denominator(v.x));
  Int ny = numerator(v.y) * (m / denominator(v.y));
  Int nz = numerator(v.z) * (m / denominator(v.z));
  Int g = gcd(gcd(nx, ny), nz);
  return {Rat(nx / g), Rat(ny / g), Rat(nz / g)};
}

Vec3<double> primitive(const Vec3<double>& v) {
  double n = std::sqrt(euclid_norm2(v));
  if (n == 0.0) return v;
  return {v.x / n, v.y / n, v.z / n};
}

}  // namespace crooked
