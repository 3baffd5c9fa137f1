#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sfs/rational.hpp"

namespace sfs {

enum class Geometry { Bad, Elliptic, Parabolic, Hyperbolic };

const char* to_string(Geometry g);
std::ostream& operator<<(std::ostream& os, Geometry g);

// Closed 2-orbifold: an underlying closed surface plus cone points.
// For orientable surfaces `genus` is the usual genus; for non-orientable
// ones it is the cross-cap count (>= 1). Cone orders are kept sorted.
class Orbifold {
 public:
  Orbifold(bool orientable, long long genus, std::vector<long long> cone_orders);

  bool orientable() const { return orientable_; }
  long long genus() const { return genus_; }
  const std::vector<long long>& cone_orders() const { return cone_orders_; }

  friend bool operator==(const Orbifold&, const Orbifold&) = default;

 private:
  bool orientable_;
  long long genus_;
  std::vector<long long> cone_orders_;
};

// chi of the underlying surface: 2 - 2g (orientable) or 2 - g (non-orientable).
Rational underlying_euler_characteristic(const Orbifold& o);

// chi^orb = chi(underlying) - sum_i (1 - 1/alpha_i)
Rational orbifold_euler_characteristic(const Orbifold& o);

// Bad orbifolds are the sphere with one cone point and the sphere with two
// cone points of distinct orders; otherwise the geometry follows the sign
// of chi^orb (negative: hyperbolic, zero: parabolic, positive: elliptic).
Geometry classify_geometry(const Orbifold& o);

// Sphere with exactly three cone points.
bool is_turnover(const Orbifold& o);

std::ostream& operator<<(std::ostream& os, const Orbifold& o);

}  // namespace sfs
