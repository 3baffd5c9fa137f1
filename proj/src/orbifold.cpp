#include "sfs/orbifold.hpp"

#include <algorithm>

#include "sfs/error.hpp"

namespace sfs {

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::Bad: return "bad";
    case Geometry::Elliptic: return "elliptic";
    case Geometry::Parabolic: return "parabolic";
    case Geometry::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, Geometry g) { return os << to_string(g); }

Orbifold::Orbifold(bool orientable, long long genus, std::vector<long long> cone_orders)
    : orientable_(orientable), genus_(genus), cone_orders_(std::move(cone_orders)) {
  if (genus_ < 0) throw Error(Errc::invalid_argument, "genus must be non-negative");
  if (!orientable_ && genus_ == 0)
    throw Error(Errc::invalid_argument, "a non-orientable surface has at least one cross-cap");
  for (long long a : cone_orders_)
    if (a < 2) throw Error(Errc::invalid_argument, "cone orders must be at least 2");
  std::sort(cone_orders_.begin(), cone_orders_.end());
}

Rational underlying_euler_characteristic(const Orbifold& o) {
  return o.orientable() ? Rational(2 - 2 * o.genus()) : Rational(2 - o.genus());
}

Rational orbifold_euler_characteristic(const Orbifold& o) {
  Rational chi = underlying_euler_characteristic(o);
  for (long long a : o.cone_orders()) chi -= Rational(a - 1, a);
  return chi;
}

Geometry classify_geometry(const Orbifold& o) {
  const auto& cones = o.cone_orders();
  bool sphere = o.orientable() && o.genus() == 0;
  if (sphere && cones.size() == 1) return Geometry::Bad;
  if (sphere && cones.size() == 2 && cones[0] != cones[1]) return Geometry::Bad;
  int s = orbifold_euler_characteristic(o).sign();
  if (s < 0) return Geometry::Hyperbolic;
  if (s == 0) return Geometry::Parabolic;
  return Geometry::Elliptic;
}

bool is_turnover(const Orbifold& o) {
  return o.orientable() && o.genus() == 0 && o.cone_orders().size() == 3;
}

std::ostream& operator<<(std::ostream& os, const Orbifold& o) {
  os << (o.orientable() ? "g=" : "g=n") << o.genus() << " cones(";
  for (std::size_t i = 0; i < o.cone_orders().size(); ++i) {
    if (i) os << ",";
    os << o.cone_orders()[i];
  }
  return os << ")";
}

}  // namespace sfs
