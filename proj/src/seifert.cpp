#include "sfs/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sfs/error.hpp"

namespace sfs {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::invalid_argument, "integer overflow in Seifert data");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::invalid_argument, "integer overflow in Seifert data");
  return r;
}

// Largest k with k*alpha <= beta (floor division for any sign of beta).
long long floor_div(long long beta, long long alpha) {
  long long q = beta / alpha;
  if (beta % alpha != 0 && (beta < 0) != (alpha < 0)) --q;
  return q;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Fiber& f) {
  return os << "(" << f.alpha << "," << f.beta << ")";
}

SeifertInvariant::SeifertInvariant(bool base_orientable, long long base_genus, long long b,
                                   std::vector<Fiber> fibers)
    : base_orientable_(base_orientable), base_genus_(base_genus), b_(b),
      fibers_(std::move(fibers)) {
  if (base_genus_ < 0) throw Error(Errc::invalid_argument, "genus must be non-negative");
  if (!base_orientable_ && base_genus_ == 0)
    throw Error(Errc::invalid_argument, "a non-orientable base has at least one cross-cap");
  for (const Fiber& f : fibers_) {
    if (f.alpha < 1) throw Error(Errc::invalid_argument, "fiber alpha must be positive");
    if (std::gcd(f.alpha, f.beta) != 1)
      throw Error(Errc::gcd_violation, "fiber (" + std::to_string(f.alpha) + "," +
                                           std::to_string(f.beta) + ") has gcd(alpha, beta) != 1");
  }
}

Orbifold SeifertInvariant::base() const {
  std::vector<long long> cones;
  for (const Fiber& f : fibers_)
    if (f.alpha >= 2) cones.push_back(f.alpha);
  return Orbifold(base_orientable_, base_genus_, std::move(cones));
}

bool SeifertInvariant::is_normalized() const {
  for (const Fiber& f : fibers_)
    if (f.alpha < 2 || f.beta < 0 || f.beta >= f.alpha) return false;
  return std::is_sorted(fibers_.begin(), fibers_.end());
}

std::ostream& operator<<(std::ostream& os, const SeifertInvariant& m) {
  os << "SFS(g=" << (m.base_orientable() ? "" : "n") << m.base_genus() << "; b=" << m.b() << ";";
  for (std::size_t i = 0; i < m.fibers().size(); ++i)
    os << (i ? "," : " ") << m.fibers()[i];
  return os << ")";
}

SeifertInvariant normalize(const SeifertInvariant& m) {
  long long b = m.b();
  std::vector<Fiber> fibers;
  fibers.reserve(m.fibers().size());
  for (const Fiber& f : m.fibers()) {
    if (f.alpha == 1) {
      // A (1, beta) slot contributes beta/1 to the sum; fold it into b.
      b = checked_add(b, f.beta);
      continue;
    }
    long long k = floor_div(f.beta, f.alpha);
    b = checked_add(b, k);
    fibers.push_back({f.alpha, f.beta - checked_mul(k, f.alpha)});
  }
  std::sort(fibers.begin(), fibers.end());
  return SeifertInvariant(m.base_orientable(), m.base_genus(), b, std::move(fibers));
}

Rational euler_number(const SeifertInvariant& m) {
  Rational sum(m.b());
  for (const Fiber& f : m.fibers()) sum += Rational(f.beta, f.alpha);
  return -sum;
}

SeifertInvariant reverse_orientation(const SeifertInvariant& m) {
  std::vector<Fiber> fibers = m.fibers();
  for (Fiber& f : fibers) f.beta = -f.beta;
  return normalize(SeifertInvariant(m.base_orientable(), m.base_genus(), -m.b(), std::move(fibers)));
}

bool same_manifold(const SeifertInvariant& m1, const SeifertInvariant& m2, bool oriented) {
  if (classify_geometry(m1.base()) != Geometry::Hyperbolic ||
      classify_geometry(m2.base()) != Geometry::Hyperbolic)
    throw Error(Errc::non_hyperbolic_base,
                "invariant comparison requires hyperbolic bases (unique Seifert fibering)");
  SeifertInvariant n1 = normalize(m1);
  if (n1 == normalize(m2)) return true;
  return !oriented && n1 == reverse_orientation(m2);
}

SeifertInvariant unit_tangent_bundle(const Orbifold& o) {
  if (!o.orientable())
    throw Error(Errc::non_orientable_base, "unit tangent bundle emitter needs an orientable base");
  if (classify_geometry(o) != Geometry::Hyperbolic)
    throw Error(Errc::non_hyperbolic_base, "unit tangent bundle emitter needs a hyperbolic base");
  std::vector<Fiber> fibers;
  fibers.reserve(o.cone_orders().size());
  for (long long a : o.cone_orders()) fibers.push_back({a, 1});
  long long b = 2 - 2 * o.genus() - static_cast<long long>(fibers.size());
  return SeifertInvariant(true, o.genus(), b, std::move(fibers));
}

}  // namespace sfs
