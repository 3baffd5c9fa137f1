#pragma once

#include <compare>
#include <ostream>
#include <vector>

#include "sfs/orbifold.hpp"
#include "sfs/rational.hpp"

namespace sfs {

// Exceptional fiber data (alpha, beta), gcd(alpha, beta) = 1.
struct Fiber {
  long long alpha = 1;
  long long beta = 0;
  friend auto operator<=>(const Fiber&, const Fiber&) = default;
};

std::ostream& operator<<(std::ostream& os, const Fiber& f);

// Seifert invariant: base surface data, integer obstruction term b (which
// absorbs every (1, .) slot), and the list of (alpha, beta) fiber pairs.
// Values with alpha = 1 or beta outside [0, alpha) are legal inputs;
// normalize() produces the canonical representative.
class SeifertInvariant {
 public:
  SeifertInvariant(bool base_orientable, long long base_genus, long long b,
                   std::vector<Fiber> fibers);

  bool base_orientable() const { return base_orientable_; }
  long long base_genus() const { return base_genus_; }
  long long b() const { return b_; }
  const std::vector<Fiber>& fibers() const { return fibers_; }

  // Base orbifold; cone orders are the alpha >= 2 of the fibers.
  Orbifold base() const;

  bool is_normalized() const;

  friend bool operator==(const SeifertInvariant&, const SeifertInvariant&) = default;
  friend auto operator<=>(const SeifertInvariant&, const SeifertInvariant&) = default;

 private:
  bool base_orientable_;
  long long base_genus_;
  long long b_;
  std::vector<Fiber> fibers_;
};

std::ostream& operator<<(std::ostream& os, const SeifertInvariant& m);

// Canonical form: every beta reduced into [0, alpha) with b compensating,
// (1, beta) slots absorbed into b, fibers sorted by (alpha, beta).
// Leaves euler_number unchanged and is idempotent.
SeifertInvariant normalize(const SeifertInvariant& m);

// e(M) = -(b + sum_i beta_i / alpha_i), exact.
Rational euler_number(const SeifertInvariant& m);

// Same fibered space with the opposite orientation: negate b and every
// beta, then normalize. Flips the sign of euler_number.
SeifertInvariant reverse_orientation(const SeifertInvariant& m);

// Fiber-preserving homeomorphism test over a hyperbolic base (where the
// Seifert fibering is unique). With oriented = false the comparison also
// accepts the orientation-reversed counterpart.
// Throws Errc::non_hyperbolic_base otherwise: below that threshold the
// fibering need not be unique and equality of invariants would mislead.
bool same_manifold(const SeifertInvariant& m1, const SeifertInvariant& m2, bool oriented);

// Unit tangent bundle of an orientable hyperbolic orbifold: fibers
// (alpha_i, 1) over each cone point and b = 2 - 2*genus - #cones, so that
// euler_number = -chi^orb > 0.
SeifertInvariant unit_tangent_bundle(const Orbifold& o);

}  // namespace sfs
