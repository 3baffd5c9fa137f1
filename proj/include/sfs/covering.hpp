#pragma once

#include <string>
#include <vector>

#include "sfs/seifert.hpp"

namespace sfs {

enum class CoverOrientation { preserving, reversing };

const char* to_string(CoverOrientation o);

// Diagnosis of one orientation branch of the covering test. The required
// fiber degree is pinned by the Euler-number ratio; diagnostics for the
// gcd and congruence conditions are evaluated at |ratio| whenever that is
// a nonzero integer, even if the branch already failed on orientation, so
// a DoesNotCover reason can name every violated condition.
struct CoveringCandidate {
  CoverOrientation orientation = CoverOrientation::preserving;
  Rational required_ratio;  // t/e (preserving) or -t/e (reversing)
  bool integral = false;    // ratio is a nonzero integer
  bool orientation_ok = false;  // ratio is positive
  Int degree = 0;               // |ratio| when integral, else 0
  std::vector<Fiber> gcd_clashes;
  std::vector<Fiber> congruence_failures;  // fibers with d*beta != s (mod alpha)

  bool passes() const {
    return integral && orientation_ok && gcd_clashes.empty() && congruence_failures.empty();
  }
  std::string describe_failure() const;  // first failed condition
};

struct CoveringVerdict {
  bool covers = false;
  Int degree = 0;  // >= 1 when covers
  CoverOrientation orientation = CoverOrientation::preserving;
  std::string reason;                        // set when !covers
  std::vector<CoveringCandidate> candidates;  // both orientations, when computed
};

std::ostream& operator<<(std::ostream& os, const CoveringVerdict& v);

// Euler number of the covered space under a fiber-preserving covering of
// the given fiber degree over the identity of the base.
Rational hurwitz_euler(long long degree, const Rational& eu_cover);

// Pushes the invariant of the covering space down a degree-d fiberwise
// covering: b -> d*b and (alpha, beta) -> (alpha, d*beta), normalized.
// Multiplies the Euler number by d. Requires gcd(d, alpha_i) = 1.
SeifertInvariant fiberwise_pushforward(const SeifertInvariant& mhat, long long degree);

// Decides whether m admits a fiber-preserving covering onto the unit
// tangent bundle of its base, over the identity of the base. The degree
// is forced per orientation by the Euler-number ratio; the branch then
// needs gcd(d, alpha_i) = 1 and d*beta_i = s (mod alpha_i) at every
// fiber (s = +1 preserving, -1 reversing). Coverings that move the base
// orbifold are outside this test's scope.
CoveringVerdict covers_unit_tangent_bundle(const SeifertInvariant& m);

// Invariant of the fibered space pulled back over the orientation double
// cover of a non-orientable base: orientable genus = cross-caps - 1, every
// exceptional fiber duplicated, b doubled. Doubles the Euler number.
SeifertInvariant orientation_double_cover(const SeifertInvariant& m);

}  // namespace sfs
