#include "sfs/covering.hpp"

#include <numeric>
#include <sstream>

#include "sfs/error.hpp"

namespace sfs {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::invalid_argument, "integer overflow in covering arithmetic");
  return r;
}

std::string list_fibers(const std::vector<Fiber>& fs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? "," : "") << fs[i];
  return os.str();
}

}  // namespace

const char* to_string(CoverOrientation o) {
  return o == CoverOrientation::preserving ? "preserving" : "reversing";
}

std::string CoveringCandidate::describe_failure() const {
  const int s = orientation == CoverOrientation::preserving ? 1 : -1;
  std::ostringstream os;
  if (!integral || !orientation_ok)
    os << "required fiber degree " << to_string(required_ratio) << " is not a positive integer";
  if (!gcd_clashes.empty()) {
    if (os.tellp() > 0) os << ", and ";
    os << "degree " << degree << " shares a factor with cone orders at "
       << list_fibers(gcd_clashes);
  }
  if (!congruence_failures.empty()) {
    if (os.tellp() > 0) os << ", and ";
    os << "degree " << degree << " fails the congruence d*beta = " << s
       << " (mod alpha) at " << list_fibers(congruence_failures);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoveringVerdict& v) {
  if (v.covers)
    return os << "Covers(degree=" << v.degree << ", " << to_string(v.orientation) << ")";
  return os << "DoesNotCover: " << v.reason;
}

Rational hurwitz_euler(long long degree, const Rational& eu_cover) {
  if (degree < 1) throw Error(Errc::invalid_argument, "covering degree must be >= 1");
  return Rational(degree) * eu_cover;
}

SeifertInvariant fiberwise_pushforward(const SeifertInvariant& mhat, long long degree) {
  if (degree < 1) throw Error(Errc::invalid_argument, "covering degree must be >= 1");
  for (const Fiber& f : mhat.fibers())
    if (std::gcd(degree, f.alpha) != 1)
      throw Error(Errc::degree_cone_clash,
                  "degree " + std::to_string(degree) + " shares a factor with cone order " +
                      std::to_string(f.alpha));
  std::vector<Fiber> fibers = mhat.fibers();
  for (Fiber& f : fibers) f.beta = checked_mul(degree, f.beta);
  return normalize(SeifertInvariant(mhat.base_orientable(), mhat.base_genus(),
                                    checked_mul(degree, mhat.b()), std::move(fibers)));
}

CoveringVerdict covers_unit_tangent_bundle(const SeifertInvariant& m) {
  Orbifold base = m.base();
  if (!base.orientable())
    throw Error(Errc::non_orientable_base, "covering test needs an orientable base orbifold");
  if (classify_geometry(base) != Geometry::Hyperbolic)
    throw Error(Errc::non_hyperbolic_base, "covering test needs a hyperbolic base orbifold");

  SeifertInvariant n = normalize(m);
  Rational e = euler_number(n);
  Rational t = euler_number(unit_tangent_bundle(base));

  CoveringVerdict v;
  if (e.is_zero()) {
    v.reason = "Euler number zero; target has nonzero Euler number";
    return v;
  }

  for (int s : {+1, -1}) {
    CoveringCandidate c;
    c.orientation = s > 0 ? CoverOrientation::preserving : CoverOrientation::reversing;
    Rational ratio = t / e;
    if (s < 0) ratio = -ratio;
    c.required_ratio = ratio;
    c.orientation_ok = ratio.sign() > 0;
    c.integral = ratio.is_integer();
    if (c.integral) {
      c.degree = ratio.num() < 0 ? Int(-ratio.num()) : ratio.num();
      for (const Fiber& f : n.fibers()) {
        if (boost::multiprecision::gcd(c.degree, Int(f.alpha)) != 1) c.gcd_clashes.push_back(f);
        Int r = (c.degree * f.beta - s) % f.alpha;
        if (r < 0) r += f.alpha;
        if (r != 0) c.congruence_failures.push_back(f);
      }
    }
    bool found = c.passes();
    v.candidates.push_back(std::move(c));
    if (found) {
      v.covers = true;
      v.degree = v.candidates.back().degree;
      v.orientation = v.candidates.back().orientation;
      return v;
    }
  }

  std::ostringstream os;
  os << "no fiberwise covering onto the unit tangent bundle of the base";
  for (const CoveringCandidate& c : v.candidates)
    os << "; [" << to_string(c.orientation) << "] " << c.describe_failure();
  v.reason = os.str();
  return v;
}

SeifertInvariant orientation_double_cover(const SeifertInvariant& m) {
  if (m.base_orientable())
    throw Error(Errc::orientable_base, "orientation double cover needs a non-orientable base");
  std::vector<Fiber> fibers;
  fibers.reserve(2 * m.fibers().size());
  for (const Fiber& f : m.fibers()) {
    fibers.push_back(f);
    fibers.push_back(f);
  }
  // chi doubles, so cross-cap count k becomes orientable genus k - 1;
  // b doubles because every beta_i/alpha_i term is duplicated.
  return normalize(SeifertInvariant(true, m.base_genus() - 1, checked_mul(2, m.b()),
                                    std::move(fibers)));
}

}  // namespace sfs
