#include "sfs/decide.hpp"

#include <string>

#include "sfs/error.hpp"

namespace sfs {

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::yes: return "yes";
    case VerdictKind::no: return "no";
    case VerdictKind::out_of_scope: return "out_of_scope";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::yes:
      os << "Yes";
      if (v.witness) os << " (" << *v.witness << ")";
      if (!v.reason.empty()) os << " [" << v.reason << "]";
      return os;
    case VerdictKind::no: return os << "No: " << v.reason;
    case VerdictKind::out_of_scope: return os << "OutOfScope: " << v.reason;
  }
  return os;
}

Verdict admits_anosov(const SeifertInvariant& m) {
  if (classify_geometry(m.base()) != Geometry::Hyperbolic)
    return {VerdictKind::no, std::nullopt,
            "Anosov flows on Seifert fiber spaces require a hyperbolic base orbifold"};

  std::string note;
  CoveringVerdict cv;
  if (!m.base_orientable()) {
    // Decide through the orientation double cover; the covering data below
    // refers to that cover and its base.
    note = "decided via the orientation double cover of the non-orientable base";
    cv = covers_unit_tangent_bundle(orientation_double_cover(m));
  } else {
    cv = covers_unit_tangent_bundle(m);
  }
  if (cv.covers) return {VerdictKind::yes, cv, note};
  std::string reason = "does not finitely cover the unit tangent bundle of the base: " + cv.reason;
  if (!note.empty()) reason += " (" + note + ")";
  return {VerdictKind::no, cv, reason};
}

Verdict admits_transitive_ph(const SeifertInvariant& m) {
  if (classify_geometry(m.base()) != Geometry::Hyperbolic)
    return {VerdictKind::out_of_scope, std::nullopt,
            "base orbifold is not hyperbolic: the fundamental group is virtually nilpotent "
            "and partially hyperbolic dynamics there are classified separately"};
  return admits_anosov(m);
}

Verdict ph_circle_bundle(long long genus, long long eu) {
  if (genus < 2) throw Error(Errc::genus_too_small, "circle-bundle criterion needs genus >= 2");
  const long long chi = 2 - 2 * genus;

  // Divisibility route, independent of the covering machinery.
  bool yes = eu != 0 && chi % eu == 0;

  SeifertInvariant bundle(true, genus, -eu, {});
  CoveringVerdict cv = covers_unit_tangent_bundle(bundle);
  if (cv.covers != yes)
    throw Error(Errc::internal, "divisibility and covering routes disagree on a circle bundle");

  if (!yes) {
    std::string reason = eu == 0
        ? "Euler number zero: the trivial bundle admits no transitive partially hyperbolic "
          "diffeomorphism"
        : "no integer k with eu = (2-2g)/k: " + std::to_string(eu) + " does not divide " +
              std::to_string(chi);
    return {VerdictKind::no, cv, reason};
  }
  return {VerdictKind::yes, cv, ""};
}

Verdict admits_ph_turnover(const SeifertInvariant& m) {
  Orbifold base = m.base();
  if (!is_turnover(base))
    throw Error(Errc::not_a_turnover, "base orbifold is not a turnover (sphere with three cones)");
  if (classify_geometry(base) != Geometry::Hyperbolic)
    return {VerdictKind::no, std::nullopt,
            "elliptic or parabolic turnover base: no partially hyperbolic diffeomorphism exists"};
  CoveringVerdict cv = covers_unit_tangent_bundle(m);
  if (cv.covers) return {VerdictKind::yes, cv, ""};
  return {VerdictKind::no, cv,
          "does not finitely cover the unit tangent bundle of the turnover: " + cv.reason};
}

bool horizontal_foliation_sufficient(const SeifertInvariant& m) {
  SeifertInvariant n = normalize(m);
  if (!n.base_orientable() || n.base_genus() != 0 || n.fibers().size() != 3 || n.b() != -1)
    throw Error(Errc::not_in_stated_family,
                "sufficient condition is stated only for normalized invariants "
                "(g=0; b=-1; three fibers with 0 < beta < alpha)");
  Rational sum;
  for (const Fiber& f : n.fibers()) sum += Rational(f.beta, f.alpha);
  return sum < Rational(1);
}

bool milnor_wood_necessary(const SeifertInvariant& m) {
  Orbifold base = m.base();
  if (classify_geometry(base) != Geometry::Hyperbolic)
    throw Error(Errc::non_hyperbolic_base, "Milnor-Wood bound applied over a hyperbolic base");
  return euler_number(m).abs() <= -orbifold_euler_characteristic(base);
}

}  // namespace sfs
