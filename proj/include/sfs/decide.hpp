#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sfs/covering.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

enum class VerdictKind { yes, no, out_of_scope };

const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::no;
  std::optional<CoveringVerdict> witness;  // always set on yes for flow/PH decisions
  std::string reason;  // explanation for no/out_of_scope, caveats on yes

  bool is_yes() const { return kind == VerdictKind::yes; }
};

std::ostream& operator<<(std::ostream& os, const Verdict& v);

// Existence of an Anosov flow on the fibered space: over a hyperbolic base
// this is exactly "finitely covers the unit tangent bundle of the base".
// A non-orientable base is decided through its orientation double cover,
// with that route noted in the verdict reason.
Verdict admits_anosov(const SeifertInvariant& m);

// Existence of a transitive partially hyperbolic diffeomorphism. Over a
// hyperbolic base this coincides with admits_anosov; other geometries are
// reported out of scope (virtually nilpotent fundamental group, classified
// separately).
Verdict admits_transitive_ph(const SeifertInvariant& m);

// Circle-bundle special case over an orientable genus-g surface, g >= 2,
// decided by integer arithmetic alone: yes iff eu != 0 and eu divides
// 2 - 2g. The attached witness comes from the covering test and must
// agree; disagreement is an internal error.
Verdict ph_circle_bundle(long long genus, long long eu);

// Partial hyperbolicity over a turnover base needs no transitivity
// hypothesis: no for elliptic/parabolic turnovers, otherwise equivalent
// to covering the unit tangent bundle.
Verdict admits_ph_turnover(const SeifertInvariant& m);

// Sufficient test for carrying a horizontal foliation, stated for the
// normalized family (genus 0 orientable, b = -1, exactly three fibers,
// 0 < beta_i < alpha_i): true iff sum beta_i/alpha_i < 1. A false result
// is inconclusive, not a refutation.
bool horizontal_foliation_sufficient(const SeifertInvariant& m);

// Necessary bound for horizontal foliations over a hyperbolic base:
// |e(M)| <= -chi^orb(base). False means no horizontal foliation exists.
bool milnor_wood_necessary(const SeifertInvariant& m);

// All normalized invariants (b = -1; three fibers, alpha_i <= max_alpha)
// over hyperbolic turnovers that pass horizontal_foliation_sufficient yet
// do not cover the unit tangent bundle. Deterministic: sorted by fiber
// list. The default implementation partitions the search across OpenMP
// threads; the _reference variant is a serial route through the public
// decision operations, kept for testing and benchmarking against the
// kernel.
std::vector<SeifertInvariant> enumerate_turnover_gap_examples(long long max_alpha);
std::vector<SeifertInvariant> enumerate_turnover_gap_examples_reference(long long max_alpha);

}  // namespace sfs
