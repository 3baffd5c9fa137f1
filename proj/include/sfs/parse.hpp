#pragma once

#include <string>
#include <string_view>

#include "sfs/seifert.hpp"

namespace sfs {

// Grammar (whitespace insignificant):
//   sfs    := "SFS(" genus ";" bterm ";" fibers? ")"
//   genus  := "g=" "n"? nat          -- "n" marks a non-orientable base
//   bterm  := "b=" int
//   fibers := pair ("," pair)*
//   pair   := "(" nat "," int ")"
// (1, beta) pairs are folded into b. Violations of structure raise
// SyntaxError with a position; gcd violations, alpha = 0 and
// non-orientable genus 0 raise SemanticError.
SeifertInvariant parse_sfs(std::string_view text);

// Inverse of parse_sfs on normalized invariants:
//   "SFS(g=0; b=-1; (5,1),(5,1),(5,2))", "SFS(g=n2; b=1;)"
std::string render(const SeifertInvariant& m);

}  // namespace sfs
