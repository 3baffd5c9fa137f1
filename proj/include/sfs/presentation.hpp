#pragma once

#include <string>
#include <vector>

#include "sfs/word.hpp"

namespace sfs {

// Finite presentation of the fundamental group of an orientable circle
// bundle over an orientable genus-g surface (g >= 2):
//   < a_1, b_1, ..., a_g, b_g, c |
//     prod_i [a_i, b_i] c^-eu, [a_i, c], [b_i, c] >
struct Presentation {
  long long genus = 0;
  long long euler = 0;
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

Presentation circle_bundle_presentation(long long genus, long long euler);

// "<gen list> | <relator list>", relators comma-separated words.
std::string render(const Presentation& p);

// Outcome of replaying the induced map of a degree-n fiberwise covering on
// the group presentations: a_i^ -> a_i c^{i_a}, b_i^ -> b_i c^{i_b},
// c^ -> c^n. image = the image of prod [a_i^, b_i^]; reference = the
// directly computed prod [a_i, b_i]. The two must agree with center 0,
// which forces the covered bundle's Euler number to degree * eu_hat.
struct HurwitzReport {
  bool ok = false;
  CentralWord image;
  CentralWord reference;
  long long forced_euler = 0;
};

HurwitzReport verify_hurwitz_symbolic(long long genus, long long eu_hat, long long degree,
                                      const std::vector<long long>& offsets);

}  // namespace sfs
