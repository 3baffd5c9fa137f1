#include "sfs/presentation.hpp"

#include <sstream>

#include "sfs/error.hpp"

namespace sfs {

namespace {

constexpr long long kMaxGenus = 1'000'000;

void append_commutator(Word& w, const Letter& x, const Letter& y) {
  w.push_back(x);
  w.push_back(y);
  w.push_back(inverse(x));
  w.push_back(inverse(y));
}

}  // namespace

Presentation circle_bundle_presentation(long long genus, long long euler) {
  if (genus < 2) throw Error(Errc::genus_too_small, "presentation emitter needs genus >= 2");
  if (genus > kMaxGenus) throw Error(Errc::invalid_argument, "genus above supported bound");

  Presentation p;
  p.genus = genus;
  p.euler = euler;
  for (long long i = 1; i <= genus; ++i) {
    p.generators.push_back("a" + std::to_string(i));
    p.generators.push_back("b" + std::to_string(i));
  }
  p.generators.push_back("c");

  // Surface relator: prod_i [a_i, b_i] * c^(-eu).
  Word surface;
  for (long long i = 1; i <= genus; ++i)
    append_commutator(surface, {'a', static_cast<int>(i), false}, {'b', static_cast<int>(i), false});
  for (long long k = 0; k < (euler < 0 ? -euler : euler); ++k)
    surface.push_back({'c', 0, euler > 0});
  p.relators.push_back(std::move(surface));

  // Centrality relators [a_i, c], [b_i, c].
  for (long long i = 1; i <= genus; ++i) {
    Word ra, rb;
    append_commutator(ra, {'a', static_cast<int>(i), false}, {'c', 0, false});
    append_commutator(rb, {'b', static_cast<int>(i), false}, {'c', 0, false});
    p.relators.push_back(std::move(ra));
    p.relators.push_back(std::move(rb));
  }
  return p;
}

std::string render(const Presentation& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ' ';
    os << p.generators[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) os << ", ";
    os << render_word(p.relators[i]);
  }
  return os.str();
}

HurwitzReport verify_hurwitz_symbolic(long long genus, long long eu_hat, long long degree,
                                      const std::vector<long long>& offsets) {
  if (genus < 2) throw Error(Errc::genus_too_small, "needs genus >= 2");
  if (genus > kMaxGenus) throw Error(Errc::invalid_argument, "genus above supported bound");
  if (degree < 1) throw Error(Errc::invalid_argument, "covering degree must be >= 1");
  if (offsets.size() != static_cast<std::size_t>(2 * genus))
    throw Error(Errc::offset_arity_mismatch,
                "expected 2*genus = " + std::to_string(2 * genus) + " offsets, got " +
                    std::to_string(offsets.size()));

  HurwitzReport report;
  CentralWord image;      // image of prod [a_i^, b_i^] under the induced map
  CentralWord reference;  // prod [a_i, b_i] computed downstairs
  for (long long i = 1; i <= genus; ++i) {
    Letter a{'a', static_cast<int>(i), false};
    Letter b{'b', static_cast<int>(i), false};
    CentralWord a_image{{a}, offsets[static_cast<std::size_t>(2 * (i - 1))]};
    CentralWord b_image{{b}, offsets[static_cast<std::size_t>(2 * (i - 1) + 1)]};
    image = multiply(image, commutator(a_image, b_image));
    reference = multiply(reference, commutator(CentralWord{{a}, 0}, CentralWord{{b}, 0}));
  }
  report.image = image;
  report.reference = reference;
  report.ok = image == reference && image.center == 0;
  // The relation upstairs maps to c^(degree * eu_hat), pinning the covered
  // bundle's Euler number.
  report.forced_euler = degree * eu_hat;
  return report;
}

}  // namespace sfs
