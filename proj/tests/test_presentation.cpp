#include "doctest.h"

#include <random>

#include "sfs/error.hpp"
#include "sfs/presentation.hpp"

using namespace sfs;

TEST_CASE("circle bundle presentation shape") {
  Presentation p = circle_bundle_presentation(2, -2);
  CHECK(p.generators == std::vector<std::string>{"a1", "b1", "a2", "b2", "c"});
  CHECK(p.relators.size() == 5);  // 2g + 1
  CHECK(render_word(p.relators[0]) == "a1 b1 A1 B1 a2 b2 A2 B2 c c");
  CHECK(render_word(p.relators[1]) == "a1 c A1 C");
  CHECK(render_word(p.relators[2]) == "b1 c B1 C");

  Presentation trivial = circle_bundle_presentation(2, 0);
  CHECK(render_word(trivial.relators[0]) == "a1 b1 A1 B1 a2 b2 A2 B2");

  Presentation g3 = circle_bundle_presentation(3, 1);
  CHECK(g3.generators.size() == 7);
  CHECK(g3.relators.size() == 7);

  CHECK_THROWS_AS(circle_bundle_presentation(1, 0), Error);
}

TEST_CASE("surface relator carries c^(-eu)") {
  for (long long eu : {-3LL, -1LL, 0LL, 1LL, 4LL}) {
    Presentation p = circle_bundle_presentation(2, eu);
    long long c_exponent = 0;
    for (const Letter& l : p.relators[0])
      if (l.sym == 'c') c_exponent += l.inverse ? -1 : 1;
    CHECK(c_exponent == -eu);
  }
}

TEST_CASE("rendered presentation") {
  CHECK(render(circle_bundle_presentation(2, -2)) ==
        "a1 b1 a2 b2 c | a1 b1 A1 B1 a2 b2 A2 B2 c c, a1 c A1 C, b1 c B1 C, a2 c A2 C, b2 c B2 C");
}

TEST_CASE("hurwitz verification on fixed data") {
  HurwitzReport r = verify_hurwitz_symbolic(2, -1, 2, {1, -3, 2, 0});
  CHECK(r.ok);
  CHECK(r.forced_euler == -2);
  CHECK(r.image.center == 0);
  CHECK(r.image == r.reference);

  HurwitzReport identity = verify_hurwitz_symbolic(3, 5, 1, std::vector<long long>(6, 0));
  CHECK(identity.ok);
  CHECK(identity.forced_euler == 5);
}

TEST_CASE("hurwitz verification argument checks") {
  CHECK_THROWS_AS(verify_hurwitz_symbolic(1, 0, 1, {0, 0}), Error);
  CHECK_THROWS_AS(verify_hurwitz_symbolic(2, 0, 0, {0, 0, 0, 0}), Error);
  try {
    verify_hurwitz_symbolic(2, 0, 1, {0, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::offset_arity_mismatch);
  }
}

TEST_CASE("property: the identity holds for every offset choice") {
  std::mt19937_64 rng(1618);
  std::uniform_int_distribution<long long> off(-5, 5), eu(-10, 10);
  for (long long genus = 2; genus <= 4; ++genus)
    for (long long degree = 1; degree <= 7; ++degree)
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<long long> offsets(static_cast<std::size_t>(2 * genus));
        for (auto& o : offsets) o = off(rng);
        long long eu_hat = eu(rng);
        HurwitzReport r = verify_hurwitz_symbolic(genus, eu_hat, degree, offsets);
        CHECK(r.ok);
        CHECK(r.forced_euler == degree * eu_hat);
      }
}
