#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sfs {

// One generator occurrence. sym is 'a' or 'b' (surface generators, index
// >= 1) or 'c' (central fiber class, index 0).
struct Letter {
  char sym = 'a';
  int index = 1;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Letter inverse(Letter l);

// Stack-based free reduction: cancels adjacent inverse pairs in one pass.
// Idempotent; the result is the canonical free-group representative.
Word free_reduce(Word w);

Word inverse_word(const Word& w);

// Whitespace-separated tokens in "a1 b1 A1 B1 c C" style, capital letter
// for the inverse. Throws Errc::unknown_symbol for anything else.
Word parse_word(std::string_view text);

std::string render_word(const Word& w);

// Element of (free group on a_i, b_i) x Z: a freely reduced surface word
// together with the exponent of the central class c. Multiplication adds
// center exponents because c commutes with everything.
struct CentralWord {
  Word word;             // letters 'a'/'b' only, freely reduced
  long long center = 0;  // exponent of c

  friend bool operator==(const CentralWord&, const CentralWord&) = default;
};

// Folds any 'c' letters of w into the center exponent (valid since c is
// central) and freely reduces the rest.
CentralWord central_word(const Word& w, long long extra_center = 0);

CentralWord multiply(const CentralWord& u, const CentralWord& v);
CentralWord inverse(const CentralWord& u);

// u v u^-1 v^-1. The center exponent cancels identically, for all inputs.
CentralWord commutator(const CentralWord& u, const CentralWord& v);

std::string render(const CentralWord& w);
std::ostream& operator<<(std::ostream& os, const CentralWord& w);

}  // namespace sfs
