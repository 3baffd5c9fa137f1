#include "sfs/word.hpp"

#include <cctype>
#include <sstream>

#include "sfs/error.hpp"

namespace sfs {

Letter inverse(Letter l) {
  l.inverse = !l.inverse;
  return l;
}

namespace {

bool cancels(const Letter& x, const Letter& y) {
  return x.sym == y.sym && x.index == y.index && x.inverse != y.inverse;
}

}  // namespace

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char ch = text[i];
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (low != 'a' && low != 'b' && low != 'c')
      throw Error(Errc::unknown_symbol,
                  std::string("unknown symbol '") + ch + "' in word at offset " + std::to_string(i));
    bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
    ++i;
    long long index = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      if (index > 1'000'000) throw Error(Errc::unknown_symbol, "generator index out of range");
      ++i;
      ++digits;
    }
    if (low == 'c') {
      if (digits != 0) throw Error(Errc::unknown_symbol, "central generator c takes no index");
      out.push_back({'c', 0, inv});
    } else {
      if (digits == 0 || index < 1)
        throw Error(Errc::unknown_symbol,
                    std::string("generator '") + ch + "' needs a positive index");
      out.push_back({low, static_cast<int>(index), inv});
    }
  }
  return out;
}

std::string render_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    char ch = w[i].inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(w[i].sym)))
                           : w[i].sym;
    os << ch;
    if (w[i].sym != 'c') os << w[i].index;
  }
  return os.str();
}

CentralWord central_word(const Word& w, long long extra_center) {
  CentralWord cw;
  cw.center = extra_center;
  Word surface;
  surface.reserve(w.size());
  for (const Letter& l : w) {
    if (l.sym == 'c')
      cw.center += l.inverse ? -1 : 1;
    else
      surface.push_back(l);
  }
  cw.word = free_reduce(std::move(surface));
  return cw;
}

CentralWord multiply(const CentralWord& u, const CentralWord& v) {
  Word w = u.word;
  w.insert(w.end(), v.word.begin(), v.word.end());
  return {free_reduce(std::move(w)), u.center + v.center};
}

CentralWord inverse(const CentralWord& u) { return {inverse_word(u.word), -u.center}; }

CentralWord commutator(const CentralWord& u, const CentralWord& v) {
  return multiply(multiply(u, v), multiply(inverse(u), inverse(v)));
}

std::string render(const CentralWord& w) {
  std::ostringstream os;
  os << render_word(w.word);
  long long c = w.center;
  for (long long i = 0; i < (c < 0 ? -c : c); ++i) {
    if (os.tellp() > 0) os << ' ';
    os << (c > 0 ? 'c' : 'C');
  }
  if (os.tellp() == 0) os << "1";  // identity
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CentralWord& w) { return os << render(w); }

}  // namespace sfs
