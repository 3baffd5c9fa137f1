#include "sfs/parse.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "sfs/error.hpp"

namespace sfs {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  void expect_literal(std::string_view lit) {
    skip_ws();
    if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  long long parse_int(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail(std::string("expected an integer for ") + what);
    unsigned long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
      if (v > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
        pos_ = start;
        fail(std::string("integer out of range for ") + what);
      }
      ++pos_;
    }
    return neg ? -static_cast<long long>(v) : static_cast<long long>(v);
  }

  long long parse_nat(const char* what) {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
      fail(std::string(what) + " must be unsigned");
    return parse_int(what);
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(pos_, msg); }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SeifertInvariant parse_sfs(std::string_view text) {
  Cursor c(text);
  c.expect_literal("SFS");
  c.expect('(', "after SFS");

  c.expect_literal("g");
  c.expect('=', "after g");
  c.skip_ws();
  bool orientable = !c.try_consume('n');
  long long genus = c.parse_nat("genus");
  if (!orientable && genus == 0)
    throw SemanticError("non-orientable genus 0 is not a surface (need at least one cross-cap)");
  c.expect(';', "after genus");

  c.expect_literal("b");
  c.expect('=', "after b");
  long long b = c.parse_int("b");
  c.expect(';', "after b term");

  std::vector<Fiber> fibers;
  if (!c.try_consume(')')) {
    do {
      c.expect('(', "to open a fiber pair");
      long long alpha = c.parse_nat("alpha");
      c.expect(',', "between alpha and beta");
      long long beta = c.parse_int("beta");
      c.expect(')', "to close the fiber pair");
      if (alpha == 0)
        throw SemanticError("cone order 0 is invalid (exceptional fibers need alpha >= 2)");
      if (alpha == 1) {
        // (1, beta) slot: fold into the obstruction term.
        long long nb;
        if (__builtin_add_overflow(b, beta, &nb)) throw SemanticError("b term out of range");
        b = nb;
        continue;
      }
      if (std::gcd(alpha, beta) != 1)
        throw SemanticError("gcd(" + std::to_string(alpha) + ", " + std::to_string(beta) +
                            ") != 1: fiber pairs must be coprime");
      fibers.push_back({alpha, beta});
    } while (c.try_consume(','));
    c.expect(')', "to close SFS(...)");
  }
  if (!c.at_end()) c.fail("trailing input after SFS(...)");

  return SeifertInvariant(orientable, genus, b, std::move(fibers));
}

std::string render(const SeifertInvariant& m) {
  std::ostringstream os;
  os << m;  // operator<< already emits the grammar's surface form
  return os.str();
}

}  // namespace sfs
