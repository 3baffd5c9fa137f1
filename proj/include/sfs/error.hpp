#pragma once

#include <stdexcept>
#include <string>

namespace sfs {

enum class Errc {
  gcd_violation,
  non_hyperbolic_base,
  non_orientable_base,
  orientable_base,
  genus_too_small,
  not_a_turnover,
  not_in_stated_family,
  degree_cone_clash,
  offset_arity_mismatch,
  unknown_symbol,
  invalid_argument,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Raised by the expression parser; position is a 0-based byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sfs
