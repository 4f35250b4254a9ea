#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "meridian/errors.hpp"
#include "meridian/jet.hpp"
#include "meridian/profile.hpp"

namespace meridian {

/// Malformed expression; `position` is the 0-based offset of the offending character.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }
  /// The message without the position suffix.
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t position_;
};

/// Expression over u and v: reals, + − * / ^, parentheses, and
/// sin, cos, sqrt, ln, exp. Evaluates in jet arithmetic.
class Expression {
 public:
  struct Node;

  static Expression parse(std::string_view text);

  Jet2 eval(const Jet2& u, const Jet2& v) const;
  bool uses_u() const;
  bool uses_v() const;
  const std::string& text() const { return text_; }

  /// One-variable profile; the expression may reference only `var` ('u' or 'v').
  Profile1D as_profile(char var) const;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace meridian
