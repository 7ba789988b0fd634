#pragma once

#include <string>
#include <string_view>

#include "drinfeld/errors.hpp"
#include "drinfeld/string_centre.hpp"

namespace drinfeld::io {

inline constexpr int kSpecVersion = 1;

/// Malformed document text; line and column are 1-based.
class SyntaxError : public DomainError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses and validates a group spec document. Unknown fields are rejected;
/// semantic errors are DomainErrors whose message starts with the field path.
centre::GroupSpec parse_spec(std::string_view text);

/// Canonical document text (rationals as "p/q" strings).
std::string serialise_spec(const centre::GroupSpec& spec);

}  // namespace drinfeld::io
