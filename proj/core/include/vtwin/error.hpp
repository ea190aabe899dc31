#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vtwin {

enum class Errc {
  invalid_strand_count,
  invalid_input,
  parse_error,
  not_in_kernel,
  not_applicable,
  not_a_component_union,
  domination_violation,
  resource_limit,
};

const char *to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Raised by the text grammars; position is a 0-based character offset.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &what);

  std::size_t position() const noexcept { return position_; }
  // The message without the code and position prefix.
  const std::string &detail() const noexcept { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

} // namespace vtwin
