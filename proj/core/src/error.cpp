#include "vtwin/error.hpp"

namespace vtwin {

const char *to_string(Errc code) noexcept {
  switch (code) {
  case Errc::invalid_strand_count:
    return "invalid-strand-count";
  case Errc::invalid_input:
    return "invalid-input";
  case Errc::parse_error:
    return "parse-error";
  case Errc::not_in_kernel:
    return "not-in-kernel";
  case Errc::not_applicable:
    return "not-applicable";
  case Errc::not_a_component_union:
    return "not-a-component-union";
  case Errc::domination_violation:
    return "domination-violation";
  case Errc::resource_limit:
    return "resource-limit";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

ParseError::ParseError(std::size_t position, const std::string &what)
    : Error(Errc::parse_error,
            "at position " + std::to_string(position) + ": " + what),
      position_(position), detail_(what) {}

} // namespace vtwin
