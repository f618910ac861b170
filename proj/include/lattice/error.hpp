#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lattice {

enum class ErrorKind {
  invalid_argument,
  out_of_precision,
  non_invertible,
  unsupported_radicand,
  composition_divergence,
  invalid_array,
  invalid_index,
  resource_limit,
  not_applicable,
  invalid_id,
  unknown_family,
  network_unreachable,
  parse_failure,
  configuration,
  inconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lattice
