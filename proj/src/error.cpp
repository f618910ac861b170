#include "lattice/error.hpp"

namespace lattice {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::out_of_precision: return "out-of-precision";
    case ErrorKind::non_invertible: return "division-by-noninvertible";
    case ErrorKind::unsupported_radicand: return "unsupported-radicand";
    case ErrorKind::composition_divergence: return "composition-divergence";
    case ErrorKind::invalid_array: return "invalid-array";
    case ErrorKind::invalid_index: return "invalid-index";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::invalid_id: return "invalid-id";
    case ErrorKind::unknown_family: return "unknown-family";
    case ErrorKind::network_unreachable: return "network-unreachable";
    case ErrorKind::parse_failure: return "parse-failure";
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::inconsistency: return "inconsistency";
  }
  return "unknown";
}

}  // namespace lattice
