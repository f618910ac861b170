#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "lattice/catalog.hpp"
#include "lattice/rational.hpp"

namespace lattice::oeis {

enum class Source { fetched, fixture };

/// Parsed OEIS b-file: "n a(n)" lines with contiguous indices.
struct BFile {
  std::string oeis_id;
  std::map<long, Integer> entries;
  Source source = Source::fixture;
};

/// "A" followed by exactly six digits.
bool valid_id(std::string_view oeis_id) noexcept;

/// Blank lines and lines whose first non-blank character is '#' are
/// skipped. Anything else must be two decimal integers. Throws
/// Error(parse_failure) on malformed lines or non-contiguous indices.
BFile parse_bfile(std::string_view oeis_id, std::string_view text, Source source);

/// One "n a(n)" line per entry.
std::string serialize_bfile(const BFile& file);

/// https://oeis.org/A000984/b000984.txt
std::string bfile_url(std::string_view oeis_id);

/// cache_dir / "b000984.txt"
std::filesystem::path cache_path(const std::filesystem::path& cache_dir, std::string_view oeis_id);

/// HTTP GET. Implementations throw Error(network_unreachable) when the
/// body cannot be obtained.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string get(const std::string& url) = 0;
};

/// Real HTTPS client; throws Error(network_unreachable) on any failure,
/// including builds without TLS support.
std::unique_ptr<Transport> make_https_transport();

/// Transport that always fails; for callers that must stay offline.
class OfflineTransport final : public Transport {
 public:
  std::string get(const std::string& url) override;
};

/// Reads the cached b-file when present (no transport call). Otherwise
/// downloads it, parses it, and only then stores the body byte-verbatim
/// via a temporary file and rename. Throws Error(invalid_id),
/// Error(network_unreachable) or Error(parse_failure); the latter two leave
/// the cache untouched.
BFile fetch(std::string_view oeis_id, const std::filesystem::path& cache_dir, Transport& transport);

/// --cache-dir wins, then $LATTICE_CACHE_DIR, then the bundled fixtures.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);
std::filesystem::path default_cache_dir();

struct Mismatch {
  long index;
  Integer expected;  // b-file value
  Integer computed;
};

struct CompareReport {
  catalog::FamilyId family;
  std::string oeis_id;
  std::size_t requested = 0;
  std::size_t compared = 0;
  std::optional<Mismatch> mismatch;

  bool agree() const noexcept { return !mismatch.has_value(); }
  /// The b-file held fewer than `requested` terms.
  bool partial() const noexcept { return compared < requested && agree(); }
};

/// Compares k computed terms (formula route) against the b-file, starting
/// at the family's offset. Throws Error(configuration) when the b-file does
/// not start at that offset with the listed first term.
CompareReport compare(catalog::FamilyId family, std::size_t k, const BFile& file);

CompareReport compare(catalog::FamilyId family, std::size_t k, const std::filesystem::path& cache_dir,
                      Transport& transport);

/// Human-readable one-line summary ("A000108 dyck: agree (20 terms)").
std::string format_report(const CompareReport& report);

}  // namespace lattice::oeis
