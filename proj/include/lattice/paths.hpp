#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lattice/rational.hpp"

namespace lattice::paths {

/// Step labels order lexicographically as D < F < H < U.
enum class Step : char { D = 'D', F = 'F', H = 'H', U = 'U' };

struct Displacement {
  int dx;
  int dy;
};

constexpr Displacement displacement(Step step) noexcept {
  switch (step) {
    case Step::U: return {1, 1};
    case Step::D: return {1, -1};
    case Step::H: return {2, 0};
    case Step::F: return {1, 0};
  }
  return {0, 0};
}

constexpr char label(Step step) noexcept { return static_cast<char>(step); }

/// The optional flat step of a family. H and F are never mixed.
enum class Flat { none, horizontal, forward };

/// Step set {U, D} plus the optional flat step, target (span, 0), and the
/// two constraint flags.
struct PathFamily {
  Flat flat = Flat::none;
  unsigned span = 0;
  /// No point with y > 0.
  bool nonpositive = false;
  /// No U immediately followed by a flat step.
  bool forbid_up_then_flat = false;

  /// Throws Error(invalid_argument) for an odd span without F steps.
  void validate() const;
};

struct Point {
  int x;
  int y;
  bool operator==(const Point&) const = default;
};

struct Path {
  std::vector<Step> steps;

  /// Vertices from (0, 0) through the end point.
  std::vector<Point> points() const;
  Point end() const;
  std::size_t downs() const;
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

/// Throws Error(parse_failure) on characters outside {D, F, H, U}.
Path parse_path(std::string_view labels);

/// Largest span accepted by enumerate/count/count_by_downs.
inline constexpr unsigned kMaxEnumerationSpan = 24;
/// Largest span accepted by count_dp.
inline constexpr unsigned kMaxDpSpan = 200;

/// All paths of the family in lexicographic label order, by depth-first
/// search. Throws Error(resource_limit) when span > kMaxEnumerationSpan.
std::vector<Path> enumerate(const PathFamily& family);

/// Same search as enumerate without materializing the paths.
Integer count(const PathFamily& family);

/// Path counts keyed by the number of D steps. Buckets sum to count().
std::map<std::size_t, Integer> count_by_downs(const PathFamily& family);

/// Transfer-matrix count over (x, y, previous step was U). Must agree with
/// count() where both apply. Throws Error(resource_limit) when
/// span > kMaxDpSpan.
Integer count_dp(const PathFamily& family);

/// Keeps the steps up to and including the first one that lands above the
/// x-axis and swaps U and D afterwards. A central path (U/D, ends at
/// (2n, 0)) maps to a path ending at (2n, 2). Throws
/// Error(not_applicable) when the path never rises above the axis or is
/// not a central path.
Path reflect_first_crossing(const Path& path);

/// Step-label string, e.g. "DUUD".
std::string render(const Path& path);

/// Multi-line drawing of the polyline with '/', '\\' and '_', top row
/// first. Each character column is one unit of x.
std::string render_ascii(const Path& path);

}  // namespace lattice::paths
