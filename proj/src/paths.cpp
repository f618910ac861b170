#include "lattice/paths.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "lattice/error.hpp"

namespace lattice::paths {

namespace {

void require_enumerable(const PathFamily& family) {
  family.validate();
  if (family.span > kMaxEnumerationSpan) {
    throw Error(ErrorKind::resource_limit,
                "span " + std::to_string(family.span) + " exceeds the enumeration limit of " +
                    std::to_string(kMaxEnumerationSpan));
  }
}

// Candidate steps in label order, so the search visits paths
// lexicographically.
std::vector<Step> step_set(const PathFamily& family) {
  std::vector<Step> steps{Step::D};
  if (family.flat == Flat::forward) steps.push_back(Step::F);
  if (family.flat == Flat::horizontal) steps.push_back(Step::H);
  steps.push_back(Step::U);
  return steps;
}

bool is_flat(Step step) { return step == Step::F || step == Step::H; }

class Search {
 public:
  explicit Search(const PathFamily& family) : family_(family), steps_(step_set(family)) {}

  // Calls visit(prefix) for every complete path.
  template <typename Visit>
  void run(Visit&& visit) {
    prefix_.clear();
    descend(0, 0, visit);
  }

  const std::vector<Step>& prefix() const { return prefix_; }

 private:
  template <typename Visit>
  void descend(int x, int y, Visit& visit) {
    const int span = static_cast<int>(family_.span);
    if (x == span) {
      if (y == 0) visit(prefix_);
      return;
    }
    const bool after_up = !prefix_.empty() && prefix_.back() == Step::U;
    for (Step step : steps_) {
      if (family_.forbid_up_then_flat && after_up && is_flat(step)) continue;
      const auto [dx, dy] = displacement(step);
      const int nx = x + dx;
      const int ny = y + dy;
      if (nx > span) continue;
      if (family_.nonpositive && ny > 0) continue;
      if (std::abs(ny) > span - nx) continue;
      prefix_.push_back(step);
      descend(nx, ny, visit);
      prefix_.pop_back();
    }
  }

  const PathFamily& family_;
  std::vector<Step> steps_;
  std::vector<Step> prefix_;
};

}  // namespace

void PathFamily::validate() const {
  if (flat != Flat::forward && span % 2 != 0) {
    throw Error(ErrorKind::invalid_argument,
                "span must be even without F steps, got " + std::to_string(span));
  }
}

std::vector<Point> Path::points() const {
  std::vector<Point> out{{0, 0}};
  out.reserve(steps.size() + 1);
  for (Step step : steps) {
    const auto [dx, dy] = displacement(step);
    out.push_back({out.back().x + dx, out.back().y + dy});
  }
  return out;
}

Point Path::end() const { return points().back(); }

std::size_t Path::downs() const {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::D));
}

Path parse_path(std::string_view labels) {
  Path path;
  path.steps.reserve(labels.size());
  for (char c : labels) {
    switch (c) {
      case 'D': path.steps.push_back(Step::D); break;
      case 'F': path.steps.push_back(Step::F); break;
      case 'H': path.steps.push_back(Step::H); break;
      case 'U': path.steps.push_back(Step::U); break;
      default:
        throw Error(ErrorKind::parse_failure, std::string("unknown step label '") + c + "'");
    }
  }
  return path;
}

std::vector<Path> enumerate(const PathFamily& family) {
  require_enumerable(family);
  std::vector<Path> out;
  Search search(family);
  search.run([&](const std::vector<Step>& steps) { out.push_back(Path{steps}); });
  return out;
}

Integer count(const PathFamily& family) {
  require_enumerable(family);
  unsigned long long total = 0;
  Search search(family);
  search.run([&](const std::vector<Step>&) { ++total; });
  return Integer(static_cast<unsigned long>(total));
}

std::map<std::size_t, Integer> count_by_downs(const PathFamily& family) {
  require_enumerable(family);
  std::map<std::size_t, unsigned long> buckets;
  Search search(family);
  search.run([&](const std::vector<Step>& steps) {
    ++buckets[static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::D))];
  });
  std::map<std::size_t, Integer> out;
  for (const auto& [downs, n] : buckets) out.emplace(downs, Integer(n));
  return out;
}

Integer count_dp(const PathFamily& family) {
  family.validate();
  if (family.span > kMaxDpSpan) {
    throw Error(ErrorKind::resource_limit,
                "span " + std::to_string(family.span) + " exceeds the counting limit of " +
                    std::to_string(kMaxDpSpan));
  }
  const int span = static_cast<int>(family.span);
  const int height = 2 * span + 1;  // y in [-span, span]
  // ways[x][y + span][last step was U]
  std::vector<std::vector<std::array<Integer, 2>>> ways(
      static_cast<std::size_t>(span + 1), std::vector<std::array<Integer, 2>>(static_cast<std::size_t>(height)));
  ways[0][static_cast<std::size_t>(span)][0] = 1;
  const int flat_dx = family.flat == Flat::horizontal ? 2 : 1;
  for (int x = 0; x < span; ++x) {
    for (int iy = 0; iy < height; ++iy) {
      for (int up = 0; up < 2; ++up) {
        const Integer& w = ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(iy)][static_cast<std::size_t>(up)];
        if (w == 0) continue;
        auto push = [&](int dx, int dy, int next_up) {
          const int nx = x + dx;
          const int ny = iy - span + dy;
          if (nx > span || std::abs(ny) > span) return;
          if (family.nonpositive && ny > 0) return;
          ways[static_cast<std::size_t>(nx)][static_cast<std::size_t>(ny + span)][static_cast<std::size_t>(next_up)] += w;
        };
        push(1, 1, 1);
        push(1, -1, 0);
        if (family.flat != Flat::none && !(family.forbid_up_then_flat && up == 1)) {
          push(flat_dx, 0, 0);
        }
      }
    }
  }
  const auto& end = ways[static_cast<std::size_t>(span)][static_cast<std::size_t>(span)];
  return end[0] + end[1];
}

Path reflect_first_crossing(const Path& path) {
  int y = 0;
  for (Step step : path.steps) {
    if (step != Step::U && step != Step::D) {
      throw Error(ErrorKind::not_applicable, "reflection applies to U/D paths only");
    }
    y += displacement(step).dy;
  }
  if (y != 0 || path.steps.size() % 2 != 0) {
    throw Error(ErrorKind::not_applicable, "reflection applies to central paths ending on the axis");
  }
  Path out = path;
  y = 0;
  auto it = out.steps.begin();
  for (; it != out.steps.end(); ++it) {
    y += displacement(*it).dy;
    if (y > 0) break;
  }
  if (it == out.steps.end()) {
    throw Error(ErrorKind::not_applicable, "path never rises above the x-axis");
  }
  for (++it; it != out.steps.end(); ++it) *it = (*it == Step::U) ? Step::D : Step::U;
  return out;
}

std::string render(const Path& path) {
  std::string out;
  out.reserve(path.steps.size());
  for (Step step : path.steps) out.push_back(label(step));
  return out;
}

std::string render_ascii(const Path& path) {
  // Band b covers heights [b, b+1]. U from height y draws '/' in band y,
  // D from y draws '\' in band y-1, flats at height y draw '_' in band y.
  struct Mark {
    int column;
    int band;
    char glyph;
  };
  std::vector<Mark> marks;
  int x = 0;
  int y = 0;
  for (Step step : path.steps) {
    switch (step) {
      case Step::U: marks.push_back({x, y, '/'}); break;
      case Step::D: marks.push_back({x, y - 1, '\\'}); break;
      case Step::F: marks.push_back({x, y, '_'}); break;
      case Step::H:
        marks.push_back({x, y, '_'});
        marks.push_back({x + 1, y, '_'});
        break;
    }
    const auto [dx, dy] = displacement(step);
    x += dx;
    y += dy;
  }
  if (marks.empty()) return "\n";
  const auto [lo, hi] = std::minmax_element(marks.begin(), marks.end(),
                                            [](const Mark& a, const Mark& b) { return a.band < b.band; });
  const int bottom = lo->band;
  const int top = hi->band;
  std::vector<std::string> rows(static_cast<std::size_t>(top - bottom + 1),
                                std::string(static_cast<std::size_t>(x), ' '));
  for (const auto& m : marks) {
    rows[static_cast<std::size_t>(top - m.band)][static_cast<std::size_t>(m.column)] = m.glyph;
  }
  std::string out;
  for (auto& row : rows) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace lattice::paths
