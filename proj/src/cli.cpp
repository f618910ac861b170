#include "lattice/cli.hpp"

#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lattice/catalog.hpp"
#include "lattice/error.hpp"
#include "lattice/paths.hpp"
#include "lattice/riordan.hpp"
#include "lattice/verify.hpp"

namespace lattice::cli {

namespace {

using nlohmann::json;

struct UsageError {
  std::string message;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::resource_limit: return kResourceGuard;
    case ErrorKind::network_unreachable:
    case ErrorKind::parse_failure: return kExternalService;
    case ErrorKind::configuration:
    case ErrorKind::inconsistency: return kMismatch;
    default: return kUsage;
  }
}

catalog::FamilyId require_family(const std::string& name) {
  auto id = catalog::find_family(name);
  if (!id) throw UsageError{"unknown family '" + name + "' (use a family key or one of the ten OEIS ids)"};
  return *id;
}

json strings(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

struct SeqArgs {
  std::string family;
  std::size_t terms = 10;
  std::string method = "formula";
  std::string format = "text";
};

int run_seq(const SeqArgs& args, std::ostream& out) {
  const auto id = require_family(args.family);
  const auto method = catalog::parse_method(args.method);
  if (!method) throw UsageError{"unknown method '" + args.method + "'"};
  const auto values = catalog::terms(id, args.terms, *method);
  if (args.format == "bfile") {
    for (std::size_t n = 0; n < values.size(); ++n) out << n + catalog::info(id).offset << ' ' << values[n] << '\n';
  } else if (args.format == "json") {
    json doc{{"family", catalog::info(id).key},
             {"oeis", catalog::info(id).oeis},
             {"method", catalog::to_string(*method)},
             {"terms", strings(values)}};
    out << doc.dump() << '\n';
  } else {
    for (std::size_t n = 0; n < values.size(); ++n) out << (n ? " " : "") << values[n];
    out << '\n';
  }
  return kSuccess;
}

struct TriangleArgs {
  std::string array;
  std::size_t rows = 5;
  std::string format = "text";
};

int run_triangle(const TriangleArgs& args, std::ostream& out) {
  const auto name = parse_named_array(args.array);
  if (!name || *name == NamedArray::identity) {
    throw UsageError{"unknown array '" + args.array + "' (expected delannoy, motzkin, uh or pascal)"};
  }
  const auto rows = make_named_array(*name, args.rows).triangle(args.rows);
  if (args.format == "json") {
    json doc{{"array", to_string(*name)}, {"rows", json::array()}};
    for (const auto& row : rows) {
      json r = json::array();
      for (const auto& e : row) r.push_back(to_string(e));
      doc["rows"].push_back(std::move(r));
    }
    out << doc.dump() << '\n';
    return kSuccess;
  }
  // Rows stop at their last nonzero entry (binom(n, 2d) vanishes for 2d > n).
  for (const auto& row : rows) {
    std::size_t width = row.size();
    while (width > 1 && row[width - 1] == 0) --width;
    for (std::size_t d = 0; d < width; ++d) out << (d ? " " : "") << to_string(row[d]);
    out << '\n';
  }
  return kSuccess;
}

struct PathsArgs {
  std::string family;
  unsigned n = 0;
  bool list = false;
  bool ascii = false;
  std::string format = "text";
};

int run_paths(const PathsArgs& args, std::ostream& out) {
  const auto id = require_family(args.family);
  const auto family = catalog::path_family(id, args.n);
  if (args.format == "json") {
    const auto all = paths::enumerate(family);
    json list = json::array();
    for (const auto& p : all) list.push_back(paths::render(p));
    json doc{{"family", catalog::info(id).key}, {"n", args.n}, {"count", all.size()}, {"paths", std::move(list)}};
    out << doc.dump() << '\n';
    return kSuccess;
  }
  if (!args.list && !args.ascii) {
    out << paths::count(family) << '\n';
    return kSuccess;
  }
  const auto all = paths::enumerate(family);
  out << all.size() << '\n';
  for (const auto& p : all) {
    out << paths::render(p) << '\n';
    if (args.ascii) out << paths::render_ascii(p) << '\n';
  }
  return kSuccess;
}

struct VerifyArgs {
  unsigned max_n = 12;
  std::size_t order = 40;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.max_n = args.max_n;
  options.order = args.order;
  const auto results = run_verification(options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.cases << " cases)";
    if (!r.passed) out << "  " << r.counterexample;
    out << '\n';
    if (!r.passed) ++failed;
  }
  if (failed == 0) {
    out << "all " << results.size() << " checks passed\n";
    return kSuccess;
  }
  const auto first = std::find_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
  err << "verify: " << failed << " of " << results.size() << " checks failed; first: " << first->name << ": "
      << first->counterexample << '\n';
  return kMismatch;
}

struct OeisArgs {
  std::string id;
  std::size_t terms = 100;
  std::optional<std::string> cache_dir;
};

int run_oeis(const OeisArgs& args, std::ostream& out, std::ostream& err, oeis::Transport* transport) {
  if (!oeis::valid_id(args.id)) throw UsageError{"invalid OEIS id '" + args.id + "'"};
  const auto id = catalog::find_family(args.id);
  if (!id) throw UsageError{"unknown family '" + args.id + "': not one of the ten configured sequences"};
  std::unique_ptr<oeis::Transport> owned;
  if (transport == nullptr) {
    owned = oeis::make_https_transport();
    transport = owned.get();
  }
  const auto report = oeis::compare(*id, args.terms, oeis::resolve_cache_dir(args.cache_dir), *transport);
  out << oeis::format_report(report) << '\n';
  if (report.partial()) {
    err << "warning: only " << report.compared << " of " << report.requested << " terms were compared\n";
  }
  return report.agree() ? kSuccess : kMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, oeis::Transport* transport) {
  CLI::App app{"Exact lattice-path counting: sequences, Riordan triangles, path listings and cross-checks",
               "lattice"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const auto formats = CLI::IsMember({"text", "json", "bfile"});

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print the first terms of a sequence");
  seq_cmd->add_option("family", seq.family, "Family key or OEIS id")->required();
  seq_cmd->add_option("--terms,-k", seq.terms, "Number of terms")->check(CLI::PositiveNumber);
  seq_cmd->add_option("--method", seq.method, "formula | gf | riordan | brute")
      ->check(CLI::IsMember({"formula", "gf", "riordan", "brute"}));
  seq_cmd->add_option("--format", seq.format, "text | json | bfile")->check(formats);

  TriangleArgs tri;
  auto* tri_cmd = app.add_subcommand("triangle", "Print rows of a Riordan triangle");
  tri_cmd->add_option("array", tri.array, "delannoy | motzkin | uh | pascal")->required();
  tri_cmd->add_option("--rows", tri.rows, "Number of rows")->check(CLI::PositiveNumber);
  tri_cmd->add_option("--format", tri.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  PathsArgs pth;
  auto* pth_cmd = app.add_subcommand("paths", "Count or list the paths of a family");
  pth_cmd->add_option("family", pth.family, "Family key or OEIS id")->required();
  pth_cmd->add_option("--n", pth.n, "Term index n")->required();
  pth_cmd->add_flag("--list", pth.list, "List one path per line");
  pth_cmd->add_flag("--ascii", pth.ascii, "Draw each listed path");
  pth_cmd->add_option("--format", pth.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run every cross-check and print a pass/fail table");
  ver_cmd->add_option("--max-n", ver.max_n, "Largest n for per-term checks");
  ver_cmd->add_option("--order", ver.order, "Series truncation order")->check(CLI::PositiveNumber);

  OeisArgs oe;
  auto* oe_cmd = app.add_subcommand("oeis", "Compare computed terms with an OEIS b-file");
  oe_cmd->add_option("id", oe.id, "OEIS id, e.g. A000108")->required();
  oe_cmd->add_option("--terms,-k", oe.terms, "Number of terms")->check(CLI::PositiveNumber);
  oe_cmd->add_option("--cache-dir", oe.cache_dir, "b-file cache (default: $LATTICE_CACHE_DIR or bundled fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "lattice: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*seq_cmd) return run_seq(seq, out);
    if (*tri_cmd) return run_triangle(tri, out);
    if (*pth_cmd) return run_paths(pth, out);
    if (*ver_cmd) return run_verify(ver, out, err);
    if (*oe_cmd) return run_oeis(oe, out, err, transport);
  } catch (const UsageError& e) {
    err << "lattice: " << e.message << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "lattice: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace lattice::cli
