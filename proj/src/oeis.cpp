#include "lattice/oeis.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#ifdef LATTICE_WITH_HTTPS
#include <httplib.h>
#endif

#include "lattice/error.hpp"

namespace lattice::oeis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_failure, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomically(const std::filesystem::path& target, const std::string& body) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(target.parent_path());
  auto tmp = target;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
         std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) {
      std::filesystem::remove(tmp);
      throw Error(ErrorKind::configuration, "cannot write cache file " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

#ifdef LATTICE_WITH_HTTPS
class HttpsTransport final : public Transport {
 public:
  std::string get(const std::string& url) override {
    const std::string scheme_host = "https://oeis.org";
    if (url.rfind(scheme_host, 0) != 0) {
      throw Error(ErrorKind::network_unreachable, "unsupported URL " + url);
    }
    httplib::Client client(scheme_host);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    auto res = client.Get(url.substr(scheme_host.size()));
    if (!res) {
      throw Error(ErrorKind::network_unreachable,
                  "GET " + url + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw Error(ErrorKind::network_unreachable, "GET " + url + " returned HTTP " + std::to_string(res->status));
    }
    return res->body;
  }
};
#endif

}  // namespace

bool valid_id(std::string_view oeis_id) noexcept {
  if (oeis_id.size() != 7 || oeis_id[0] != 'A') return false;
  for (char c : oeis_id.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BFile parse_bfile(std::string_view oeis_id, std::string_view text, Source source) {
  BFile file{std::string(oeis_id), {}, source};
  std::size_t line_no = 0;
  std::optional<long> previous;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw Error(ErrorKind::parse_failure, file.oeis_id + " line " + std::to_string(line_no) + ": expected 'n a(n)'");
    }
    const std::string_view index_text = line.substr(0, gap);
    const std::string_view value_text = trim(line.substr(gap));
    Integer index;
    Integer value;
    try {
      index = parse_integer(index_text);
      value = parse_integer(value_text);
    } catch (const Error&) {
      throw Error(ErrorKind::parse_failure,
                  file.oeis_id + " line " + std::to_string(line_no) + ": malformed '" + std::string(line) + "'");
    }
    if (!index.fits_slong_p()) {
      throw Error(ErrorKind::parse_failure, file.oeis_id + " line " + std::to_string(line_no) + ": index too large");
    }
    const long n = index.get_si();
    if (previous && n != *previous + 1) {
      throw Error(ErrorKind::parse_failure, file.oeis_id + " line " + std::to_string(line_no) +
                                                ": index " + std::to_string(n) + " does not follow " +
                                                std::to_string(*previous));
    }
    previous = n;
    file.entries.emplace(n, std::move(value));
  }
  return file;
}

std::string serialize_bfile(const BFile& file) {
  std::string out;
  for (const auto& [n, value] : file.entries) {
    out += std::to_string(n);
    out += ' ';
    out += to_string(value);
    out += '\n';
  }
  return out;
}

std::string bfile_url(std::string_view oeis_id) {
  return "https://oeis.org/" + std::string(oeis_id) + "/b" + std::string(oeis_id.substr(1)) + ".txt";
}

std::filesystem::path cache_path(const std::filesystem::path& cache_dir, std::string_view oeis_id) {
  return cache_dir / ("b" + std::string(oeis_id.substr(1)) + ".txt");
}

std::unique_ptr<Transport> make_https_transport() {
#ifdef LATTICE_WITH_HTTPS
  return std::make_unique<HttpsTransport>();
#else
  return std::make_unique<OfflineTransport>();
#endif
}

std::string OfflineTransport::get(const std::string& url) {
  throw Error(ErrorKind::network_unreachable, "offline: refusing to fetch " + url);
}

BFile fetch(std::string_view oeis_id, const std::filesystem::path& cache_dir, Transport& transport) {
  if (!valid_id(oeis_id)) {
    throw Error(ErrorKind::invalid_id, "invalid OEIS id '" + std::string(oeis_id) + "'");
  }
  const auto path = cache_path(cache_dir, oeis_id);
  if (std::filesystem::exists(path)) {
    return parse_bfile(oeis_id, read_file(path), Source::fixture);
  }
  const std::string body = transport.get(bfile_url(oeis_id));
  BFile file = parse_bfile(oeis_id, body, Source::fetched);
  write_atomically(path, body);
  return file;
}

std::filesystem::path default_cache_dir() {
#ifdef LATTICE_DEFAULT_CACHE_DIR
  return LATTICE_DEFAULT_CACHE_DIR;
#else
  return "data/oeis";
#endif
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("LATTICE_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return default_cache_dir();
}

CompareReport compare(catalog::FamilyId family, std::size_t k, const BFile& file) {
  const auto& info = catalog::info(family);
  CompareReport report{family, std::string(info.oeis), k, 0, std::nullopt};
  const long offset = static_cast<long>(info.offset);
  const auto first = file.entries.find(offset);
  if (file.entries.empty() || file.entries.begin()->first != offset || first == file.entries.end() ||
      first->second != info.listed_prefix.front()) {
    throw Error(ErrorKind::configuration, file.oeis_id + ": b-file must start at offset " +
                                              std::to_string(offset) + " with a(" + std::to_string(offset) +
                                              ") = " + std::to_string(info.listed_prefix.front()));
  }
  std::size_t available = 0;
  for (auto it = first; it != file.entries.end() && available < k; ++it) ++available;
  if (available == 0) return report;
  const auto computed = catalog::terms(family, available, catalog::Method::formula);
  for (std::size_t i = 0; i < available; ++i) {
    const long index = offset + static_cast<long>(i);
    const Integer& expected = file.entries.at(index);
    if (expected != computed[i]) {
      report.compared = i + 1;
      report.mismatch = Mismatch{index, expected, computed[i]};
      return report;
    }
  }
  report.compared = available;
  return report;
}

CompareReport compare(catalog::FamilyId family, std::size_t k, const std::filesystem::path& cache_dir,
                      Transport& transport) {
  return compare(family, k, fetch(catalog::info(family).oeis, cache_dir, transport));
}

std::string format_report(const CompareReport& report) {
  std::string out = report.oeis_id + " " + std::string(catalog::info(report.family).key) + ": ";
  if (report.mismatch) {
    out += "mismatch at n=" + std::to_string(report.mismatch->index) + " (b-file " +
           to_string(report.mismatch->expected) + ", computed " + to_string(report.mismatch->computed) + ")";
  } else {
    out += "agree (" + std::to_string(report.compared) + " terms)";
    if (report.partial()) {
      out += "; b-file holds only " + std::to_string(report.compared) + " of " + std::to_string(report.requested) +
             " requested terms";
    }
  }
  return out;
}

}  // namespace lattice::oeis
