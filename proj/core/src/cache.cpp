#include "pcurv/cache.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pcurv/error.hpp"
#include "pcurv/serialize.hpp"
#include "pcurv/version.hpp"

namespace pcurv {

namespace {

constexpr const char* kMagic = "pcurv-stab-cache";

std::string stamp_or_default(const std::string& s) { return s.empty() ? version() : s; }

void write_basis(std::ostream& os, const StabBasis& b) {
  os << "direction " << b.direction << "\n";
  os << "nullity " << b.nullity << "\n";
  os << "axiom_nullity " << b.axiom_nullity << "\n";
  os << "eps";
  for (int e : b.eps) os << " " << e;
  os << "\n";
  for (auto& row : b.rows) {
    for (std::size_t v = 0; v < row.size(); ++v) os << (v ? " ; " : "") << to_text(row[v]);
    os << "\n";
  }
}

bool expect(std::istream& is, const std::string& key, std::string& value) {
  std::string line;
  if (!std::getline(is, line)) return false;
  if (line.rfind(key + " ", 0) != 0) return false;
  value = line.substr(key.size() + 1);
  return true;
}

StabBasis read_basis(std::istream& is, const Gkm& g) {
  const int n = g.roots().order();
  StabBasis b;
  std::string v;
  if (!expect(is, "direction", v)) throw ConfigError("missing direction");
  b.direction = std::stoi(v);
  if (!expect(is, "nullity", v)) throw ConfigError("missing nullity");
  b.nullity = std::stoi(v);
  if (!expect(is, "axiom_nullity", v)) throw ConfigError("missing axiom_nullity");
  b.axiom_nullity = std::stoi(v);
  std::string line;
  if (!std::getline(is, line) || line.rfind("eps", 0) != 0) throw ConfigError("missing eps");
  std::istringstream es(line.substr(3));
  int e;
  while (es >> e) b.eps.push_back(e);
  if (static_cast<int>(b.eps.size()) != n) throw ConfigError("eps has wrong length");
  std::string block;
  for (int w = 0; w < n; ++w) {
    if (!std::getline(is, line)) throw ConfigError("truncated rows");
    block += line + "\n";
  }
  const PMat M = parse_pmat(block, g.ring());
  if (M.n != n) throw ConfigError("row matrix has wrong size");
  b.rows.assign(n, GkmClass(n));
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u) b.rows[w][u] = M(w, u);
  return b;
}

}  // namespace

std::string cache_file_name(const Gkm& g) {
  return "stab-" + g.roots().spec().name() + "-p" + std::to_string(g.ring()->p()) + "-h" +
         (g.h_sign() > 0 ? "plus" : "minus") + ".txt";
}

std::string serialize_stab(const Gkm& g, const StabPair& s, const std::string& version_stamp) {
  std::ostringstream os;
  os << kMagic << " " << stamp_or_default(version_stamp) << "\n";
  os << "system " << g.roots().spec().name() << "\n";
  os << "prime " << g.ring()->p() << "\n";
  os << "h_sign " << (g.h_sign() > 0 ? "plus" : "minus") << "\n";
  write_basis(os, s.plus);
  write_basis(os, s.minus);
  os << "end\n";
  return os.str();
}

std::optional<StabPair> parse_stab(const std::string& text, const Gkm& g, const std::string& version_stamp,
                                   std::string* why) {
  auto reject = [&](const std::string& r) -> std::optional<StabPair> {
    if (why) *why = r;
    return std::nullopt;
  };
  std::istringstream is(text);
  std::string v;
  if (!expect(is, kMagic, v)) return reject("not a stable-basis cache file");
  if (v != stamp_or_default(version_stamp)) return reject("stale version stamp '" + v + "'");
  if (!expect(is, "system", v) || v != g.roots().spec().name()) return reject("system mismatch");
  if (!expect(is, "prime", v) || v != std::to_string(g.ring()->p())) return reject("prime mismatch");
  if (!expect(is, "h_sign", v) || v != (g.h_sign() > 0 ? "plus" : "minus")) return reject("convention mismatch");
  StabPair s;
  try {
    s.plus = read_basis(is, g);
    s.minus = read_basis(is, g);
  } catch (const Error& e) {
    return reject(std::string("corrupt: ") + e.what());
  } catch (const std::exception& e) {
    return reject(std::string("corrupt: ") + e.what());
  }
  std::string line;
  if (!std::getline(is, line) || line != "end") return reject("corrupt: missing end marker");
  if (s.plus.direction != 1 || s.minus.direction != -1) return reject("corrupt: directions");
  if (!verify_axioms(g, s.plus).empty() || !verify_axioms(g, s.minus).empty())
    return reject("corrupt: cached rows fail the stable-envelope axioms");
  return s;
}

StabPair load_or_solve(const Gkm& g, const std::string& dir, CacheOutcome* outcome, std::ostream* log,
                       const std::string& version_stamp) {
  namespace fs = std::filesystem;
  CacheOutcome local;
  CacheOutcome& out = outcome ? *outcome : local;
  out = {};
  fs::path path;
  if (!dir.empty()) {
    path = fs::path(dir) / cache_file_name(g);
    std::ifstream in(path);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      std::string why;
      if (auto s = parse_stab(ss.str(), g, version_stamp, &why)) {
        out.hit = true;
        return *s;
      }
      out.note = why;
      if (log) *log << "warning: ignoring cache file " << path.string() << ": " << why << "; recomputing\n";
    }
  }
  StabPair s{solve_stab(g, +1), solve_stab(g, -1)};
  if (!dir.empty()) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
      o << serialize_stab(g, s, version_stamp);
    }
    fs::rename(tmp, path, ec);
    if (ec && log) *log << "warning: could not write cache file " << path.string() << ": " << ec.message() << "\n";
  }
  return s;
}

}  // namespace pcurv
