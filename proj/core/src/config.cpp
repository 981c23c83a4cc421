#include "pcurv/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"
#include "pcurv/serialize.hpp"
#include "pcurv/version.hpp"

namespace pcurv {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "stab_unique",  "stab_axioms",     "stab_duality",       "weyl_gates",     "flatness",
      "integrality",  "decomposition",   "function_linearity", "pcurv_degree",   "check_t0",
      "check_q0",     "h_expansion",     "commutator",         "charpoly_shift", "ev_spectrum",
      "lift_shift",   "orbit_distinct",  "discriminant",       "cross_basis",
  };
  return names;
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

long long to_int(const std::string& key, const std::string& v) {
  long long x = 0;
  const std::string s = trim(v);
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
  return x;
}

int to_sign(const std::string& key, const std::string& v) {
  if (v == "plus" || v == "+" || v == "+1" || v == "1") return +1;
  if (v == "minus" || v == "-" || v == "-1") return -1;
  throw ConfigError("key '" + key + "': expected plus or minus, got '" + v + "'");
}

std::vector<std::string> split_list(std::string v) {
  v = trim(v);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') throw ConfigError("unterminated list '" + v + "'");
    v = v.substr(1, v.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
  const std::string key = trim(key_in);
  const std::string v = trim(value_in);
  if (key == "system") {
    system = v;
  } else if (key == "prime" || key == "p") {
    const long long x = to_int(key, v);
    if (x <= 2 || x > 65521 || !fp::is_prime(static_cast<std::uint32_t>(x)))
      throw ConfigError("prime must be an odd prime below 2^16, got " + v);
    prime = static_cast<std::uint32_t>(x);
  } else if (key == "truncation" || key == "N") {
    const long long x = to_int(key, v);
    if (x < 1 || x > 64) throw ConfigError("truncation must lie in 1..64, got " + v);
    truncation = static_cast<int>(x);
  } else if (key == "divisor" || key == "b") {
    divisor.clear();
    if (v == "rho") return;
    for (auto& s : split_list(v)) divisor.push_back(static_cast<int>(to_int(key, s)));
    if (divisor.empty()) throw ConfigError("divisor must not be empty");
  } else if (key == "weyl_mode") {
    try {
      weyl_mode = parse_weyl_mode(v);
    } catch (const Error&) {
      throw ConfigError("weyl_mode must be paper-literal or su-corrected, got '" + v + "'");
    }
  } else if (key == "nabla_sign") {
    nabla_sign = to_sign(key, v);
  } else if (key == "h_sign") {
    h_sign = to_sign(key, v);
  } else if (key == "lift_shift") {
    lift_shift = v.empty() ? "0" : v;
  } else if (key == "basis") {
    if (v == "stable") basis = Basis::Stable;
    else if (v == "fixed") basis = Basis::Fixed;
    else throw ConfigError("basis must be stable or fixed, got '" + v + "'");
  } else if (key == "checks") {
    checks.clear();
    if (v != "all") {
      for (auto& s : split_list(v)) {
        const auto& k = known_checks();
        if (std::find(k.begin(), k.end(), s) == k.end()) throw ConfigError("unknown check '" + s + "'");
        checks.push_back(s);
      }
    }
  } else if (key == "cache_dir") {
    cache_dir = v;
  } else if (key == "output") {
    output = v;
  } else if (key == "seed") {
    const long long x = to_int(key, v);
    if (x < 0) throw ConfigError("seed must be non-negative");
    seed = static_cast<std::uint64_t>(x);
  } else if (key == "max_rank") {
    const long long x = to_int(key, v);
    if (x < 1 || x > 8) throw ConfigError("max_rank must lie in 1..8");
    max_rank = static_cast<int>(x);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void RunConfig::apply_override(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + kv + "'");
  set(kv.substr(0, eq), kv.substr(eq + 1));
}

void RunConfig::load_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.resize(c);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str());
}

void RunConfig::validate() const {
  const RootSystemSpec spec = RootSystemSpec::parse(system, max_rank);
  if (!divisor.empty() && static_cast<int>(divisor.size()) != spec.rank)
    throw ConfigError("divisor has " + std::to_string(divisor.size()) + " coordinates, rank is " +
                      std::to_string(spec.rank));
  lift_shift_poly(PolyRing::get(prime, spec.rank));
}

bool RunConfig::enabled(const std::string& check) const {
  return checks.empty() || std::find(checks.begin(), checks.end(), check) != checks.end();
}

IVec RunConfig::effective_divisor(int rank) const { return divisor.empty() ? IVec(rank, 1) : divisor; }

Poly RunConfig::lift_shift_poly(const PolyRing* R) const {
  Poly c = parse_poly(lift_shift, R);
  if (!c.is_zero() && (!c.is_homogeneous(1) || c.degree_in(R->t()) > 0))
    throw ConfigError("lift_shift must be a linear form in l1..lr, h; got '" + lift_shift + "'");
  return c.is_zero() ? Poly(R) : c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  auto list = [](const auto& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "");
      if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, std::string>) s += v[i];
      else s += std::to_string(v[i]);
    }
    return s + "]";
  };
  return {
      {"system", system},
      {"prime", std::to_string(prime)},
      {"truncation", std::to_string(truncation)},
      {"divisor", divisor.empty() ? "rho" : list(divisor)},
      {"weyl_mode", to_string(weyl_mode)},
      {"nabla_sign", nabla_sign > 0 ? "plus" : "minus"},
      {"h_sign", h_sign > 0 ? "plus" : "minus"},
      {"lift_shift", lift_shift},
      {"basis", basis == Basis::Stable ? "stable" : "fixed"},
      {"checks", checks.empty() ? "all" : list(checks)},
      {"cache_dir", cache_dir},
      {"output", output},
      {"seed", std::to_string(seed)},
      {"max_rank", std::to_string(max_rank)},
  };
}

std::string RunConfig::to_text() const {
  std::string s;
  for (auto& [k, v] : entries()) s += k + " = " + v + "\n";
  return s;
}

}  // namespace pcurv

namespace pcurv {

std::string version() { return PCURV_VERSION_STRING; }

}  // namespace pcurv
