#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcurv/connection.hpp"

namespace pcurv {

/// Names of the verification checks, in report order.
const std::vector<std::string>& known_checks();

/// Flat key = value configuration. Unknown keys are rejected.
struct RunConfig {
  std::string system = "A1";
  std::uint32_t prime = 3;
  int truncation = 6;
  IVec divisor;  // empty means rho
  WeylMode weyl_mode = WeylMode::SuCorrected;
  int nabla_sign = +1;
  int h_sign = +1;
  std::string lift_shift = "0";
  Basis basis = Basis::Stable;
  std::vector<std::string> checks;  // empty means all
  std::string cache_dir;
  std::string output;
  std::uint64_t seed = 0;
  int max_rank = 3;

  /// Accepts the aliases p, N and b.
  void set(const std::string& key, const std::string& value);
  /// Parses `key = value` lines; '#' starts a comment.
  void load_text(const std::string& text);
  void load_file(const std::string& path);
  /// Applies a `key=value` override.
  void apply_override(const std::string& kv);

  void validate() const;
  bool enabled(const std::string& check) const;
  IVec effective_divisor(int rank) const;
  Poly lift_shift_poly(const PolyRing* R) const;

  /// All keys in canonical order with canonical values.
  std::vector<std::pair<std::string, std::string>> entries() const;
  std::string to_text() const;
};

}  // namespace pcurv
