#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "pcurv/stable.hpp"

namespace pcurv {

/// Both stable bases for one (system, prime, convention) key.
struct StabPair {
  StabBasis plus, minus;
};

std::string cache_file_name(const Gkm& g);
std::string serialize_stab(const Gkm& g, const StabPair& s, const std::string& version_stamp);
/// Returns nullopt and a reason when the text does not belong to this key,
/// carries another version stamp, or is malformed.
std::optional<StabPair> parse_stab(const std::string& text, const Gkm& g, const std::string& version_stamp,
                                   std::string* why = nullptr);

struct CacheOutcome {
  bool hit = false;
  std::string note;  // why a present file was not used
};

/// Loads from `dir` if possible, otherwise solves and stores. An empty `dir`
/// disables caching. Warnings about unusable files go to `log` when given.
StabPair load_or_solve(const Gkm& g, const std::string& dir, CacheOutcome* outcome = nullptr,
                       std::ostream* log = nullptr, const std::string& version_stamp = "");

}  // namespace pcurv
