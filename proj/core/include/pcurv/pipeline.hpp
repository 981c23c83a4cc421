#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pcurv/cache.hpp"
#include "pcurv/config.hpp"
#include "pcurv/pcurv.hpp"

namespace pcurv {

enum VerdictCode : int { kVerdictPass = 0, kVerdictFail = 1, kVerdictConfig = 2, kVerdictDegenerate = 3 };

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail or skipped
  std::string witness;  // first counterexample or reason, when not passing
  std::string info;     // informational detail
};

struct PCurvReport {
  RunConfig config;
  std::string version;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> matrices;  // canonical text blocks
  std::string error;
  int verdict = kVerdictPass;

  /// Deterministic JSON document (no timings).
  std::string to_json() const;
  /// One line per check.
  std::string summary_table() const;
};

/// Lazily built pipeline objects for one configuration.
class Pipeline {
 public:
  /// Validates the config; throws ConfigError or DegeneracyError.
  explicit Pipeline(RunConfig config, std::ostream* log = nullptr);
  ~Pipeline();

  const RunConfig& config() const { return cfg_; }
  const RootSystem& roots() const { return *rs_; }
  const Gkm& gkm() const { return *g_; }
  const PolyRing* ring() const { return g_->ring(); }
  const NovikovIndex* index() const { return I_; }

  const StabPair& stab();
  const CacheOutcome& cache_outcome();
  const StableBasisChange& change();
  const ConnectionBuilder& builder();
  const WeylAction& weyl();
  /// The configured divisor with its lift shift.
  const ConnectionOperator& op();
  ConnectionOperator make_op(const IVec& chi, const Poly& shift);
  const PCurvMatrix& pcurv();
  const SeriesCharPoly& charpoly();

 private:
  template <class F>
  auto timed(const char* stage, F&& f);

  RunConfig cfg_;
  std::ostream* log_;
  std::unique_ptr<RootSystem> rs_;
  std::unique_ptr<Gkm> g_;
  const NovikovIndex* I_ = nullptr;
  std::unique_ptr<StabPair> stab_;
  CacheOutcome cache_;
  std::unique_ptr<StableBasisChange> change_;
  std::unique_ptr<ConnectionBuilder> builder_;
  std::unique_ptr<WeylAction> weyl_;
  std::unique_ptr<ConnectionOperator> op_;
  std::unique_ptr<PCurvMatrix> F_;
  std::unique_ptr<SeriesCharPoly> chi_;
};

/// Runs every enabled check. Errors are folded into the verdict; timings go to `log`.
PCurvReport run_verify(const RunConfig& config, std::ostream* log = nullptr);

/// Canonical text for roots, stab, connection, pcurv or steenrod. Throws on
/// errors; steenrod refuses with ConventionError when flatness or duality fails.
std::string emit(const std::string& subcommand, const RunConfig& config, std::ostream* log = nullptr);

/// Maps an exception to its verdict code.
int verdict_for(const std::exception& e);

}  // namespace pcurv
