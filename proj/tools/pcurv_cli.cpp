// Command-line front end: verify, roots, stab, connection, pcurv, steenrod.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcurv/error.hpp"
#include "pcurv/pipeline.hpp"
#include "pcurv/version.hpp"

namespace {

struct Args {
  std::vector<std::string> positional;
  std::string config_file;
  std::string output;
  bool quiet = false;
  bool timings = false;
};

pcurv::RunConfig build_config(const Args& a) {
  pcurv::RunConfig cfg;
  if (!a.config_file.empty()) cfg.load_file(a.config_file);
  for (std::size_t i = 0; i < a.positional.size(); ++i) {
    const std::string& s = a.positional[i];
    if (s.find('=') == std::string::npos) {
      if (i != 0) throw pcurv::ConfigError("unexpected argument '" + s + "'; use key=value");
      cfg.set("system", s);
    } else {
      cfg.apply_override(s);
    }
  }
  if (!a.output.empty()) cfg.set("output", a.output);
  cfg.validate();
  return cfg;
}

void write_out(const pcurv::RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(cfg.output, std::ios::binary | std::ios::trunc);
  if (!o) throw pcurv::ConfigError("cannot write output file '" + cfg.output + "'");
  o << text;
}

int run(const std::string& sub, const Args& a) {
  try {
    const pcurv::RunConfig cfg = build_config(a);
    std::ostream* log = a.timings ? &std::cerr : nullptr;
    if (sub == "verify") {
      const pcurv::PCurvReport rep = pcurv::run_verify(cfg, log);
      write_out(cfg, rep.to_json());
      if (!a.quiet) std::cerr << rep.summary_table();
      return rep.verdict;
    }
    write_out(cfg, pcurv::emit(sub, cfg, log));
    return pcurv::kVerdictPass;
  } catch (const pcurv::Error& e) {
    std::cerr << "pcurv " << sub << ": " << e.what() << "\n";
    return pcurv::verdict_for(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-curvature of the quantum connection of T*(G/B)", "pcurv"};
  app.set_version_flag("--version", pcurv::version());
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"verify", "Run the verification suite and print a JSON report"},
      {"roots", "Print the root data and Weyl group"},
      {"stab", "Print the stable-envelope restriction matrix"},
      {"connection", "Print the quantum multiplication matrix B"},
      {"pcurv", "Print the p-curvature matrix F_b"},
      {"steenrod", "Print Sigma_b(1) via the p-curvature identification"},
  };
  Args args;
  std::string chosen;
  for (auto& [name, desc] : subs) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("args", args.positional, "SYSTEM followed by key=value overrides");
    s->add_option("-c,--config", args.config_file, "Config file with key = value lines");
    s->add_option("-o,--output", args.output, "Write the artifact to this file");
    s->add_flag("-q,--quiet", args.quiet, "Suppress the summary table");
    s->add_flag("--timings", args.timings, "Print stage timings to stderr");
    s->callback([&chosen, n = name] { chosen = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pcurv::kVerdictConfig;
  }
  return run(chosen, args);
}
