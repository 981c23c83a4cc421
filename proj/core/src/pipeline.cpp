#include "pcurv/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pcurv/error.hpp"
#include "pcurv/serialize.hpp"
#include "pcurv/version.hpp"

namespace pcurv {

namespace {

std::string word_label(const WeylElement& e) {
  if (e.word.empty()) return "e";
  std::string s;
  for (int i : e.word) s += "s" + std::to_string(i + 1);
  return s;
}

std::string ivec_text(const IVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// P M P^{-1} coefficientwise in q.
RSMat to_fixed_series(const StableBasisChange& C, const PSMat& M) {
  const NovikovIndex* I = M.a[0].index();
  RSMat out(M.n, Basis::Fixed);
  for (auto& x : out.a) x = RSeries(I);
  for (std::size_t k = 0; k < I->size(); ++k) {
    RMat c(M.n);
    bool any = false;
    for (std::size_t e = 0; e < M.a.size(); ++e) {
      c.a[e] = RatFun(M.a[e][k].ring() ? M.a[e][k] : Poly(C.P()(0, 0).ring()));
      any = any || !M.a[e][k].is_zero();
    }
    if (!any) continue;
    const RMat f = C.to_fixed(c);
    for (std::size_t e = 0; e < M.a.size(); ++e) out.a[e][k] = f.a[e];
  }
  return out;
}

std::string fixed_point_legend(const RootSystem& rs) {
  std::string s = "# fixed points:";
  for (int w = 0; w < rs.order(); ++w) s += " " + word_label(rs.elem(w));
  return s + "\n";
}

}  // namespace

template <class F>
auto Pipeline::timed(const char* stage, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&] {
    if (log_) {
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      *log_ << "[pcurv] " << stage << " " << s << " s\n";
    }
  };
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    finish();
  } else {
    auto r = f();
    finish();
    return r;
  }
}

Pipeline::Pipeline(RunConfig config, std::ostream* log) : cfg_(std::move(config)), log_(log) {
  cfg_.validate();
  rs_ = std::make_unique<RootSystem>(RootSystemSpec::parse(cfg_.system, cfg_.max_rank));
  check_prime(*rs_, cfg_.prime);
  g_ = std::make_unique<Gkm>(*rs_, cfg_.prime, cfg_.h_sign);
  I_ = NovikovIndex::get(rs_->rank(), cfg_.truncation);
}

Pipeline::~Pipeline() = default;

const StabPair& Pipeline::stab() {
  if (!stab_)
    stab_ = std::make_unique<StabPair>(
        timed("stab", [&] { return load_or_solve(*g_, cfg_.cache_dir, &cache_, log_ ? log_ : &std::cerr); }));
  return *stab_;
}

const CacheOutcome& Pipeline::cache_outcome() {
  stab();
  return cache_;
}

const StableBasisChange& Pipeline::change() {
  if (!change_) {
    const auto& s = stab();
    change_ = std::make_unique<StableBasisChange>(*g_, s.plus, s.minus);
  }
  return *change_;
}

const ConnectionBuilder& Pipeline::builder() {
  if (!builder_) builder_ = std::make_unique<ConnectionBuilder>(*g_, change());
  return *builder_;
}

const WeylAction& Pipeline::weyl() {
  if (!weyl_) weyl_ = std::make_unique<WeylAction>(timed("weyl", [&] { return builder().weyl(cfg_.weyl_mode); }));
  return *weyl_;
}

ConnectionOperator Pipeline::make_op(const IVec& chi, const Poly& shift) {
  DivisorClass b{chi, shift};
  return ConnectionOperator{b, builder().quantum_mult(b, weyl(), I_), cfg_.nabla_sign};
}

const ConnectionOperator& Pipeline::op() {
  if (!op_)
    op_ = std::make_unique<ConnectionOperator>(timed("connection", [&] {
      return make_op(cfg_.effective_divisor(rs_->rank()), cfg_.lift_shift_poly(ring()));
    }));
  return *op_;
}

const PCurvMatrix& Pipeline::pcurv() {
  if (!F_) F_ = std::make_unique<PCurvMatrix>(timed("pcurv", [&] { return p_curvature(op(), ring()); }));
  return *F_;
}

const SeriesCharPoly& Pipeline::charpoly() {
  if (!chi_)
    chi_ = std::make_unique<SeriesCharPoly>(timed("charpoly", [&] { return pcurv::charpoly(pcurv().F, ring()); }));
  return *chi_;
}

int verdict_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return kVerdictConfig;
  if (dynamic_cast<const DegeneracyError*>(&e)) return kVerdictDegenerate;
  return kVerdictFail;
}

namespace {

void run_checks(Pipeline& P, PCurvReport& rep, std::ostream* log) {
  const RunConfig& cfg = P.config();
  const PolyRing* R = P.ring();
  const Gkm& g = P.gkm();
  auto add = [&](const std::string& name, auto&& body) {
    if (!cfg.enabled(name)) return;
    CheckResult c{name, "pass", "", ""};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const ConventionError& e) {
      c.status = "fail";
      c.witness = e.what();
    }
    if (log)
      *log << "[pcurv] check " << name << " " << c.status << " "
           << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    rep.checks.push_back(std::move(c));
  };
  auto fail = [](CheckResult& c, const std::string& w) {
    c.status = "fail";
    if (c.witness.empty()) c.witness = w;
  };

  add("stab_unique", [&](CheckResult& c) {
    const auto& s = P.stab();
    auto an = [](int x) { return x < 0 ? std::string("not computed") : std::to_string(x); };
    c.info = "solved nullity " + std::to_string(s.plus.nullity) + "/" + std::to_string(s.minus.nullity) +
             "; axiom-only nullity " + an(s.plus.axiom_nullity) + "/" + an(s.minus.axiom_nullity);
    if (s.plus.nullity || s.minus.nullity) fail(c, "non-zero nullity");
  });
  add("stab_axioms", [&](CheckResult& c) {
    const auto& s = P.stab();
    for (const StabBasis* b : {&s.plus, &s.minus}) {
      auto errs = verify_axioms(g, *b);
      if (!errs.empty()) fail(c, "direction " + std::to_string(b->direction) + ": " + errs.front());
    }
  });
  add("stab_duality", [&](CheckResult& c) {
    const auto& s = P.stab();
    auto bad = verify_duality(g, s.plus, s.minus);
    if (!bad.empty())
      fail(c, "pairing <Stab+(" + word_label(P.roots().elem(bad[0].first)) + "), Stab-(" +
                  word_label(P.roots().elem(bad[0].second)) + ")> is wrong");
  });
  add("weyl_gates", [&](CheckResult& c) {
    const auto& W = P.weyl();
    if (!W.gates.all()) {
      std::string w;
      for (auto& f : W.gates.failures) w += (w.empty() ? "" : "; ") + f;
      fail(c, w);
    }
    if (W.mode == WeylMode::PaperLiteral)
      c.info = "literal reflection operators are -1 - R; failure is the expected outcome in this mode";
  });
  add("flatness", [&](CheckResult& c) {
    const int r = P.roots().rank();
    if (r < 2) {
      c.info = "vacuous at rank 1";
      return;
    }
    std::vector<ConnectionOperator> fund;
    for (int i = 0; i < r; ++i) {
      IVec e(r, 0);
      e[i] = 1;
      fund.push_back(P.make_op(e, Poly(R)));
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (!flatness_defect(fund[i], fund[j]).is_zero())
          fail(c, "fundamental divisors " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
  });
  add("integrality", [&](CheckResult& c) {
    std::string why;
    if (!integrality_check(P.op(), &why)) fail(c, why);
  });
  add("decomposition", [&](CheckResult& c) {
    std::string why;
    if (!decomposition_check(P.op(), &why)) fail(c, why);
  });
  add("function_linearity", [&](CheckResult& c) {
    const NovikovIndex* I = P.index();
    std::mt19937_64 rng(cfg.seed);
    std::vector<Exponent> samples;
    if (I->size() > 1)
      for (int k = 0; k < 3; ++k) samples.push_back(I->exponent(1 + rng() % (I->size() - 1)));
    std::string s;
    for (auto& e : samples) s += (s.empty() ? "" : " ") + exponent_to_string(e);
    c.info = "sampled " + s;
    std::string why;
    if (!function_linearity(P.op(), P.pcurv(), samples, R, &why)) fail(c, why);
  });
  add("pcurv_degree", [&](CheckResult& c) {
    std::string why;
    if (!degree_check(P.pcurv(), &why)) fail(c, why);
  });
  add("check_t0", [&](CheckResult& c) {
    if (!check_t0(P.pcurv(), P.op(), R)) fail(c, "F|_{t=0} differs from B^p|_{t=0}");
  });
  add("check_q0", [&](CheckResult& c) {
    if (!check_q0(P.pcurv(), P.op(), R)) fail(c, "F|_{q=0} differs from (b^p - t^{p-1} b) cup");
  });
  add("h_expansion", [&](CheckResult& c) {
    auto r = h_expansion_checks(P.pcurv(), P.op(), R);
    if (!r.degree_ok) fail(c, "h-degree exceeds p");
    if (!r.top_ok) fail(c, "h^p part differs from that of B^p");
    if (!r.bottom_ok) fail(c, "h^0 part differs from the classical Steenrod prediction");
  });
  add("commutator", [&](CheckResult& c) {
    c.info = "checks F B - B F = t d_b F";
    if (!commutator_check(P.pcurv(), P.op(), R)) fail(c, "F B - B F != t d_b F");
  });
  add("charpoly_shift", [&](CheckResult& c) {
    if (!charpoly_shift_check(P.charpoly())) fail(c, "chi(F) changes under h -> h - t");
  });
  add("ev_spectrum", [&](CheckResult& c) {
    c.info = "normalization c = " + std::string(kEvSign < 0 ? "-" : "") + "(t^{p-1} h - h^p), derived at A1, p = 3";
    std::string why;
    if (!ev_prediction_check(P.charpoly(), P.op(), R, kEvSign, &why)) fail(c, why);
  });
  add("lift_shift", [&](CheckResult& c) {
    for (int v : {R->h(), 0})
      if (!lift_shift_check(P.builder(), P.op(), P.weyl(), Poly::var(R, v), R))
        fail(c, "shift by " + R->var_name(v));
  });
  add("orbit_distinct", [&](CheckResult& c) {
    auto col = orbit_collisions(g, P.op().b.chi);
    if (!col.empty()) {
      fail(c, "bad prime/divisor: w(b) collide mod p for w = " + word_label(P.roots().elem(col[0].first)) + ", " +
                  word_label(P.roots().elem(col[0].second)) + " (" + std::to_string(col.size()) + " pairs)");
    }
  });
  add("discriminant", [&](CheckResult& c) {
    auto d = discriminant_checks(P.charpoly(), P.op(), g, R, true);
    if (!d.t0_matches) fail(c, "chi(F)|_{t=0} differs from chi(B^p)");
    if (!d.q0t0_formula) fail(c, "discriminant at q = 0, t = 0 differs from the orbit product");
    c.info = d.distinct ? "discriminant at q = 0, t = 0 is non-zero" : "orbit not distinct; discriminant vanishes";
  });
  add("cross_basis", [&](CheckResult& c) {
    bool polynomial = false;
    const PSMat Fx = cross_basis_pcurv(P.builder(), P.op(), P.index(), R, &polynomial);
    if (!polynomial) fail(c, "fixed-point p-curvature has non-polynomial stable entries");
    else if (!(Fx == P.pcurv().F)) fail(c, "fixed-point and stable p-curvature differ");
  });
}

}  // namespace

PCurvReport run_verify(const RunConfig& config, std::ostream* log) {
  PCurvReport rep;
  rep.config = config;
  rep.version = version();
  try {
    Pipeline P(config, log);
    run_checks(P, rep, log);
    if (P.roots().order() <= 8) {
      rep.matrices.emplace_back("stab_plus", fixed_point_legend(P.roots()) + [&] {
        PMat M(P.roots().order());
        const auto& s = P.stab().plus;
        for (int w = 0; w < M.n; ++w)
          for (int v = 0; v < M.n; ++v) M(w, v) = s.rows[w][v];
        return to_text(M);
      }());
      rep.matrices.emplace_back("B", to_text(P.op().effective()));
      rep.matrices.emplace_back("F", to_text(P.pcurv().F));
      std::string chi;
      const auto& cp = P.charpoly();
      for (std::size_t k = 0; k < cp.a.size(); ++k) chi += "a" + std::to_string(k) + " = " + to_text(cp.a[k]) + "\n";
      rep.matrices.emplace_back("charpoly", chi);
    }
    for (auto& c : rep.checks)
      if (c.status == "fail") rep.verdict = kVerdictFail;
  } catch (const Error& e) {
    rep.error = e.what();
    rep.verdict = verdict_for(e);
  }
  return rep;
}

std::string PCurvReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json cfg;
  for (auto& [k, v] : config.entries()) cfg[k] = v;
  j["config"] = cfg;
  j["version"] = version;
  j["verdict"] = verdict;
  if (!error.empty()) j["error"] = error;
  j["provenance"] = "Sigma_b is defined as the p-curvature F_b on divisor classes; no curve counts are computed";
  auto arr = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json x;
    x["name"] = c.name;
    x["status"] = c.status;
    if (!c.witness.empty()) x["witness"] = c.witness;
    if (!c.info.empty()) x["info"] = c.info;
    arr.push_back(x);
  }
  j["checks"] = arr;
  if (!matrices.empty()) {
    nlohmann::ordered_json m;
    for (auto& [k, v] : matrices) m[k] = v;
    j["matrices"] = m;
  }
  return j.dump(2) + "\n";
}

std::string PCurvReport::summary_table() const {
  std::ostringstream os;
  std::size_t w = 5;
  for (auto& c : checks) w = std::max(w, c.name.size());
  os << config.system << " p=" << config.prime << " N=" << config.truncation << " " << to_string(config.weyl_mode)
     << "\n";
  for (auto& c : checks) {
    os << "  " << c.name << std::string(w - c.name.size() + 2, ' ') << c.status;
    if (!c.witness.empty()) os << "  (" << c.witness << ")";
    os << "\n";
  }
  if (!error.empty()) os << "  error: " << error << "\n";
  os << "verdict " << verdict << "\n";
  return os.str();
}

std::string emit(const std::string& sub, const RunConfig& config, std::ostream* log) {
  Pipeline P(config, log);
  const RootSystem& rs = P.roots();
  const RunConfig& cfg = P.config();
  std::ostringstream os;
  if (sub == "roots") {
    const IMat& A = rs.cartan();
    os << "# root system " << rs.spec().name() << "\n";
    os << "cartan\n";
    for (auto& row : A) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " ; " : "") << row[j];
      os << "\n";
    }
    os << "weyl_order " << rs.order() << "\n";
    os << "positive_roots " << rs.num_positive() << "\n";
    std::vector<int> idx(rs.num_positive());
    for (int k = 0; k < rs.num_positive(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      const auto &x = rs.positive_roots()[a], &y = rs.positive_roots()[b];
      return std::tie(x.height, x.simple) < std::tie(y.height, y.simple);
    });
    for (int k : idx) {
      const auto& r = rs.positive_roots()[k];
      os << "height " << r.height << " simple " << ivec_text(r.simple) << " weight " << ivec_text(r.weight)
         << " coroot " << ivec_text(r.coroot) << "\n";
    }
    os << "weyl_elements\n";
    for (int w = 0; w < rs.order(); ++w) os << word_label(rs.elem(w)) << " length " << rs.elem(w).length << "\n";
    return os.str();
  }
  if (sub == "stab") {
    os << "# Stab_+(w)|_v, rows w, columns v\n" << fixed_point_legend(rs);
    PMat M(rs.order());
    const auto& s = P.stab().plus;
    for (int w = 0; w < M.n; ++w)
      for (int v = 0; v < M.n; ++v) M(w, v) = s.rows[w][v];
    os << to_text(M);
    return os.str();
  }
  auto header = [&](const std::string& what) {
    os << "# " << what << " for " << rs.spec().name() << ", p = " << cfg.prime << ", N = " << cfg.truncation
       << ", b = " << ivec_text(P.op().b.chi) << ", " << (cfg.basis == Basis::Stable ? "stable" : "fixed-point")
       << " basis\n";
    if (cfg.basis == Basis::Fixed) os << fixed_point_legend(rs);
  };
  if (sub == "connection") {
    header("quantum multiplication matrix (nabla = t d_b + sign * B, effective B shown)");
    const PSMat B = P.op().effective();
    os << (cfg.basis == Basis::Stable ? to_text(B) : to_text(to_fixed_series(P.change(), B)));
    return os.str();
  }
  if (sub == "pcurv") {
    header("p-curvature F_b = nabla^p - t^{p-1} nabla");
    const PSMat& F = P.pcurv().F;
    os << (cfg.basis == Basis::Stable ? to_text(F) : to_text(to_fixed_series(P.change(), F)));
    return os.str();
  }
  if (sub == "steenrod") {
    const auto& s = P.stab();
    if (!verify_duality(P.gkm(), s.plus, s.minus).empty())
      throw ConventionError("refusing to emit Sigma_b: the stable-envelope duality gate failed");
    const int r = rs.rank();
    if (r >= 2) {
      std::vector<ConnectionOperator> fund;
      for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        fund.push_back(P.make_op(e, Poly(P.ring())));
      }
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          if (!flatness_defect(fund[i], fund[j]).is_zero())
            throw ConventionError("refusing to emit Sigma_b: the connection is not flat (weyl_mode = " +
                                  to_string(cfg.weyl_mode) + ")");
    }
    os << "# QSt := F_b (p-curvature identification on divisors)\n";
    os << "# Sigma_b(1) is defined as F_b applied to the unit; no curve counts are computed\n";
    header("Sigma_b(1)");
    os << to_text(steenrod_unit(P.pcurv(), P.change(), cfg.basis));
    return os.str();
  }
  throw ConfigError("unknown subcommand '" + sub + "'");
}

}  // namespace pcurv
