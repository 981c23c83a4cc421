#include "pcurv/connection.hpp"

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

std::string to_string(WeylMode m) { return m == WeylMode::PaperLiteral ? "paper-literal" : "su-corrected"; }

WeylMode parse_weyl_mode(const std::string& s) {
  if (s == "paper-literal") return WeylMode::PaperLiteral;
  if (s == "su-corrected") return WeylMode::SuCorrected;
  throw ConfigError("weyl_mode must be paper-literal or su-corrected, got '" + s + "'");
}

PSMat lift_series(const PMat& M, const NovikovIndex* I) {
  return M.map([&](const Poly& x) { return x.is_zero() ? PSeries(I) : PSeries::constant(I, x); });
}

RSMat lift_series(const RMat& M, const NovikovIndex* I) {
  return M.map([&](const RatFun& x) { return x.is_zero() ? RSeries(I) : RSeries::constant(I, x); });
}

PSMat specialize(const PSMat& M, int var, long long c) {
  return M.map([&](const PSeries& s) { return s.map([&](const Poly& x) { return x.specialize(var, c); }); });
}

PMat right_permutation(const RootSystem& rs, int x, const PolyRing* R) {
  const int n = rs.order();
  PMat M(n);
  for (int w = 0; w < n; ++w) M(rs.mul(w, x), w) = Poly::constant(R, 1);
  return M;
}

ConnectionBuilder::ConnectionBuilder(const Gkm& g, const StableBasisChange& C) : g_(g), C_(C) {}

PMat ConnectionBuilder::cup_fixed(const DivisorClass& b) const {
  const int n = g_.roots().order();
  PMat M(n, Basis::Fixed);
  auto cls = g_.divisor_class(b.chi);
  for (int w = 0; w < n; ++w) M(w, w) = cls[w] + b.shift;
  return M;
}

PMat ConnectionBuilder::cup_stable(const DivisorClass& b) const {
  return to_poly(C_.to_stable(to_ratfun(cup_fixed(b))), "cup product in the stable basis");
}

namespace {

int braid_order(const IMat& A, int i, int j) {
  switch (A[i][j] * A[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw InternalError("not a finite-type Cartan matrix");
  }
}

template <class T>
T word_product(const std::vector<T>& simple, const IVec& word, const T& id) {
  T r = id;
  for (int l : word) r = r * simple[l];
  return r;
}

}  // namespace

WeylAction ConnectionBuilder::weyl(WeylMode mode) const {
  const RootSystem& rs = g_.roots();
  const PolyRing* R = g_.ring();
  const int n = rs.order();
  const PMat id = PMat::identity(n, Poly::constant(R, 1));
  WeylAction W{mode, {}, {}, {}};
  auto& G = W.gates;

  for (int i = 0; i < rs.rank(); ++i) {
    const PMat perm = right_permutation(rs, rs.simple_reflection(i), R);
    if (mode == WeylMode::SuCorrected) {
      PMat S = -C_.to_stable_poly(dl_matrix(g_, i));
      if (!(S == perm)) {
        G.matches_recursion = false;
        G.failures.push_back("[s" + std::to_string(i + 1) + "] differs from Stab(w) -> Stab(w s)");
      }
      W.simple.push_back(std::move(S));
    } else {
      W.simple.push_back(-id - perm);
    }
  }

  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto& beta = rs.positive_roots()[k];
    if (mode == WeylMode::PaperLiteral) {
      W.reflect.push_back(-id - right_permutation(rs, rs.reflection(k), R));
      continue;
    }
    bool have = false;
    PMat chosen;
    for (int u = 0; u < n; ++u)
      for (int i = 0; i < rs.rank(); ++i) {
        if (rs.act(u, rs.simple_root(i)) != beta.weight) continue;
        PMat M = word_product(W.simple, rs.elem(u).word, id) * W.simple[i] *
                 word_product(W.simple, rs.elem(rs.inverse(u)).word, id);
        if (!have) {
          chosen = std::move(M);
          have = true;
        } else if (!(M == chosen)) {
          G.conjugation_independent = false;
          G.failures.push_back("[s_beta] depends on the conjugating element for root " + std::to_string(k));
        }
      }
    W.reflect.push_back(std::move(chosen));
  }

  for (int i = 0; i < rs.rank(); ++i) {
    if (!(W.simple[i] * W.simple[i] == id)) {
      G.involution = false;
      G.failures.push_back("[s" + std::to_string(i + 1) + "]^2 != 1");
    }
    for (int j = i + 1; j < rs.rank(); ++j) {
      const int m = braid_order(rs.cartan(), i, j);
      PMat x = W.simple[i] * W.simple[j];
      PMat y = id;
      for (int r = 0; r < m; ++r) y = y * x;
      if (!(y == id)) {
        G.braid = false;
        G.failures.push_back("braid relation fails for (s" + std::to_string(i + 1) + ", s" +
                             std::to_string(j + 1) + ")");
      }
    }
  }
  if (mode == WeylMode::PaperLiteral) {
    // The literal operators are not a group action, so conjugation is compared directly.
    for (int k = 0; k < rs.num_positive(); ++k) {
      const auto& beta = rs.positive_roots()[k];
      const int u = beta.witness_elem;
      PMat M = word_product(W.simple, rs.elem(u).word, id) * W.simple[beta.witness_simple] *
               word_product(W.simple, rs.elem(rs.inverse(u)).word, id);
      if (!(M == W.reflect[k])) {
        G.conjugation_independent = false;
        G.failures.push_back("literal [s_beta] is not u[s_i]u^-1 for root " + std::to_string(k));
      }
    }
  }
  return W;
}

std::vector<RMat> ConnectionBuilder::weyl_fixed() const {
  const RootSystem& rs = g_.roots();
  const int n = rs.order();
  const RMat id = RMat::identity(n, RatFun(Poly::constant(g_.ring(), 1)), Basis::Fixed);
  std::vector<RMat> simple;
  for (int i = 0; i < rs.rank(); ++i) simple.push_back(-dl_matrix(g_, i));
  std::vector<RMat> out;
  for (auto& beta : rs.positive_roots()) {
    const int u = beta.witness_elem;
    out.push_back(word_product(simple, rs.elem(u).word, id) * simple[beta.witness_simple] *
                  word_product(simple, rs.elem(rs.inverse(u)).word, id));
  }
  return out;
}

PSMat ConnectionBuilder::quantum_mult(const DivisorClass& b, const WeylAction& W, const NovikovIndex* I) const {
  const RootSystem& rs = g_.roots();
  const PolyRing* R = g_.ring();
  const int n = rs.order();
  PSMat B = lift_series(cup_stable(b), I);
  const PMat id = PMat::identity(n, Poly::constant(R, 1));
  const Poly hb = g_.hbar();
  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto& beta = rs.positive_roots()[k];
    const int pr = RootSystem::pair(b.chi, beta.coroot);
    if (fp::reduce(pr, R->p()) == 0) continue;
    const PSeries geo = geometric_expand(R, I, beta.coroot).scaled(hb.scaled(fp::reduce(pr, R->p())));
    const PMat D = W.reflect[k] - id;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!D(i, j).is_zero()) B(i, j) += geo.scaled(D(i, j));
  }
  B.basis = Basis::Stable;
  return B;
}

RSMat ConnectionBuilder::quantum_mult_fixed(const DivisorClass& b, const std::vector<RMat>& W,
                                            const NovikovIndex* I) const {
  const RootSystem& rs = g_.roots();
  const PolyRing* R = g_.ring();
  const int n = rs.order();
  RSMat B = lift_series(to_ratfun(cup_fixed(b)), I);
  const RMat id = RMat::identity(n, RatFun(Poly::constant(R, 1)));
  const Poly hb = g_.hbar();
  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto& beta = rs.positive_roots()[k];
    const int pr = RootSystem::pair(b.chi, beta.coroot);
    if (fp::reduce(pr, R->p()) == 0) continue;
    const PSeries geo = geometric_expand(R, I, beta.coroot).scaled(hb.scaled(fp::reduce(pr, R->p())));
    RSeries rgeo(I);
    for (std::size_t a = 0; a < geo.size(); ++a)
      if (!geo[a].is_zero()) rgeo[a] = RatFun(geo[a]);
    const RMat D = W[k] - id;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!D(i, j).is_zero()) B(i, j) += rgeo.scaled(D(i, j));
  }
  B.basis = Basis::Fixed;
  return B;
}

std::vector<PSeries> nabla_apply(const ConnectionOperator& op, const std::vector<PSeries>& v) {
  const PSMat B = op.effective();
  if (static_cast<int>(v.size()) != B.n) throw InternalError("section has the wrong length");
  const NovikovIndex* I = B.a.empty() ? nullptr : B.a[0].index();
  const PolyRing* R = nullptr;
  for (auto& s : B.a)
    for (std::size_t k = 0; k < s.size() && !R; ++k) R = s[k].ring();
  if (!R) return B.apply(v);
  const PSeries t = PSeries::constant(I, Poly::var(R, R->t()));
  std::vector<PSeries> out = B.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += t * v[i].derivative(op.b.chi);
  return out;
}

PSMat flatness_defect(const ConnectionOperator& a, const ConnectionOperator& b) {
  const PSMat Ba = a.effective(), Bb = b.effective();
  const PolyRing* R = nullptr;
  for (auto& s : Ba.a)
    for (std::size_t k = 0; k < s.size() && !R; ++k) R = s[k].ring();
  PSMat D = Ba * Bb - Bb * Ba;
  if (!R) return D;
  const PSeries t = PSeries::constant(Ba.a[0].index(), Poly::var(R, R->t()));
  D += (derivative(Bb, a.b.chi) - derivative(Ba, b.b.chi)).scaled(t);
  return D;
}

bool integrality_check(const ConnectionOperator& op, std::string* why) {
  const PSMat& B = op.B;
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j) {
      const PSeries& s = B(i, j);
      for (std::size_t k = 0; k < s.size(); ++k) {
        const Poly& x = s[k];
        if (x.is_zero()) continue;
        const PolyRing* R = x.ring();
        bool ok;
        if (k == 0) {
          ok = x.is_homogeneous(1) && x.degree_in(R->t()) <= 0;
        } else {
          ok = x.terms().size() == 1 && x.terms()[0].m == mono::var(R->h());
        }
        if (!ok) {
          if (why) *why = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                          exponent_to_string(s.index()->exponent(k)) + ": " + x.to_string();
          return false;
        }
      }
    }
  return true;
}

bool decomposition_check(const ConnectionOperator& op, std::string* why) {
  const PSMat& B = op.B;
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j) {
      const PSeries& s = B(i, j);
      for (std::size_t k = 0; k < s.size(); ++k) {
        const Poly& x = s[k];
        if (x.is_zero()) continue;
        const bool ok = k == 0 ? x.is_homogeneous(1) : x.coeff_in(x.ring()->h(), 0).is_zero();
        if (!ok) {
          if (why) *why = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                          exponent_to_string(s.index()->exponent(k)) + ": " + x.to_string();
          return false;
        }
      }
    }
  return true;
}

}  // namespace pcurv
