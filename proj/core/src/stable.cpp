#include "pcurv/stable.hpp"

#include <algorithm>
#include <map>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"
#include "pcurv/fplinear.hpp"

namespace pcurv {

namespace {

std::vector<std::uint64_t> monomials_of_degree(int nvars, int d) {
  std::vector<std::uint64_t> out;
  std::vector<int> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == nvars - 1) {
      e[k] = left;
      out.push_back(mono::make(e));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

// Substitution making a linear form vanish: pivot := pivot - form.
std::pair<int, Poly> kernel_substitution(const LinearForm& l) {
  const int x = l.pivot();
  return {x, Poly::var(l.ring(), x) - l.to_poly()};
}

std::vector<int> support(const RootSystem& rs, int direction, int w) {
  std::vector<int> s;
  for (int v = 0; v < rs.order(); ++v)
    if (direction > 0 ? rs.bruhat_leq(v, w) : rs.bruhat_leq(w, v)) s.push_back(v);
  return s;
}

Poly h_free_part(const Poly& f, int hvar) { return f.coeff_in(hvar, 0); }

}  // namespace

Poly stab_diagonal(const Gkm& g, int w, int direction, int* eps) {
  const PolyRing* R = g.ring();
  auto [minus, plus] = g.normal_split(w, direction);
  (void)plus;
  Poly e = Poly::constant(R, 1), e0 = Poly::constant(R, 1);
  for (auto& x : minus) {
    e = e * g.to_poly(x);
    e0 = e0 * g.to_poly({x.chi, 0});
  }
  int s = 0;
  if (e0 == g.euler_base(w)) s = 1;
  else if (-e0 == g.euler_base(w)) s = -1;
  else throw InternalError("polarization sign is undefined");
  if (eps) *eps = s;
  return s > 0 ? e : -e;
}

GkmClass dl_apply(const Gkm& g, int i, const GkmClass& f) {
  const RootSystem& rs = g.roots();
  const PolyRing* R = g.ring();
  const Poly hb = g.hbar();
  GkmClass out(rs.order());
  const IVec ai = rs.simple_root(i);
  for (int v = 0; v < rs.order(); ++v) {
    const int vs = rs.mul(v, rs.simple_reflection(i));
    Poly diff = f[vs] - f[v];
    Poly q(R);
    if (!diff.is_zero()) {
      std::uint32_t sc = 1;
      LinearForm l = g.to_form({rs.act(v, ai), 0}, &sc);
      if (!diff.divide_linear(l, q)) throw ConventionError("Demazure-Lusztig operator applied to a non-GKM class");
      q = q.scaled(fp::inv(sc, R->p()));
    }
    out[v] = f[vs] + hb * q;
  }
  return out;
}

Mat<RatFun> dl_matrix(const Gkm& g, int i) {
  const RootSystem& rs = g.roots();
  const PolyRing* R = g.ring();
  const int n = rs.order();
  Mat<RatFun> T(n, Basis::Fixed);
  const Poly hb = g.hbar();
  const IVec ai = rs.simple_root(i);
  for (int v = 0; v < n; ++v) {
    const int vs = rs.mul(v, rs.simple_reflection(i));
    std::uint32_t sc = 1;
    LinearForm l = g.to_form({rs.act(v, ai), 0}, &sc);
    const Poly a = l.to_poly().scaled(sc);
    const auto inv = fp::inv(sc, R->p());
    T(v, vs) += RatFun((a + hb).scaled(inv), {l});
    T(v, v) += RatFun((-hb).scaled(inv), {l});
  }
  return T;
}

int axiom_nullity(const Gkm& g, int direction, int w) {
  const RootSystem& rs = g.roots();
  const PolyRing* R = g.ring();
  const int d = rs.num_positive();
  const auto supp = support(rs, direction, w);
  std::vector<int> unknown_vertex;
  for (int v : supp)
    if (v != w) unknown_vertex.push_back(v);
  const auto basis_monos = monomials_of_degree(R->rank() + 1, d - 1);
  const Poly hpoly = Poly::var(R, R->h());
  std::vector<Poly> basis;
  for (auto m : basis_monos) basis.push_back(hpoly * Poly::monomial(R, m, 1));
  const int nb = static_cast<int>(basis.size());
  std::map<int, int> slot;  // vertex -> first unknown index
  for (std::size_t k = 0; k < unknown_vertex.size(); ++k) slot[unknown_vertex[k]] = static_cast<int>(k) * nb;

  FpSystem sys(R->p(), static_cast<int>(unknown_vertex.size()) * nb);
  const Poly diag = stab_diagonal(g, w, direction);
  const auto p = R->p();
  for (auto& e : g.edges()) {
    const bool ua = slot.count(e.a), ub = slot.count(e.b);
    const bool ka = e.a == w, kb = e.b == w;
    if (!ua && !ub && !ka && !kb) continue;
    auto [x, sub] = kernel_substitution(g.to_form(e.label));
    std::map<std::uint64_t, int> row_of;
    auto row = [&](std::uint64_t m) -> std::vector<std::uint32_t>& {
      auto it = row_of.find(m);
      if (it == row_of.end()) {
        it = row_of.emplace(m, static_cast<int>(sys.rows.size())).first;
        sys.new_row();
      }
      return sys.rows[it->second];
    };
    auto add_unknowns = [&](int v, bool negate) {
      for (int k = 0; k < nb; ++k) {
        Poly s = basis[k].substitute(x, sub);
        for (auto& t : s.terms()) {
          auto& r = row(t.m);
          auto c = negate ? fp::neg(t.c, p) : t.c;
          r[slot[v] + k] = fp::add(r[slot[v] + k], c, p);
        }
      }
    };
    auto add_known = [&](bool negate) {
      Poly s = diag.substitute(x, sub);
      for (auto& t : s.terms()) {
        auto& r = row(t.m);
        // moved to the right-hand side
        auto c = negate ? t.c : fp::neg(t.c, p);
        r[sys.nvars] = fp::add(r[sys.nvars], c, p);
      }
    };
    if (ua) add_unknowns(e.a, false);
    if (ub) add_unknowns(e.b, true);
    if (ka) add_known(false);
    if (kb) add_known(true);
  }
  if (sys.nvars == 0) {
    for (auto& r : sys.rows)
      if (r[0]) return -1;
    return 0;
  }
  auto res = sys.solve();
  return res.consistent ? res.nullity : -1;
}

StabBasis solve_stab(const Gkm& g, int direction, int axiom_nullity_limit) {
  const RootSystem& rs = g.roots();
  const PolyRing* R = g.ring();
  const int n = rs.order();
  StabBasis S;
  S.direction = direction;
  S.rows.assign(n, GkmClass(n, Poly(R)));
  S.eps.assign(n, 0);
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return direction > 0 ? rs.elem(a).length < rs.elem(b).length : rs.elem(a).length > rs.elem(b).length;
  });
  const int start = direction > 0 ? rs.identity() : rs.longest();
  std::vector<char> done(n, 0);
  for (int w : order) {
    int eps = 0;
    const Poly diag = stab_diagonal(g, w, direction, &eps);
    S.eps[w] = eps;
    if (w == start) {
      S.rows[w][w] = diag;
      done[w] = 1;
      continue;
    }
    int i = -1, u = -1;
    for (int k = 0; k < rs.rank() && i < 0; ++k) {
      const int c = rs.mul(w, rs.simple_reflection(k));
      const bool step = direction > 0 ? rs.elem(c).length < rs.elem(w).length
                                      : rs.elem(c).length > rs.elem(w).length;
      if (step && done[c]) {
        i = k;
        u = c;
      }
    }
    if (i < 0) throw InternalError("no recursion step for a stable envelope");
    GkmClass cand = dl_apply(g, i, S.rows[u]);
    for (auto& x : cand) x = -x;

    const auto supp = support(rs, direction, w);
    std::vector<char> in_supp(n, 0);
    for (int v : supp) in_supp[v] = 1;
    for (int x = 0; x < n; ++x)
      if (!in_supp[x] && !cand[x].is_zero())
        throw ConventionError("stable envelope recursion leaves the support");
    if (!(cand[w] == diag)) throw ConventionError("stable envelope recursion breaks the diagonal normalization");

    // cand + sum_{v in supp, v != w} c_v Stab(v) with h-divisible off-diagonal part
    std::vector<int> lower;
    for (int v : supp)
      if (v != w) lower.push_back(v);
    FpSystem sys(R->p(), static_cast<int>(lower.size()));
    for (int x : lower) {
      std::map<std::uint64_t, int> row_of;
      auto row = [&](std::uint64_t m) -> std::vector<std::uint32_t>& {
        auto it = row_of.find(m);
        if (it == row_of.end()) {
          it = row_of.emplace(m, static_cast<int>(sys.rows.size())).first;
          sys.new_row();
        }
        return sys.rows[it->second];
      };
      for (std::size_t k = 0; k < lower.size(); ++k) {
        const Poly f = h_free_part(S.rows[lower[k]][x], R->h());
        for (auto& t : f.terms()) row(t.m)[k] = t.c;
      }
      const Poly f = h_free_part(cand[x], R->h());
      for (auto& t : f.terms()) row(t.m)[sys.nvars] = fp::neg(t.c, R->p());
    }
    auto res = sys.solve();
    if (!res.consistent) throw ConventionError("stable envelope system is inconsistent");
    if (res.nullity > 0)
      throw DegeneracyError("stable envelope system has nullity " + std::to_string(res.nullity));
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (!res.x[k]) continue;
      for (int x = 0; x < n; ++x) cand[x] += S.rows[lower[k]][x].scaled(res.x[k]);
    }
    S.rows[w] = std::move(cand);
    done[w] = 1;
  }
  if (n <= axiom_nullity_limit) {
    S.axiom_nullity = 0;
    for (int w = 0; w < n; ++w) S.axiom_nullity = std::max(S.axiom_nullity, axiom_nullity(g, direction, w));
  }
  return S;
}

std::vector<std::string> verify_axioms(const Gkm& g, const StabBasis& s) {
  const RootSystem& rs = g.roots();
  const int d = rs.num_positive();
  const int hv = g.ring()->h();
  std::vector<std::string> bad;
  auto name = [&](int w) {
    std::string out = "w=";
    for (int l : rs.elem(w).word) out += "s" + std::to_string(l + 1);
    return rs.elem(w).word.empty() ? std::string("w=e") : out;
  };
  for (int w = 0; w < rs.order(); ++w) {
    const auto& row = s.rows[w];
    for (int v = 0; v < rs.order(); ++v) {
      const bool in = s.direction > 0 ? rs.bruhat_leq(v, w) : rs.bruhat_leq(w, v);
      const Poly& f = row[v];
      if (!in && !f.is_zero()) bad.push_back("support " + name(w) + " at " + name(v));
      if (!f.is_zero() && !f.is_homogeneous(d)) bad.push_back("degree " + name(w) + " at " + name(v));
      if (v == w) {
        if (!(f == stab_diagonal(g, w, s.direction))) bad.push_back("diagonal " + name(w));
      } else if (!h_free_part(f, hv).is_zero()) {
        bad.push_back("h-divisibility " + name(w) + " at " + name(v));
      }
    }
    if (!g.gkm_check(row)) bad.push_back("gkm " + name(w));
  }
  return bad;
}

Mat<RatFun> pairing_matrix(const Gkm& g, const StabBasis& plus, const StabBasis& minus) {
  const int n = g.roots().order();
  Mat<RatFun> M(n);
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) M(w, v) = g.loc_pairing(plus.rows[w], minus.rows[v]);
  return M;
}

std::vector<std::pair<int, int>> verify_duality(const Gkm& g, const StabBasis& plus, const StabBasis& minus) {
  const int n = g.roots().order();
  const RatFun sign(Poly::constant(g.ring(), g.roots().num_positive() % 2 ? -1 : 1));
  auto M = pairing_matrix(g, plus, minus);
  std::vector<std::pair<int, int>> bad;
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      if (!(M(w, v) == (w == v ? sign : RatFun()))) bad.emplace_back(w, v);
  return bad;
}

Mat<RatFun> to_ratfun(const Mat<Poly>& M) {
  return M.map([](const Poly& x) { return RatFun(x); });
}

Mat<Poly> to_poly(const Mat<RatFun>& M, const std::string& what) {
  return M.map([&](const RatFun& x) {
    if (!x.is_polynomial()) throw ConventionError(what + ": denominator " + x.to_string() + " does not cancel");
    return x.num();
  });
}

StableBasisChange::StableBasisChange(const Gkm& g, const StabBasis& plus, const StabBasis& minus) {
  const RootSystem& rs = g.roots();
  const PolyRing* R = g.ring();
  const int n = rs.order();
  P_ = Mat<Poly>(n, Basis::Fixed);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) P_(v, w) = plus.rows[w][v];
  Pr_ = to_ratfun(P_);
  Pinv_ = Mat<RatFun>(n, Basis::Stable);
  const bool odd = rs.num_positive() % 2;
  for (int u = 0; u < n; ++u) {
    std::vector<LinearForm> den;
    std::uint32_t scale = 1;
    for (auto* group : {&g.tangent(u).base, &g.tangent(u).fiber})
      for (auto& t : *group) {
        std::uint32_t sc = 1;
        den.push_back(g.to_form(t, &sc));
        scale = fp::mul(scale, sc, R->p());
      }
    auto inv = fp::inv(scale, R->p());
    if (odd) inv = fp::neg(inv, R->p());
    for (int v = 0; v < n; ++v) {
      const Poly& q = minus.rows[v][u];
      if (!q.is_zero()) Pinv_(v, u) = RatFun(q.scaled(inv), den);
    }
  }
  const auto one = RatFun(Poly::constant(R, 1));
  if (!(Pinv_ * Pr_ == Mat<RatFun>::identity(n, one)))
    throw ConventionError("opposite stable basis does not invert the restriction matrix");
}

Mat<RatFun> StableBasisChange::to_stable(const Mat<RatFun>& M) const {
  Mat<RatFun> r = Pinv_ * M * Pr_;
  r.basis = Basis::Stable;
  return r;
}

Mat<RatFun> StableBasisChange::to_fixed(const Mat<RatFun>& M) const {
  Mat<RatFun> r = Pr_ * M * Pinv_;
  r.basis = Basis::Fixed;
  return r;
}

Mat<Poly> StableBasisChange::to_stable_poly(const Mat<RatFun>& M) const {
  return to_poly(to_stable(M), "change of basis");
}

}  // namespace pcurv
