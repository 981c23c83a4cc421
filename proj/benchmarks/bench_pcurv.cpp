#include <benchmark/benchmark.h>

#include <random>

#include "pcurv/pcurv.hpp"

using namespace pcurv;

namespace {

Poly random_poly(const PolyRing* R, std::mt19937_64& rng, int terms, int deg) {
  std::vector<Poly::Term> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(R->nvars(), 0);
    for (int d = static_cast<int>(rng() % (deg + 1)); d > 0; --d) ++e[rng() % R->nvars()];
    t.push_back({mono::make(e), static_cast<std::uint32_t>(1 + rng() % (R->p() - 1))});
  }
  return Poly::from_terms(R, t);
}

struct Context {
  RootSystem rs;
  Gkm g;
  StabBasis plus, minus;
  StableBasisChange C;
  ConnectionBuilder cb;
  WeylAction W;
  ConnectionOperator op;
  Context(const char* sys, std::uint32_t p, int N)
      : rs(RootSystemSpec::parse(sys)),
        g(rs, p),
        plus(solve_stab(g, +1, 0)),
        minus(solve_stab(g, -1, 0)),
        C(g, plus, minus),
        cb(g, C),
        W(cb.weyl(WeylMode::SuCorrected)) {
    DivisorClass b{IVec(rs.rank(), 1), Poly(g.ring())};
    op = {b, cb.quantum_mult(b, W, NovikovIndex::get(rs.rank(), N)), +1};
  }
};

}  // namespace

static void BM_PolyMul(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const PolyRing* R = PolyRing::get(5, 3);
  Poly a = random_poly(R, rng, static_cast<int>(st.range(0)), 6), b = random_poly(R, rng, static_cast<int>(st.range(0)), 6);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64)->Arg(256);

static void BM_Berkowitz(benchmark::State& st) {
  std::mt19937_64 rng(2);
  const PolyRing* R = PolyRing::get(5, 2);
  const int n = static_cast<int>(st.range(0));
  Mat<Poly> M(n);
  for (auto& x : M.a) x = random_poly(R, rng, 3, 1);
  const Poly one = Poly::constant(R, 1);
  for (auto _ : st) benchmark::DoNotOptimize(charpoly_berkowitz(M, one));
}
BENCHMARK(BM_Berkowitz)->Arg(4)->Arg(8)->Arg(12);

static void BM_StabSolve(benchmark::State& st, const char* sys, std::uint32_t p) {
  RootSystem rs(RootSystemSpec::parse(sys));
  Gkm g(rs, p);
  for (auto _ : st) benchmark::DoNotOptimize(solve_stab(g, +1, 0));
}
BENCHMARK_CAPTURE(BM_StabSolve, A2_p5, "A2", 5u);
BENCHMARK_CAPTURE(BM_StabSolve, B2_p5, "B2", 5u);
BENCHMARK_CAPTURE(BM_StabSolve, A3_p3, "A3", 3u)->Unit(benchmark::kMillisecond);

static void BM_PCurvature(benchmark::State& st, const char* sys, std::uint32_t p, int N) {
  Context c(sys, p, N);
  for (auto _ : st) benchmark::DoNotOptimize(p_curvature(c.op, c.g.ring()));
}
BENCHMARK_CAPTURE(BM_PCurvature, A1_p3_N6, "A1", 3u, 6);
BENCHMARK_CAPTURE(BM_PCurvature, A2_p5_N7, "A2", 5u, 7)->Unit(benchmark::kMillisecond);

static void BM_CharPolyF(benchmark::State& st, const char* sys, std::uint32_t p, int N) {
  Context c(sys, p, N);
  const PCurvMatrix F = p_curvature(c.op, c.g.ring());
  for (auto _ : st) benchmark::DoNotOptimize(charpoly(F.F, c.g.ring()));
}
BENCHMARK_CAPTURE(BM_CharPolyF, A2_p3_N6, "A2", 3u, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
