// Micro-benchmarks for the hot paths: group enumeration, KL table fill,
// the bar-solve oracle, Hecke products, basis changes and functor actions.
#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "heckecat/functors.hpp"
#include "heckecat/kgroup.hpp"
#include "heckecat/oracle.hpp"

namespace {

using namespace heckecat;

const CoxeterGroup& shared_group(const std::string& cartan) {
  static std::map<std::string, std::unique_ptr<CoxeterGroup>> groups;
  auto& slot = groups[cartan];
  if (!slot) slot = std::make_unique<CoxeterGroup>(CartanType::parse(cartan));
  return *slot;
}

void BM_BuildGroup(benchmark::State& state, const std::string& cartan) {
  const CartanType type = CartanType::parse(cartan);
  for (auto _ : state) {
    CoxeterGroup g(type);
    benchmark::DoNotOptimize(g.size());
  }
}

void BM_KLTableFill(benchmark::State& state, const std::string& cartan) {
  const CoxeterGroup& g = shared_group(cartan);
  for (auto _ : state) {
    KLCache kl(g);
    kl.fill_all();
    benchmark::DoNotOptimize(kl.mu(g.identity(), g.longest()));
  }
}

void BM_BarSolve(benchmark::State& state, const std::string& cartan) {
  const CoxeterGroup& g = shared_group(cartan);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kl_by_bar_solve(g, g.longest()));
  }
}

void BM_HeckeProduct(benchmark::State& state, const std::string& cartan) {
  const CoxeterGroup& g = shared_group(cartan);
  KLCache kl(g);
  const HeckeElement u = kl.kl_basis(g.longest());
  for (auto _ : state) {
    benchmark::DoNotOptimize(u * u);
  }
}

void BM_ChangeBasis(benchmark::State& state, const std::string& cartan) {
  const CoxeterGroup& g = shared_group(cartan);
  KLCache kl(g);
  KGroupContext ctx(g, kl);
  // Warm the memoized expansions, then time the linear algebra alone.
  const CharacterVector probe = ctx.change_basis(
      ctx.unit(BasisTag::Projective, g.longest()), BasisTag::Simple);
  benchmark::DoNotOptimize(&probe);
  for (auto _ : state) {
    const CharacterVector there = ctx.change_basis(
        ctx.unit(BasisTag::Projective, g.longest()), BasisTag::Simple);
    benchmark::DoNotOptimize(ctx.change_basis(there, BasisTag::Projective));
  }
}

void BM_DerivedTwist(benchmark::State& state, const std::string& cartan) {
  const CoxeterGroup& g = shared_group(cartan);
  KLCache kl(g);
  KGroupContext ctx(g, kl);
  FunctorEngine eng(ctx);
  const CharacterVector start = ctx.unit(BasisTag::DualVerma, g.identity());
  benchmark::DoNotOptimize(eng.apply_derived_twist(start, g.longest()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.apply_derived_twist(start, g.longest()));
  }
}

void BM_CacheRoundTrip(benchmark::State& state, const std::string& cartan) {
  const CoxeterGroup& g = shared_group(cartan);
  KLCache source(g);
  const KLCache::Table table = source.export_table();
  for (auto _ : state) {
    KLCache kl(g);
    kl.import_table(table, kDefaultSeed);
    benchmark::DoNotOptimize(kl.mu(g.identity(), g.longest()));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_BuildGroup, A3, "A3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_BuildGroup, B3, "B3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_KLTableFill, B2, "B2")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_KLTableFill, G2, "G2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KLTableFill, A3, "A3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BarSolve, A3, "A3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HeckeProduct, A3, "A3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_ChangeBasis, A3, "A3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_DerivedTwist, A3, "A3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CacheRoundTrip, A3, "A3")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
