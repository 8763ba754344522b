#include <benchmark/benchmark.h>

#include <string>

#include "hammock/hammock.hpp"
#include "hammock/homcert.hpp"
#include "hammock/oracle.hpp"
#include "hammock/spec_file.hpp"
#include "hammock/theorems.hpp"

namespace hammock {
namespace {

Model fixture(const std::string& name) { return load_model_file(std::string(HAMMOCK_FIXTURE_DIR) + "/" + name); }

void BM_EnumerateZigzags(benchmark::State& state) {
  auto r = fixture("cylfix.spec").primary();
  auto a = r->cat().object("A");
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zigzags(*r, a, a, n));
}
BENCHMARK(BM_EnumerateZigzags)->Arg(1)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_StageComponents(benchmark::State& state) {
  auto r = fixture("cylfix.spec").primary();
  auto a = r->cat().object("A");
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto s = make_stage(r, a, a, n);
    benchmark::DoNotOptimize(pi0_stage(*s));
  }
}
BENCHMARK(BM_StageComponents)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Pi0Tower(benchmark::State& state) {
  auto r = fixture("para.spec").primary();
  auto a = r->cat().object("A");
  auto b = r->cat().object("B");
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pi0_tower(r, a, b, n));
}
BENCHMARK(BM_Pi0Tower)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_LocalizeHom(benchmark::State& state) {
  auto r = fixture("para.spec").primary();
  auto a = r->cat().object("A");
  auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(localize_hom(*r, a, a, bound));
}
BENCHMARK(BM_LocalizeHom)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyHomotopyFamily(benchmark::State& state) {
  auto m = fixture("cylfix.spec");
  auto r = m.primary();
  auto a = r->cat().object("A");
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(build_thm31(r, m.homotopies.at("H"), a, n)));
}
BENCHMARK(BM_VerifyHomotopyFamily)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hammock

BENCHMARK_MAIN();
