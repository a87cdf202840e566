#include <benchmark/benchmark.h>

#include "namecalc/corpus.hpp"
#include "namecalc/decide.hpp"
#include "namecalc/parser.hpp"
#include "namecalc/proof.hpp"
#include "namecalc/representation.hpp"

using namespace namecalc;

namespace {

void BM_DecideMood(benchmark::State& state) {
  Formula f = parse_formula("(a(M,P) & a(S,M)) -> i(S,P)");
  for (auto _ : state) benchmark::DoNotOptimize(decide(f, ModelClass::All).valid);
}
BENCHMARK(BM_DecideMood);

void BM_DecideLetters(benchmark::State& state) {
  const char* chains[] = {"a(S,S)", "a(S,P) -> a(S,P)", "(a(S,M) & a(M,P)) -> a(S,P)",
                          "(a(S,M) & a(M,Q) & a(Q,P)) -> a(S,P)",
                          "(a(S,M) & a(M,Q) & a(Q,R) & a(R,P)) -> a(S,P)"};
  Formula f = parse_formula(chains[state.range(0) - 1]);
  for (auto _ : state) benchmark::DoNotOptimize(decide(f, ModelClass::Traditional).valid);
}
BENCHMARK(BM_DecideLetters)->DenseRange(1, 5);

void BM_DecideEps(benchmark::State& state) {
  Formula f = parse_formula("(eps(S,M) & a(M,P)) -> eps(S,P)");
  for (auto _ : state) benchmark::DoNotOptimize(decide(f, ModelClass::All).valid);
}
BENCHMARK(BM_DecideEps);

void BM_OracleBuild(benchmark::State& state) {
  for (auto _ : state) {
    Oracle o({"S", "P"}, ModelClass::All, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(o.distinct_diagrams());
  }
}
BENCHMARK(BM_OracleBuild)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckProof(benchmark::State& state) {
  ProofScript p = parse_proof_script(builtin_corpus().files.at("scripts/luk/ferio.proof"));
  const SystemSpec& luk = system_spec(SystemId::LUK);
  for (auto _ : state) benchmark::DoNotOptimize(check_proof(luk, p).accepted);
}
BENCHMARK(BM_CheckProof);

void BM_Canonical(benchmark::State& state) {
  Model m = random_model(17, {"S", "P", "M"}, ModelClass::Traditional, 4);
  auto method = state.range(0) == 0 ? CanonicalMethod::Filters : CanonicalMethod::Pairs;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_model(m, {"S", "P", "M"}, SystemId::SH, method).size());
}
BENCHMARK(BM_Canonical)->Arg(0)->Arg(1);

void BM_CorpusRun(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus().ok());
}
BENCHMARK(BM_CorpusRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
