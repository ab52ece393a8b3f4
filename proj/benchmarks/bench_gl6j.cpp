#include "gl6j/parse.hpp"
#include "gl6j/sixj.hpp"

#include <benchmark/benchmark.h>

using namespace gl6j;

namespace {

SixJProblem gl4_problem() {
  auto spec = [](const char *e) { return parse_bracket_expr(e, 4); };
  return build_problem(4, {spec("((a1 a2 b1 c1))"), spec("((a1 b1 b2 c1))"),
                           spec("((a1 b1 b2 c1))"), spec("((a1 a2 b1 c1))")});
}

void BM_ExpandTwoBracketGl4(benchmark::State &state) {
  BracketSpec spec = parse_bracket_expr("((a1 a2 a3 b1)(b2 c1 c2 c3))", 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(expand(spec));
}
BENCHMARK(BM_ExpandTwoBracketGl4);

void BM_SixjValueGl4(benchmark::State &state) {
  SixJProblem p = gl4_problem();
  for (auto _ : state) {
    SelectionSet sel = selection_set(p);
    benchmark::DoNotOptimize(sixj_value(p, sel));
  }
}
BENCHMARK(BM_SixjValueGl4);

void BM_SixjOracleGl4(benchmark::State &state) {
  SixJProblem p = gl4_problem();
  for (auto _ : state)
    benchmark::DoNotOptimize(sixj_oracle(p));
}
BENCHMARK(BM_SixjOracleGl4);

} // namespace

BENCHMARK_MAIN();
