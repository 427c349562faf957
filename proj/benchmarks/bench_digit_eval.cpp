#include <benchmark/benchmark.h>

#include <cmath>

#include "fractel/digit_eval.hpp"
#include "fractel/local_ifs.hpp"

namespace {

const std::vector<double> kCubic{1.0, 3.0, 2.0, 1.0};
const std::vector<double> kSextic{1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0};

void BM_HornerCubic(benchmark::State& state) {
  double x = 1.23;
  for (auto _ : state) {
    benchmark::DoNotOptimize(x);
    benchmark::DoNotOptimize(fractel::horner(kCubic, x));
  }
}
BENCHMARK(BM_HornerCubic);

void BM_DigitIfsCubic(benchmark::State& state) {
  const auto x = fractel::DigitNumber::parse("1.23");
  for (auto _ : state) benchmark::DoNotOptimize(fractel::eval_digits_f64(kCubic, x).value());
}
BENCHMARK(BM_DigitIfsCubic);

void BM_DigitIfsSexticDigits(benchmark::State& state) {
  std::string text = "1.";
  for (int i = 1; i < state.range(0); ++i) text += static_cast<char>('0' + (i * 7) % 10);
  const auto x = fractel::DigitNumber::parse(text);
  for (auto _ : state) benchmark::DoNotOptimize(fractel::eval_digits_f64(kSextic, x).value());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DigitIfsSexticDigits)->RangeMultiplier(2)->Range(2, 64)->Complexity(benchmark::oN);

void BM_DigitExactCubic(benchmark::State& state) {
  const fractel::RationalVector c{1, 3, 2, 1};
  const auto x = fractel::DigitNumber::parse("1.23");
  for (auto _ : state) benchmark::DoNotOptimize(fractel::eval_digits_exact(c, x).value());
}
BENCHMARK(BM_DigitExactCubic);

void BM_SqrtPointwise(benchmark::State& state) {
  const auto ifs = fractel::build_sqrt_ifs(0.5, 0.5, fractel::SqrtMode::Midpoint);
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fractel::evaluate_fixed_point(ifs, x));
    x = x > 0.9 ? 0.01 : x + 0.0137;
  }
}
BENCHMARK(BM_SqrtPointwise);

}  // namespace
BENCHMARK_MAIN();
