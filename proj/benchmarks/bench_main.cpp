#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>

#include "qauth/analytics.hpp"
#include "qauth/bch.hpp"
#include "qauth/protocol.hpp"
#include "qauth/verify.hpp"

using namespace qauth;

namespace {

// Received words: random codeword plus a weight-t error, cycled through.
std::vector<BitWord> noisy_words(const LinearCode& code, std::size_t count) {
  RandomStream rng(1);
  std::vector<std::size_t> pos(code.n());
  std::vector<BitWord> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto w = code.encode(BitWord::random(code.m(), rng));
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    for (std::size_t k = 0; k < code.t(); ++k) w.flip(pos[k]);
    out.push_back(std::move(w));
  }
  return out;
}

void BM_DecodeBounded(benchmark::State& state) {
  const auto& p = table1_bch_params()[static_cast<std::size_t>(state.range(0))];
  const auto code = build_bch(p.w, p.t);
  const auto words = noisy_words(code, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.decode_bounded(words[i++ % words.size()]));
  }
  state.SetLabel(code.name());
}
BENCHMARK(BM_DecodeBounded)->DenseRange(0, 7);

void BM_BuildBch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_bch(7, 23));
}
BENCHMARK(BM_BuildBch)->Unit(benchmark::kMillisecond);

void BM_PfPrime(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(p_f_prime(n, t));
}
BENCHMARK(BM_PfPrime)->Args({63, 10})->Args({127, 23})->Unit(benchmark::kMicrosecond);

void BM_HonestSession(benchmark::State& state) {
  const auto code = state.range(0) == 0 ? make_hamming_7_4() : build_bch(6, 10);
  const RandomStream root(3);
  const BitWord msg(code.m());
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_session(msg, code, nullptr, root.substream(i++)));
  state.SetLabel(code.name());
}
BENCHMARK(BM_HonestSession)->Arg(0)->Arg(1);

void BM_InterceptResendSession(benchmark::State& state) {
  const auto code = build_bch(7, 23);
  const InterceptResendAdversary eve(InterceptResendStrategy{BitWord::ones(code.m())});
  const RandomStream root(4);
  const BitWord msg(code.m());
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_session(msg, code, &eve, root.substream(i++)));
}
BENCHMARK(BM_InterceptResendSession);

void BM_OracleInterceptResend(benchmark::State& state) {
  const auto code = make_hamming_7_4();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_intercept_resend(code));
}
BENCHMARK(BM_OracleInterceptResend)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
