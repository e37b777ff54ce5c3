/*
   Copyright 2026 the stabcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <vector>

#include "stabcert/certify.hpp"
#include "stabcert/cyclotomic.hpp"
#include "stabcert/ess.hpp"
#include "stabcert/sumset.hpp"

using namespace stabcert;

namespace {

std::vector<Int> interval(int lo, int hi) {
    std::vector<Int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

void BM_CertifyFibonacci(benchmark::State& state) {
    const RecurrenceSpec fib{{1, 1}, {0, 1}};
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_recurrence(fib));
}
BENCHMARK(BM_CertifyFibonacci);

void BM_CyclotomicFactors(benchmark::State& state) {
    Poly p = Poly::constant(1);
    for (unsigned long d = 1; d <= static_cast<unsigned long>(state.range(0));
         ++d)
        p = p * cyclotomic_poly(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(cyclotomic_factors(p));
}
BENCHMARK(BM_CyclotomicFactors)->Arg(4)->Arg(8)->Arg(12);

void BM_EnumerateSolutions(benchmark::State& state) {
    const auto values = interval(1, static_cast<int>(state.range(0)));
    SignedQuery q;
    q.coefficients = {1, 1, 1, 1};
    q.target = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_solutions(values, q));
}
BENCHMARK(BM_EnumerateSolutions)->Arg(50)->Arg(200)->Arg(800);

void BM_EssProfile(benchmark::State& state) {
    const auto values = interval(1, static_cast<int>(state.range(0)));
    const std::vector<std::set<Int>> u = {{Int(0)}, {Int(0)}, {Int(0)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(ess_profile(values, 3, u, u));
}
BENCHMARK(BM_EssProfile)->Arg(100)->Arg(400);

void BM_SumsetAp(benchmark::State& state) {
    std::vector<Int> pow2;
    Int p = 1;
    for (int i = 0; i <= state.range(0); ++i) {
        pow2.push_back(p);
        p *= 2;
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(sumset_ap(pow2, 2, 600));
}
BENCHMARK(BM_SumsetAp)->Arg(8)->Arg(12);

void BM_KeplerProfile(benchmark::State& state) {
    const auto prefix =
        eval_recurrence({{1, 1}, {0, 1}}, static_cast<size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kepler_profile(prefix, 16));
}
BENCHMARK(BM_KeplerProfile)->Arg(60)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
