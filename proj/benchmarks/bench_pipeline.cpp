#include <benchmark/benchmark.h>

#include "cyctan/chern.hpp"
#include "cyctan/tangent.hpp"

using namespace cyctan;

namespace {

DeformationScene running_example(std::size_t p) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= p; ++i) names.push_back("x" + std::to_string(i + 1));
    auto R = make_ring(names);
    DeformationScene s;
    s.ring = R;
    s.p = p;
    for (std::size_t i = 0; i < p; ++i) s.f.push_back(Poly::variable(R, i));
    s.g.push_back(Frac(Poly(R, Rational(1)), Poly::variable(R, p)));
    for (std::size_t i = 1; i < p; ++i) s.g.push_back(Frac::zero(R));
    s.extension = Poly::variable(R, p);
    return s;
}

}  // namespace

static void PiClosedForm(benchmark::State& state) {
    auto s = running_example(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto cls = pi(s);
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(PiClosedForm)->Arg(2)->Arg(3)->Arg(4);

static void PiWithOracle(benchmark::State& state) {
    auto s = running_example(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto cls = pi(s, PiOptions{true});
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(PiWithOracle)->Arg(2)->Arg(3);

static void FundamentalClassBrute(benchmark::State& state) {
    std::size_t p = static_cast<std::size_t>(state.range(0));
    auto s = running_example(p);
    std::vector<DualFrac> lifted;
    for (std::size_t i = 0; i < p; ++i) lifted.emplace_back(Frac(s.f[i]), s.g[i]);
    auto k = build_koszul(s.ring, lifted);
    for (auto _ : state) {
        auto fc = fundamental_class(k);
        benchmark::DoNotOptimize(fc);
    }
}
BENCHMARK(FundamentalClassBrute)->Arg(2)->Arg(3)->Arg(4);

static void CorrectEndToEnd(benchmark::State& state) {
    auto s = running_example(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = correct(s);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(CorrectEndToEnd)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
