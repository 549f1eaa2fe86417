#include <benchmark/benchmark.h>

#include "cyctan/ideal.hpp"

using namespace cyctan;

namespace {

RingPtr ring3() { return make_ring({"x1", "x2", "x3"}); }

std::vector<Poly> cyclic3(const RingPtr& R) {
    return {parse_poly(R, "x1 + x2 + x3"),
            parse_poly(R, "x1*x2 + x2*x3 + x3*x1"),
            parse_poly(R, "x1*x2*x3 - 1")};
}

}  // namespace

static void GroebnerLinear(benchmark::State& state) {
    auto R = ring3();
    std::vector<Poly> gens{parse_poly(R, "x1"), parse_poly(R, "x2"), parse_poly(R, "x3")};
    for (auto _ : state) {
        auto gb = groebner(R, gens);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(GroebnerLinear);

static void GroebnerCyclic3(benchmark::State& state) {
    auto R = ring3();
    auto gens = cyclic3(R);
    for (auto _ : state) {
        auto gb = groebner(R, gens);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(GroebnerCyclic3);

static void IdealMembership(benchmark::State& state) {
    auto R = ring3();
    Ideal I(R, cyclic3(R));
    Poly probe = parse_poly(R, "x1^3*x2 - x2*x3 + x1");
    I.basis();  // warm the cache; measure division + cofactor composition
    for (auto _ : state) {
        auto m = ideal_member(probe, I);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(IdealMembership);

static void IdealQuotient(benchmark::State& state) {
    auto R = ring3();
    for (auto _ : state) {
        Ideal I(R, {parse_poly(R, "x1*x2"), parse_poly(R, "x2*x3")});
        auto q = ideal_quotient(I, parse_poly(R, "x2"));
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(IdealQuotient);

static void CheckRegularVariables(benchmark::State& state) {
    auto R = ring3();
    std::vector<Poly> seq{parse_poly(R, "x1"), parse_poly(R, "x2"), parse_poly(R, "x3")};
    for (auto _ : state) {
        auto rep = check_regular(seq);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(CheckRegularVariables);
