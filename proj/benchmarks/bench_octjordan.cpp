#include <benchmark/benchmark.h>

#include <random>

#include <octjordan/oracle.hpp>
#include <octjordan/solver.hpp>

using namespace octjordan;

namespace {

Scalar rand_scalar(std::mt19937_64& rng, bool quadext) {
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    Rational rat(num(rng), den(rng));
    if (!quadext) return Scalar(rat);
    return Scalar::quadext(rat, Rational(num(rng), den(rng)));
}

Octonion rand_octonion(std::mt19937_64& rng, bool quadext) {
    Octonion o;
    for (std::size_t r = 0; r < 8; ++r) o.coeff(r) = rand_scalar(rng, quadext);
    return o;
}

GenericImaginaryVector rand_vector(std::mt19937_64& rng) {
    const auto nonzero = [&] {
        Scalar s;
        do {
            s = rand_scalar(rng, false);
        } while (s.is_zero());
        return s;
    };
    return GenericImaginaryVector(nonzero(), rand_scalar(rng, false), nonzero(),
                                  rand_scalar(rng, false), rand_scalar(rng, false),
                                  rand_scalar(rng, false), nonzero());
}

void BM_OctonionMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const bool quadext = state.range(0) != 0;
    const Octonion a = rand_octonion(rng, quadext);
    const Octonion b = rand_octonion(rng, quadext);
    for (auto _ : state) {
        Octonion c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_OctonionMul)->Arg(0)->Arg(1);

void BM_Associator(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Octonion a = rand_octonion(rng, false);
    const Octonion b = rand_octonion(rng, false);
    const Octonion c = rand_octonion(rng, false);
    for (auto _ : state) {
        Octonion d = associator(a, b, c);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Associator);

void BM_SolverConstruct(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const GenericImaginaryVector v = rand_vector(rng);
    const SolverParams params{rand_scalar(rng, false), rand_scalar(rng, false),
                              rand_scalar(rng, false), rand_scalar(rng, false),
                              rand_scalar(rng, false), rand_scalar(rng, false)};
    for (auto _ : state) {
        JordanMatrix A = construct(v, params);
        benchmark::DoNotOptimize(A);
    }
}
BENCHMARK(BM_SolverConstruct);

void BM_OracleSolve(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const GenericImaginaryVector v = rand_vector(rng);
    const auto sys = oracle::build_system(v.to_vector(), v.associator());
    for (auto _ : state) {
        AffineSolutionSet sol = oracle::solve(sys);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_OracleSolve);

} // namespace

BENCHMARK_MAIN();
