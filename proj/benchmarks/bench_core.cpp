#include <benchmark/benchmark.h>

#include "fo52/euler.hpp"
#include "fo52/fobracket.hpp"
#include "fo52/grassmann.hpp"
#include "fo52/multivector.hpp"
#include "fo52/prng.hpp"
#include "fo52/qmat.hpp"

using namespace fo52;

namespace {

QMat random_mat(std::uint64_t seed, std::size_t r, std::size_t c) {
    Prng rng(seed);
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(rng.uniform(-9, 9));
    return m;
}

PolyMultivector random_quadratic_bivector(std::uint64_t seed) {
    Prng rng(seed);
    PolyMultivector p(2, 2);
    const MonoTable& monos = MonoTable::get(2);
    for (ExtMask m : ExtBasis::get(5, 2).masks()) {
        Poly c;
        for (const Exp& e : monos.list) c.add_term(e, Rat(rng.uniform(-9, 9)));
        p.set_component(m, c);
    }
    return p;
}

void bm_rref(benchmark::State& state) {
    const QMat m = random_mat(1, 60, 150);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->Unit(benchmark::kMillisecond);

void bm_kernel(benchmark::State& state) {
    const QMat m = random_mat(2, 60, 150);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(bm_kernel)->Unit(benchmark::kMillisecond);

void bm_schouten(benchmark::State& state) {
    const PolyMultivector p = random_quadratic_bivector(3);
    const PolyMultivector q = random_quadratic_bivector(4);
    for (auto _ : state) benchmark::DoNotOptimize(schouten_bracket(p, q));
}
BENCHMARK(bm_schouten)->Unit(benchmark::kMillisecond);

void bm_euler_reduce_g3(benchmark::State& state) {
    const PolyMultivector t =
        schouten_bracket(random_quadratic_bivector(5), random_quadratic_bivector(6));
    const EulerReducer& r3 = EulerReducer::for_grade(3);
    for (auto _ : state) benchmark::DoNotOptimize(euler_reduce(t, r3));
}
BENCHMARK(bm_euler_reduce_g3)->Unit(benchmark::kMillisecond);

void bm_bracket_build(benchmark::State& state) {
    const Fixture fx = make_fixture(1);
    for (auto _ : state) benchmark::DoNotOptimize(build_bracket_orthogonality(fx.w));
}
BENCHMARK(bm_bracket_build)->Unit(benchmark::kMillisecond);

void bm_rank_at(benchmark::State& state) {
    const Fixture fx = make_fixture(1);
    const FOBracket br = build_bracket_orthogonality(fx.w);
    const std::vector<Rat> x{Rat(1), Rat(2), Rat(-1), Rat(3), Rat(1)};
    for (auto _ : state) benchmark::DoNotOptimize(rank_at(br, x));
}
BENCHMARK(bm_rank_at)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
