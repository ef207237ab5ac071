#include <benchmark/benchmark.h>

#include <random>

#include "octo/cayley_dickson.hpp"
#include "octo/characters.hpp"
#include "octo/linalg.hpp"
#include "octo/matrix_lie.hpp"
#include "octo/root_system.hpp"

namespace {

octo::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    octo::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = octo::Rational(num(rng), den(rng));
    return m;
}

void bm_rank_64x64(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const octo::Matrix m = random_matrix(rng, 64, 64);
    for (auto _ : state)
        benchmark::DoNotOptimize(octo::rank(m));
}
BENCHMARK(bm_rank_64x64);

void bm_octonion_multiply(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-9, 9);
    octo::Vec xs(8), ys(8);
    for (int i = 0; i < 8; ++i) {
        xs[i] = coeff(rng);
        ys[i] = coeff(rng);
    }
    const octo::CDElement x(3, xs), y(3, ys);
    for (auto _ : state)
        benchmark::DoNotOptimize(octo::cd_multiply(x, y));
}
BENCHMARK(bm_octonion_multiply);

void bm_derivation_algebra_octonions(benchmark::State& state) {
    const octo::StructureConstants s = octo::structure_constants(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(octo::derivation_algebra(s).dim());
}
BENCHMARK(bm_derivation_algebra_octonions);

void bm_freudenthal_b4_128(benchmark::State& state) {
    const octo::RootSystem b4 = octo::build_root_system('B', 4);
    for (auto _ : state) {
        // bypass the cache to measure the recursion itself
        const octo::Weight hw{3, 1, 1, 1};
        benchmark::DoNotOptimize(octo::weyl_dim(b4, hw));
        benchmark::DoNotOptimize(octo::irrep_character(b4, hw).size());
    }
}
BENCHMARK(bm_freudenthal_b4_128);

void bm_alt_power_16_choose_8(benchmark::State& state) {
    const octo::RootSystem d5 = octo::build_root_system('D', 5);
    const octo::WeightMultiset& spin16 =
        octo::irrep_character(d5, octo::half_spin_highest_weight(d5, +1));
    for (auto _ : state)
        benchmark::DoNotOptimize(octo::alt_power(spin16, 8).size());
}
BENCHMARK(bm_alt_power_16_choose_8);

void bm_weyl_enumerate_f4(benchmark::State& state) {
    const octo::RootSystem f4 = octo::build_root_system('F', 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(octo::weyl_enumerate(f4).to_ulong());
}
BENCHMARK(bm_weyl_enumerate_f4);

} // namespace

BENCHMARK_MAIN();
