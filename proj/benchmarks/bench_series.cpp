#include <benchmark/benchmark.h>

#include <laft/expr_io.hpp>
#include <laft/fourier.hpp>
#include <laft/operator_lab.hpp>
#include <laft/series_compose.hpp>

using namespace laft;

namespace
{

RationalSeries dense(long terms)
{
    RationalField field;
    RationalSeries f(field, Var::z);
    for (long e = 1; e <= terms; ++e) {
        f.add_term(Rational(e), make_rational(e % 5 + 1, e % 3 + 1));
    }
    return f;
}

void BM_Multiply(benchmark::State &state)
{
    const auto f = dense(state.range(0));
    const auto g = dense(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(32)->Arg(128);

void BM_CompInverse(benchmark::State &state)
{
    const auto j = dense(6);
    const ExtRational trunc(Rational(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(comp_inverse(j, Var::zhat, trunc));
    }
}
BENCHMARK(BM_CompInverse)->Arg(6)->Arg(12)->Arg(24);

void BM_Fourier0Inf(benchmark::State &state)
{
    const auto f = parse_series<RationalField>("-4*z^-1 + 3/2", Var::z);
    const auto cls = normalize(f, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier_0_inf(cls));
    }
}
BENCHMARK(BM_Fourier0Inf);

void BM_FourierInfInfComplex(benchmark::State &state)
{
    const ComplexField field(static_cast<mpfr_prec_t>(state.range(0)));
    const auto f = parse_series("2*zeta^(-5/3) + zeta^(-4/3) + 1/2", Var::zeta, field);
    const auto cls = normalize(f, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier_inf_inf(cls));
    }
}
BENCHMARK(BM_FourierInfInfComplex)->Arg(128)->Arg(512);

void BM_FractionalRoot(benchmark::State &state)
{
    RationalField field;
    RationalSeries m(field, Var::z);
    m.add_term(Rational(0), Rational(1));
    m.add_term(Rational(1), Rational(1));
    const auto p_op = GradedOperator::multiplication(m, 1) + GradedOperator::derivation(2, 1);
    const auto comps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fractional_root(p_op, 2, comps));
    }
}
BENCHMARK(BM_FractionalRoot)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
