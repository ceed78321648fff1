#include <benchmark/benchmark.h>

#include <random>

#include "siegel/harmonic.hpp"
#include "siegel/hermite.hpp"
#include "siegel/symplectic.hpp"
#include "siegel/theta.hpp"
#include "siegel/weil.hpp"

using namespace siegel;

namespace {

SiegelPoint sample_point(int n, double yscale) {
    RMat x = 0.3 * RMat::Ones(n, n);
    RMat y = yscale * RMat::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) y(i, i + 1) = y(i + 1, i) = 0.2 * yscale;
    return SiegelPoint(x.cast<cplx>() + cplx(0.0, 1.0) * y.cast<cplx>());
}

} // namespace

static void ThetaScalar(benchmark::State& state) {
    double tail = std::pow(10.0, -static_cast<double>(state.range(0)));
    RMat s(1, 1);
    s << 1.0;
    TruncationPolicy pol;
    pol.target_tail = tail;
    ThetaSpec spec(s, RMat::Zero(1, 1), RMat::Zero(1, 1), pol);
    SiegelPoint om = sample_point(1, 1.0);
    for (auto _ : state) {
        LatticeSumResult r = theta_char(spec, om, CMat::Zero(1, 1));
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(ThetaScalar)->Arg(8)->Arg(12)->Arg(16);

static void ThetaMatrixCase(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    RMat s(2, 2);
    s << 2, 1, 1, 2;
    ThetaSpec spec(s, 0.25 * RMat::Ones(2, n), RMat::Zero(2, n));
    SiegelPoint om = sample_point(n, 0.8);
    CMat w = 0.2 * CMat::Ones(2, n);
    for (auto _ : state) {
        LatticeSumResult r = theta_char(spec, om, w);
        benchmark::DoNotOptimize(r.value);
        state.counters["terms"] = static_cast<double>(r.terms);
    }
}
BENCHMARK(ThetaMatrixCase)->Arg(1)->Arg(2);

static void ThetaE8Ellipsoid(benchmark::State& state) {
    RMat s = e8_gram();
    SiegelPoint om = sample_point(1, 0.1 * state.range(0));
    for (auto _ : state) {
        LatticeSumResult r = theta_series(s, om);
        benchmark::DoNotOptimize(r.value);
        state.counters["terms"] = static_cast<double>(r.terms);
    }
}
BENCHMARK(ThetaE8Ellipsoid)->Arg(10)->Arg(5)->Arg(3);

static void DeltaOne(benchmark::State& state) {
    SiegelPoint om = sample_point(1, 1.3);
    for (auto _ : state) benchmark::DoNotOptimize(delta_n(om).value);
}
BENCHMARK(DeltaOne);

static void HermiteLadder(benchmark::State& state) {
    MultiIndex j(2, 1);
    j(0, 0) = static_cast<unsigned>(state.range(0));
    j(1, 0) = 1;
    for (auto _ : state) benchmark::DoNotOptimize(hermite_h(j).p.term_count());
}
BENCHMARK(HermiteLadder)->Arg(2)->Arg(4)->Arg(8);

static void HermiteInnerProduct(benchmark::State& state) {
    MultiIndex j(1, 1);
    j(0, 0) = static_cast<unsigned>(state.range(0));
    GaussianPolynomialState h = hermite_h(j);
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_inner(h, h).is_zero());
}
BENCHMARK(HermiteInnerProduct)->Arg(2)->Arg(4)->Arg(6);

static void HarmonicDims(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    RatMat s = RatMat::identity(3) * Rational(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dim_pluriharmonic(s, 3, 2, d));
        benchmark::DoNotOptimize(dim_ideal(s, 3, 2, d));
    }
}
BENCHMARK(HarmonicDims)->Arg(4)->Arg(5)->Arg(6);

static void MaslovTriple(benchmark::State& state) {
    std::mt19937_64 g(7);
    int n = static_cast<int>(state.range(0));
    std::vector<LagrangianSubspace> ls;
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 3; ++t) {
        RMat x(n, n), y(n, n);
        for (int i = 0; i < n; ++i)
            for (int jj = i; jj < n; ++jj) {
                x(i, jj) = x(jj, i) = d(g);
                y(i, jj) = y(jj, i) = 0.2 * d(g);
            }
        y += RMat::Identity(n, n);
        // rows (I, X) of a symmetric X span a Lagrangian
        RMat basis(n, 2 * n);
        basis.leftCols(n) = RMat::Identity(n, n);
        basis.rightCols(n) = x + t * y;
        ls.emplace_back(basis);
    }
    for (auto _ : state) benchmark::DoNotOptimize(maslov_index(ls[0], ls[1], ls[2]));
}
BENCHMARK(MaslovTriple)->Arg(1)->Arg(2)->Arg(4);

static void CovarianceWord(benchmark::State& state) {
    GaussMat om(2, 2);
    om(0, 0) = GaussianRational(ratio(1, 2), ratio(5, 2));
    om(1, 1) = GaussianRational(ratio(-1, 2), ratio(3, 2));
    om(0, 1) = om(1, 0) = GaussianRational(ratio(1, 4), ratio(1, 8));
    ExactSiegelPoint ep(om);
    RMat b(2, 2);
    b << 1.0, 0.5, 0.5, -1.0;
    RMat a = RMat::Identity(2, 2);
    a(0, 1) = 2.0;
    GeneratorWord w{GenInversion{}, GenTranslation{b}, GenDilation{a}, GenInversion{}};
    for (auto _ : state) {
        CovarianceCheck c = covariance_check(w, ep, 2);
        benchmark::DoNotOptimize(c.ratio_squared_one);
    }
}
BENCHMARK(CovarianceWord);

BENCHMARK_MAIN();
