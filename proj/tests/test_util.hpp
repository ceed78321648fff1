#pragma once

#include <random>

#include "siegel/foundation.hpp"
#include "siegel/symplectic.hpp"
#include "siegel/weil.hpp"

namespace testutil {

using namespace siegel;

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

// random symmetric with entries in [-1, 1]
inline RMat random_sym(std::mt19937_64& g, int n, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    RMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = d(g);
    return m;
}

// random point of H_n: X random symmetric, Y = I + 0.3 * sym (diag-dominant)
inline SiegelPoint random_siegel(std::mt19937_64& g, int n, double xscale = 1.0) {
    RMat x = random_sym(g, n, xscale);
    RMat y = RMat::Identity(n, n) + 0.3 * random_sym(g, n);
    std::uniform_real_distribution<double> d(0.5, 2.0);
    y *= d(g);
    return SiegelPoint(x.cast<cplx>() + cplx(0.0, 1.0) * y.cast<cplx>());
}

// random symplectic with exactly representable entries: a word in generators
// t_b (dyadic b), d_a (integer unimodular a), sigma_n
inline SymplecticMatrix random_symplectic(std::mt19937_64& g, int n, int len = 4) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> ival(-2, 2);
    SymplecticMatrix m = SymplecticMatrix::identity(n);
    for (int t = 0; t < len; ++t) {
        switch (kind(g)) {
            case 0: {
                RMat b(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j) b(i, j) = b(j, i) = 0.5 * ival(g);
                m = m * SymplecticMatrix::translation(b);
                break;
            }
            case 1: {
                // unimodular integer a: product of elementary shear and sign flips
                RMat a = RMat::Identity(n, n);
                if (n > 1) {
                    int i = std::uniform_int_distribution<int>(0, n - 1)(g);
                    int j = std::uniform_int_distribution<int>(0, n - 1)(g);
                    if (i != j) a(i, j) = ival(g);
                }
                a(0, 0) *= (ival(g) >= 0 ? 1.0 : -1.0);
                m = m * SymplecticMatrix::dilation(a);
                break;
            }
            default:
                m = m * SymplecticMatrix::inversion(n);
        }
    }
    return m;
}

inline GeneratorWord random_word(std::mt19937_64& g, int n, int len) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> ival(-2, 2);
    GeneratorWord w;
    for (int t = 0; t < len; ++t) {
        switch (kind(g)) {
            case 0: {
                RMat b(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j) b(i, j) = b(j, i) = 0.5 * ival(g);
                w.push_back(GenTranslation{b});
                break;
            }
            case 1: {
                RMat a = RMat::Identity(n, n);
                if (n > 1) {
                    int i = std::uniform_int_distribution<int>(0, n - 1)(g);
                    int j = std::uniform_int_distribution<int>(0, n - 1)(g);
                    if (i != j) a(i, j) = ival(g);
                }
                a(0, 0) *= (ival(g) >= 0 ? 1.0 : -1.0);
                w.push_back(GenDilation{a});
                break;
            }
            default:
                w.push_back(GenInversion{});
        }
    }
    return w;
}

// random Gaussian-rational Siegel point with small denominators
inline ExactSiegelPoint random_exact_siegel(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<int> num(-3, 3);
    GaussMat om(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rational re = ratio(num(g), 2);
            Rational im = (i == j) ? ratio(num(g) + 5, 2) : ratio(num(g), 8);
            om(i, j) = om(j, i) = GaussianRational(re, im);
        }
    }
    return ExactSiegelPoint(om);
}

inline RatMat random_int_mat(std::mt19937_64& g, int rows, int cols, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rational(d(g));
    return m;
}

inline RatMat random_rat_mat(std::mt19937_64& g, int rows, int cols, int den = 4) {
    std::uniform_int_distribution<int> d(-3 * den, 3 * den);
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = ratio(d(g), den);
    return m;
}

} // namespace testutil
