#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace siegel {

using Rational = mpq_class;
using BigInt = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }

// mpq_class(p, q) does not canonicalize; this does.
inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);
Rational rational_from_string(const std::string& s);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

// Bernoulli number B_k (B_1 = -1/2 convention).
Rational bernoulli(unsigned k);

// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), returned as the
// rational r with zeta(2k) = r * pi^{2k}.
Rational zeta_even_rational_part(unsigned k);

// ---------------------------------------------------------------------------
// Gaussian rationals a + b i.

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(int r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n2 = o.norm2();
        if (n2 == 0) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = *this;
        num *= o.conj();
        re = num.re / n2;
        im = num.im / n2;
        return *this;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

GaussianRational gauss_pow(const GaussianRational& z, long k);

// i^k for integer k (k may be negative).
GaussianRational i_pow(long k);

// e^{pi i q} for rational q, exact when q has denominator 1, 2 or 4;
// throws otherwise.  Covers every root of unity the exact checks need.
GaussianRational exact_unit_phase(const Rational& q);

// True iff e^{pi i q} = 1, i.e. q is an even integer.
bool phase_is_one(const Rational& q);

std::string to_string(const GaussianRational& z);

// ---------------------------------------------------------------------------
// The exact scalar ring Q(i)[pi^{1/2}, pi^{-1/2}, sqrt(d), e^{pi q}].
//
// A term is q0 * pi^{k/2} * sqrt(d) * e^{pi r} with q0 Gaussian rational, k
// integer, d a squarefree positive integer and r rational.  Gaussian moments,
// Hermite normalizations, ladder coefficients and the decay factors coming
// from complex linear exponents all land here, so orthonormality and unitarity
// statements become exact identities.

struct SymbolicKey {
    int half_pi_pow = 0;   // exponent of pi^{1/2}
    std::uint64_t rad = 1; // squarefree radicand under the square root
    Rational exp_pi = 0;   // r in the factor e^{pi r}

    bool operator<(const SymbolicKey& o) const {
        if (half_pi_pow != o.half_pi_pow) return half_pi_pow < o.half_pi_pow;
        if (rad != o.rad) return rad < o.rad;
        return exp_pi < o.exp_pi;
    }
    bool operator==(const SymbolicKey& o) const {
        return half_pi_pow == o.half_pi_pow && rad == o.rad && exp_pi == o.exp_pi;
    }
};

class SymbolicScalar {
  public:
    SymbolicScalar() = default;
    SymbolicScalar(const GaussianRational& q) {
        if (!q.is_zero()) terms_[SymbolicKey{}] = q;
    }
    SymbolicScalar(const Rational& q) : SymbolicScalar(GaussianRational(q)) {}
    SymbolicScalar(long q) : SymbolicScalar(GaussianRational(q)) {}
    SymbolicScalar(int q) : SymbolicScalar(GaussianRational(q)) {}

    static SymbolicScalar i() { return SymbolicScalar(GaussianRational::i()); }
    // q * pi^{halfPiPow/2}
    static SymbolicScalar pi_half_pow(int half_pi_pow, GaussianRational q = GaussianRational(1));
    // sqrt of a positive rational, exact: sqrt(p/q) = sqrt(pq)/q.
    static SymbolicScalar sqrt_rational(const Rational& r);
    // e^{pi r} for rational r.
    static SymbolicScalar exp_pi(const Rational& r, GaussianRational q = GaussianRational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Throws unless the value lies in Q(i).
    GaussianRational rational_value() const;

    SymbolicScalar operator-() const;
    SymbolicScalar& operator+=(const SymbolicScalar& o);
    SymbolicScalar& operator-=(const SymbolicScalar& o);
    SymbolicScalar operator*(const SymbolicScalar& o) const;
    SymbolicScalar& operator*=(const SymbolicScalar& o) { return *this = *this * o; }

    // Division by a single-term scalar (all our divisors are).
    SymbolicScalar operator/(const SymbolicScalar& o) const;

    SymbolicScalar conj() const;

    std::complex<double> to_complex() const;
    std::string str() const;

    const std::map<SymbolicKey, GaussianRational>& terms() const { return terms_; }
    static SymbolicScalar from_terms(std::map<SymbolicKey, GaussianRational> t);

  private:
    std::map<SymbolicKey, GaussianRational> terms_;
};

inline SymbolicScalar operator+(SymbolicScalar a, const SymbolicScalar& b) { return a += b; }
inline SymbolicScalar operator-(SymbolicScalar a, const SymbolicScalar& b) { return a -= b; }
bool operator==(const SymbolicScalar& a, const SymbolicScalar& b);
inline bool operator!=(const SymbolicScalar& a, const SymbolicScalar& b) { return !(a == b); }

} // namespace siegel
