#include "siegel/scalars.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <vector>

namespace siegel {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

Rational rational_from_string(const std::string& s) {
    // Accepts "p/q", integers, and decimal literals like "-1.25" or "2e-3".
    if (s.find('/') != std::string::npos) {
        Rational q(s);
        q.canonicalize();
        return q;
    }
    std::string t = s;
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(t.substr(epos + 1));
        t = t.substr(0, epos);
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(t.size() - dot - 1);
        t.erase(dot, 1);
    }
    if (t.empty() || t == "-" || t == "+") throw std::invalid_argument("bad rational literal: " + s);
    Rational q(BigInt(t), BigInt(1));
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
        q *= Rational(p10);
    else
        q /= Rational(p10);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational bernoulli(unsigned k) {
    // sum_{j<=m} C(m+1, j) B_j = 0 for m >= 1, so
    // B_m = -(1/(m+1)) sum_{j<m} C(m+1, j) B_j  (B_1 = -1/2 convention)
    static std::vector<Rational> cache{Rational(1)};
    while (cache.size() <= k) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rational s(0);
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[k];
}

Rational zeta_even_rational_part(unsigned k) {
    if (k == 0) throw std::domain_error("zeta_even_rational_part: k must be >= 1");
    Rational b = bernoulli(2 * k);
    Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
    return sign * b * Rational(two_pow) / (Rational(2) * Rational(factorial(2 * k)));
}

GaussianRational gauss_pow(const GaussianRational& z, long k) {
    if (k < 0) {
        GaussianRational inv = GaussianRational(1) / z;
        return gauss_pow(inv, -k);
    }
    GaussianRational r(1), base = z;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

GaussianRational i_pow(long k) {
    long r = ((k % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

GaussianRational exact_unit_phase(const Rational& q) {
    Rational r = q;
    // reduce mod 2
    BigInt num = r.get_num(), den = r.get_den();
    BigInt twice_den = 2 * den;
    BigInt red;
    mpz_mod(red.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
    Rational m(red, den);
    m.canonicalize();
    // m in [0,2); exact for denominators 1, 2, 4
    BigInt d = m.get_den();
    if (d == 1) {
        return (m == 0) ? GaussianRational(1) : GaussianRational(-1);
    }
    if (d == 2) {
        // e^{pi i/2} = i, e^{3 pi i/2} = -i
        return (m.get_num() % 4 == 1) ? GaussianRational::i() : -GaussianRational::i();
    }
    if (d == 4) {
        // e^{pi i k/4}: not Gaussian rational (involves sqrt 2)
        throw std::domain_error("exact_unit_phase: eighth roots of unity are not Gaussian rational");
    }
    throw std::domain_error("exact_unit_phase: exponent denominator not in {1,2}");
}

bool phase_is_one(const Rational& q) {
    if (q.get_den() != 1) return false;
    return q.get_num() % 2 == 0;
}

std::string to_string(const GaussianRational& z) {
    std::ostringstream os;
    os << z.re.get_str();
    if (z.im != 0) os << (z.im > 0 ? "+" : "") << z.im.get_str() << "i";
    return os.str();
}

// ---------------------------------------------------------------------------
// SymbolicScalar

namespace {

// factor out the largest square: n = s^2 * d with d squarefree; returns (s, d)
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
    std::uint64_t s = 1, d = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned j = 0; j + 1 < e; j += 2) s *= p;
        if (e % 2) d *= p;
    }
    d *= n; // leftover prime
    return {s, d};
}

} // namespace

SymbolicScalar SymbolicScalar::pi_half_pow(int half_pi_pow, GaussianRational q) {
    SymbolicScalar s;
    if (!q.is_zero()) s.terms_[SymbolicKey{half_pi_pow, 1}] = std::move(q);
    return s;
}

SymbolicScalar SymbolicScalar::exp_pi(const Rational& r, GaussianRational q) {
    SymbolicScalar s;
    if (!q.is_zero()) s.terms_[SymbolicKey{0, 1, r}] = std::move(q);
    return s;
}

SymbolicScalar SymbolicScalar::sqrt_rational(const Rational& r) {
    if (r <= 0) throw std::domain_error("sqrt_rational: argument must be positive");
    BigInt num = r.get_num(), den = r.get_den();
    BigInt nd = num * den;
    if (!nd.fits_ulong_p()) throw std::domain_error("sqrt_rational: radicand too large");
    auto [s, d] = squarefree_split(nd.get_ui());
    SymbolicScalar out;
    out.terms_[SymbolicKey{0, d}] = GaussianRational(Rational(BigInt(s), den));
    return out;
}

bool SymbolicScalar::is_rational() const {
    for (const auto& [k, v] : terms_)
        if (!(k == SymbolicKey{})) return false;
    return true;
}

GaussianRational SymbolicScalar::rational_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_rational()) throw std::domain_error("SymbolicScalar: value not in Q(i)");
    return terms_.begin()->second;
}

SymbolicScalar SymbolicScalar::operator-() const {
    SymbolicScalar r;
    for (const auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
}

SymbolicScalar& SymbolicScalar::operator+=(const SymbolicScalar& o) {
    for (const auto& [k, v] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SymbolicScalar& SymbolicScalar::operator-=(const SymbolicScalar& o) { return *this += -o; }

SymbolicScalar SymbolicScalar::operator*(const SymbolicScalar& o) const {
    SymbolicScalar r;
    for (const auto& [ka, va] : terms_) {
        for (const auto& [kb, vb] : o.terms_) {
            auto [s, d] = squarefree_split(ka.rad * kb.rad);
            SymbolicKey k{ka.half_pi_pow + kb.half_pi_pow, d, ka.exp_pi + kb.exp_pi};
            GaussianRational c = va * vb * GaussianRational(Rational(static_cast<long>(s)));
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_[k] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

SymbolicScalar SymbolicScalar::operator/(const SymbolicScalar& o) const {
    if (o.terms_.size() != 1)
        throw std::domain_error("SymbolicScalar: division only by single-term scalars");
    const auto& [k, v] = *o.terms_.begin();
    // 1/(q pi^{k/2} sqrt(d) e^{pi r}) = (1/(q d)) pi^{-k/2} sqrt(d) e^{-pi r}
    SymbolicScalar inv;
    inv.terms_[SymbolicKey{-k.half_pi_pow, k.rad, -k.exp_pi}] =
        GaussianRational(1) / (v * GaussianRational(Rational(static_cast<long>(k.rad))));
    return *this * inv;
}

SymbolicScalar SymbolicScalar::conj() const {
    SymbolicScalar r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v.conj();
    return r;
}

std::complex<double> SymbolicScalar::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double sqrt_pi = std::sqrt(M_PI);
    for (const auto& [k, v] : terms_) {
        double mag = std::pow(sqrt_pi, k.half_pi_pow) * std::sqrt(static_cast<double>(k.rad));
        mag *= std::exp(M_PI * k.exp_pi.get_d());
        z += v.to_complex() * mag;
    }
    return z;
}

std::string SymbolicScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v) << ")";
        if (k.half_pi_pow != 0) os << "*pi^(" << k.half_pi_pow << "/2)";
        if (k.rad != 1) os << "*sqrt(" << k.rad << ")";
        if (k.exp_pi != 0) os << "*exp(" << k.exp_pi.get_str() << "*pi)";
    }
    return os.str();
}

SymbolicScalar SymbolicScalar::from_terms(std::map<SymbolicKey, GaussianRational> t) {
    SymbolicScalar s;
    for (auto& [k, v] : t)
        if (!v.is_zero()) s.terms_[k] = std::move(v);
    return s;
}

bool operator==(const SymbolicScalar& a, const SymbolicScalar& b) {
    return a.terms() == b.terms();
}

} // namespace siegel
