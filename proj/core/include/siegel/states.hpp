#pragma once

#include <map>
#include <vector>

#include "siegel/exact_mat.hpp"
#include "siegel/foundation.hpp"
#include "siegel/heisenberg.hpp"
#include "siegel/multiindex.hpp"

namespace siegel {

// Sparse multivariate polynomial; exponent vectors are dense, length nvars.
template <class T>
class Polynomial {
  public:
    using Expo = std::vector<std::uint16_t>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const T& c) {
        Polynomial p(nvars);
        p.add_term(Expo(nvars, 0), c);
        return p;
    }
    static Polynomial variable(int nvars, int v, const T& c = T(1)) {
        Polynomial p(nvars);
        Expo e(nvars, 0);
        e[v] = 1;
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    size_t term_count() const { return terms_.size(); }
    const std::map<Expo, T>& terms() const { return terms_; }

    void add_term(const Expo& e, const T& c) {
        if (c == T(0)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == T(0)) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(a.nvars_);
                for (int v = 0; v < a.nvars_; ++v)
                    e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Polynomial scaled(const T& s) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, s * c);
        return r;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial derivative(int v) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Expo d = e;
            d[v] -= 1;
            r.add_term(d, c * T(static_cast<int>(e[v])));
        }
        return r;
    }

    // P(x + u)
    Polynomial shifted(const std::vector<T>& u) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(nvars_, c);
            for (int v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                Polynomial lin = Polynomial::variable(nvars_, v);
                lin.add_term(Expo(nvars_, 0), u[v]);
                for (int k = 0; k < e[v]; ++k) term = term * lin;
            }
            r += term;
        }
        return r;
    }

    // Substitute x_v -> subs[v] (a polynomial in any variable set).
    Polynomial substituted(const std::vector<Polynomial>& subs) const {
        int outvars = subs.empty() ? nvars_ : subs[0].nvars();
        Polynomial r(outvars);
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(outvars, c);
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[v]; ++k) term = term * subs[v];
            r += term;
        }
        return r;
    }

    template <class S, class Conv>
    Polynomial<S> convert(Conv f) const {
        Polynomial<S> r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    T eval(const std::vector<T>& x) const {
        T s(0);
        for (const auto& [e, c] : terms_) {
            T t = c;
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[v]; ++k) t *= x[v];
            s += t;
        }
        return s;
    }

  private:
    int nvars_;
    std::map<Expo, T> terms_;
};

using SymPoly = Polynomial<SymbolicScalar>;
using RatPoly = Polynomial<GaussianRational>;
using CPoly = Polynomial<cplx>;

CPoly to_cpoly(const RatPoly& p);
CPoly to_cpoly(const SymPoly& p);
cplx eval_cpoly(const CPoly& p, const std::vector<cplx>& x);

// ---------------------------------------------------------------------------
// Exact Gaussian-polynomial state on R^(m,n):
//   value(x) = P(x) * exp(2 pi i [sigma(c x Omega tx) + sigma(L tx) + s]).
// All exponent data is exact; P has coefficients in the symbolic scalar ring,
// so the Schroedinger action, ladder operators, Gaussian inner products and
// the Fourier transform are exact algebra.
struct GaussianPolynomialState {
    int m = 1, n = 1;
    RatMat c;      // positive symmetric m x m
    GaussMat omega; // symmetric n x n, Im > 0
    GaussMat lin;   // L, m x n
    GaussianRational s;
    SymPoly p; // in m*n variables, flattened (k,a) -> k*n + a

    GaussianPolynomialState() = default;
    GaussianPolynomialState(int m_, int n_, RatMat c_, GaussMat omega_, GaussMat lin_,
                            GaussianRational s_, SymPoly p_);

    int nvars() const { return m * n; }
    bool same_shape(const GaussianPolynomialState& o) const {
        return m == o.m && n == o.n && c == o.c;
    }

    cplx value_at(const RMat& x) const; // numeric evaluation
};

// Ground state f_0 = (sqrt 2)^{mn} e^{-2 pi |x|^2}: c = I_m, Omega = i I_n.
GaussianPolynomialState ground_state(int m, int n);

// Pure Gaussian exp(2 pi i sigma(c x Omega tx)) for given c, Omega.
GaussianPolynomialState pure_gaussian(int m, int n, RatMat c, GaussMat omega);

GaussianPolynomialState state_scale(const GaussianPolynomialState& f, const SymbolicScalar& a);
GaussianPolynomialState state_add(const GaussianPolynomialState& f,
                                  const GaussianPolynomialState& g); // same exponent data only
GaussianPolynomialState state_mul_coord(const GaussianPolynomialState& f, int k, int a);
GaussianPolynomialState state_derivative(const GaussianPolynomialState& f, int k, int a);
GaussianPolynomialState state_shift_arg(const GaussianPolynomialState& f, const GaussMat& u);
GaussianPolynomialState state_negate_arg(const GaussianPolynomialState& f);

bool state_equal(const GaussianPolynomialState& f, const GaussianPolynomialState& g);

// Schroedinger action (index c of the state):
// (U(g) f)(x) = e^{2 pi i sigma(c(kappa0 + mu0 t(lambda0) + 2 x t(mu0)))} f(x + lambda0).
GaussianPolynomialState schrodinger_act(const HeisenbergElement& g,
                                        const GaussianPolynomialState& f);

// Exact L^2 inner product <f, g> = int f conj(g); requires c_f = c_g and
// Re Omega_f = Re Omega_g so the Gaussian covariance matrix is real.
SymbolicScalar gaussian_inner(const GaussianPolynomialState& f,
                              const GaussianPolynomialState& g);

// F_tau f(eta) = tau^{mn/2} int f(xi) e^{-2 pi i tau sigma(xi t(eta))} dxi.
// tau = 1 is the classical transform (fixes e^{-pi |x|^2}); tau = 2 is the
// Hermite-adapted one with F h_J = (-i)^{|J|} h_J.  Requires the quadratic
// exponent to be an isotropic i*(w/2)*I.
GaussianPolynomialState fourier(const GaussianPolynomialState& f, const Rational& tau);

} // namespace siegel
