#include "siegel/hermite.hpp"

namespace siegel {

namespace {

SymbolicScalar half() { return SymbolicScalar(GaussianRational(Rational(1, 2))); }
SymbolicScalar four_pi() { return SymbolicScalar::pi_half_pow(2, GaussianRational(4)); }

} // namespace

GaussianPolynomialState ladder_plus(const GaussianPolynomialState& f, int k, int a) {
    GaussianPolynomialState d = state_derivative(f, k, a);
    GaussianPolynomialState x = state_scale(state_mul_coord(f, k, a), four_pi());
    GaussianPolynomialState r = f;
    r.p = (d.p - x.p).scaled(half());
    return r;
}

GaussianPolynomialState ladder_minus(const GaussianPolynomialState& f, int k, int a) {
    GaussianPolynomialState d = state_derivative(f, k, a);
    GaussianPolynomialState x = state_scale(state_mul_coord(f, k, a), four_pi());
    GaussianPolynomialState r = f;
    r.p = (d.p + x.p).scaled(half());
    return r;
}

GaussianPolynomialState ladder_apply(const LadderWord& word, const GaussianPolynomialState& f) {
    GaussianPolynomialState cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->k < 0 || it->k >= f.m || it->a < 0 || it->a >= f.n)
            throw structural_error("ladder_apply: position out of range");
        cur = it->create ? ladder_plus(cur, it->k, it->a) : ladder_minus(cur, it->k, it->a);
    }
    return cur;
}

GaussianPolynomialState hermite_f(const MultiIndex& j) {
    if (j.total() > 24) throw resource_error("hermite_f: degree cap exceeded");
    GaussianPolynomialState cur = ground_state(j.m, j.n);
    for (int k = 0; k < j.m; ++k)
        for (int a = 0; a < j.n; ++a)
            for (unsigned t = 0; t < j(k, a); ++t) cur = ladder_plus(cur, k, a);
    return cur;
}

GaussianPolynomialState hermite_h(const MultiIndex& j) {
    GaussianPolynomialState f = hermite_f(j);
    // (2 pi)^{-|J|/2} (J!)^{-1/2}
    unsigned long total = j.total();
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, total);
    Rational norm2 = Rational(two_pow) * Rational(j.factorial_prod());
    SymbolicScalar norm =
        SymbolicScalar::pi_half_pow(-static_cast<int>(total)) / SymbolicScalar::sqrt_rational(norm2);
    return state_scale(f, norm);
}

SymPoly hermite_p(const MultiIndex& j) { return hermite_h(j).p; }

SymPoly hermite_operator_residual(const MultiIndex& j, int k, int a) {
    GaussianPolynomialState h = hermite_h(j);
    GaussianPolynomialState d2 = state_derivative(state_derivative(h, k, a), k, a);
    GaussianPolynomialState x2 = state_mul_coord(state_mul_coord(h, k, a), k, a);
    SymbolicScalar c16pi2 = SymbolicScalar::pi_half_pow(4, GaussianRational(16));
    SymPoly ham = x2.p.scaled(c16pi2) - d2.p;
    // eigenvalue 8 pi (J_{ka} + 1/2)
    SymbolicScalar ev = SymbolicScalar::pi_half_pow(
        2, GaussianRational(Rational(8) * (Rational(j(k, a)) + Rational(1, 2))));
    return ham - h.p.scaled(ev);
}

std::map<MultiIndex, SymbolicScalar> hermite_expand(const GaussianPolynomialState& f) {
    // requires the h_J exponent data: c = I, Omega = i I, L = 0, s arbitrary
    GaussianPolynomialState probe = ground_state(f.m, f.n);
    if (!(f.c == probe.c) || !(f.omega == probe.omega) || !f.lin.is_zero())
        throw domain_error("hermite_expand: state not in the h_J Gaussian family");
    std::map<MultiIndex, SymbolicScalar> coeffs;
    GaussianPolynomialState rest = f;
    int cap = f.p.degree();
    // peel leading coefficients degree by degree, top down
    for (int d = cap; d >= 0; --d) {
        for (const auto& jj : multiindex_iter(f.m, f.n, static_cast<unsigned>(d))) {
            if (static_cast<int>(jj.total()) != d) continue;
            // coefficient of the monomial xi^J in rest
            SymPoly::Expo key(static_cast<size_t>(f.nvars()), 0);
            for (int k = 0; k < f.m; ++k)
                for (int a = 0; a < f.n; ++a)
                    key[static_cast<size_t>(k * f.n + a)] = static_cast<std::uint16_t>(jj(k, a));
            auto it = rest.p.terms().find(key);
            if (it == rest.p.terms().end()) continue;
            SymbolicScalar coef = it->second;
            GaussianPolynomialState h = hermite_h(jj);
            // leading coefficient of h_J at xi^J
            auto lead = h.p.terms().find(key);
            if (lead == h.p.terms().end()) throw std::logic_error("hermite_expand: missing lead");
            SymbolicScalar c_j = coef / lead->second;
            if (!c_j.is_zero()) {
                coeffs[jj] += c_j;
                rest.p -= h.p.scaled(c_j);
            }
        }
    }
    if (!rest.p.is_zero()) throw std::logic_error("hermite_expand: expansion did not terminate");
    // fold the constant phase e^{2 pi i s} into the coefficients
    if (!(f.s == GaussianRational(0))) {
        SymbolicScalar phase = SymbolicScalar(exact_unit_phase(2 * f.s.re)) *
                               SymbolicScalar::exp_pi(-2 * f.s.im);
        for (auto& [k, v] : coeffs) v *= phase;
    }
    return coeffs;
}

} // namespace siegel
