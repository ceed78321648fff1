#include "siegel/harmonic.hpp"

#include <cmath>

namespace siegel {

GaussianRational pairing(const RatPoly& p, const RatPoly& q) {
    GaussianRational s(0);
    const auto& qt = q.terms();
    for (const auto& [e, cp] : p.terms()) {
        auto it = qt.find(e);
        if (it == qt.end()) continue;
        Rational fac(1);
        for (auto x : e) fac *= Rational(factorial(x));
        s += cp * it->second * GaussianRational(fac);
    }
    return s;
}

RatPoly apply_diff(const RatPoly& h, const RatPoly& p) {
    RatPoly out(p.nvars());
    for (const auto& [eh, ch] : h.terms()) {
        RatPoly cur = p;
        for (int v = 0; v < p.nvars() && !cur.is_zero(); ++v)
            for (int k = 0; k < eh[static_cast<size_t>(v)]; ++k) cur = cur.derivative(v);
        out += cur.scaled(ch);
    }
    return out;
}

std::vector<RatPoly> pluriharmonic_generators(const RatMat& s, int m, int n) {
    RatMat t = s.inverse();
    std::vector<RatPoly> gens;
    int nv = m * n;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            RatPoly h(nv);
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    if (t(k, l) == 0) continue;
                    RatPoly::Expo e(static_cast<size_t>(nv), 0);
                    e[static_cast<size_t>(k * n + i)] += 1;
                    e[static_cast<size_t>(l * n + j)] += 1;
                    h.add_term(e, GaussianRational(t(k, l)));
                }
            gens.push_back(h);
        }
    return gens;
}

bool is_pluriharmonic(const RatPoly& p, const RatMat& s, int m, int n) {
    for (const auto& h : pluriharmonic_generators(s, m, n))
        if (!apply_diff(h, p).is_zero()) return false;
    return true;
}

namespace {

std::vector<RatPoly::Expo> monomials_of_degree(int nvars, int degree) {
    std::vector<RatPoly::Expo> out;
    RatPoly::Expo cur(static_cast<size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int v, int rem) {
        if (v == nvars - 1) {
            cur[static_cast<size_t>(v)] = static_cast<std::uint16_t>(rem);
            out.push_back(cur);
            return;
        }
        for (int x = rem; x >= 0; --x) {
            cur[static_cast<size_t>(v)] = static_cast<std::uint16_t>(x);
            rec(v + 1, rem - x);
        }
    };
    if (degree >= 0) rec(0, degree);
    return out;
}

RatPoly homogeneous_component(const RatPoly& p, int degree) {
    RatPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (auto x : e) d += x;
        if (d == degree) out.add_term(e, c);
    }
    return out;
}

// all products (monomial of degree d-2) * h_t
std::vector<std::pair<RatPoly, size_t>> ideal_generators_of_degree(
    const std::vector<RatPoly>& gens, int nvars, int degree,
    std::vector<RatPoly::Expo>* cofactors_out = nullptr) {
    std::vector<std::pair<RatPoly, size_t>> out;
    if (degree < 2) return out;
    auto mons = monomials_of_degree(nvars, degree - 2);
    for (size_t t = 0; t < gens.size(); ++t)
        for (const auto& e : mons) {
            RatPoly f(nvars);
            f.add_term(e, GaussianRational(1));
            out.emplace_back(f * gens[t], t);
            if (cofactors_out) cofactors_out->push_back(e);
        }
    return out;
}

} // namespace

HarmonicDecomposition decompose(const RatPoly& p, const RatMat& s, int m, int n) {
    int nv = m * n;
    auto gens = pluriharmonic_generators(s, m, n);
    HarmonicDecomposition out;
    out.h = RatPoly(nv);
    out.ideal_part = RatPoly(nv);
    for (int d = 0; d <= p.degree(); ++d) {
        RatPoly pd = homogeneous_component(p, d);
        if (pd.is_zero()) continue;
        if (d < 2) {
            out.h += pd;
            continue;
        }
        std::vector<RatPoly::Expo> cof;
        auto prods = ideal_generators_of_degree(gens, nv, d, &cof);
        size_t g = prods.size();
        // normal equations G x = v over Q(i); G rational
        ExactMat<GaussianRational> gram(static_cast<int>(g), static_cast<int>(g) + 1);
        for (size_t i = 0; i < g; ++i) {
            for (size_t j = i; j < g; ++j) {
                GaussianRational e = pairing(prods[i].first, prods[j].first);
                gram(static_cast<int>(i), static_cast<int>(j)) = e;
                gram(static_cast<int>(j), static_cast<int>(i)) = e;
            }
            gram(static_cast<int>(i), static_cast<int>(g)) = pairing(prods[i].first, pd);
        }
        // elimination with free variables set to zero
        std::vector<int> pivot_col_of_row;
        int row = 0;
        for (int col = 0; col < static_cast<int>(g) && row < static_cast<int>(g); ++col) {
            int piv = -1;
            for (int r2 = row; r2 < static_cast<int>(g); ++r2)
                if (!(gram(r2, col) == GaussianRational(0))) {
                    piv = r2;
                    break;
                }
            if (piv < 0) continue;
            if (piv != row)
                for (int j2 = 0; j2 <= static_cast<int>(g); ++j2)
                    std::swap(gram(piv, j2), gram(row, j2));
            GaussianRational inv = GaussianRational(1) / gram(row, col);
            for (int j2 = col; j2 <= static_cast<int>(g); ++j2) gram(row, j2) *= inv;
            for (int r2 = 0; r2 < static_cast<int>(g); ++r2) {
                if (r2 == row) continue;
                GaussianRational f = gram(r2, col);
                if (f == GaussianRational(0)) continue;
                for (int j2 = col; j2 <= static_cast<int>(g); ++j2)
                    gram(r2, j2) -= f * gram(row, j2);
            }
            pivot_col_of_row.push_back(col);
            ++row;
        }
        // consistency: zero rows must have zero rhs (nondegeneracy of the pairing)
        for (int r2 = row; r2 < static_cast<int>(g); ++r2)
            if (!(gram(r2, static_cast<int>(g)) == GaussianRational(0)))
                throw std::logic_error("decompose: inconsistent normal equations");
        std::vector<GaussianRational> x(g, GaussianRational(0));
        for (int r2 = 0; r2 < row; ++r2)
            x[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r2)])] =
                gram(r2, static_cast<int>(g));
        RatPoly ideal_d(nv);
        for (size_t i = 0; i < g; ++i) {
            if (x[i] == GaussianRational(0)) continue;
            ideal_d += prods[i].first.scaled(x[i]);
            RatPoly f(nv);
            f.add_term(cof[i], x[i]);
            out.certificates.emplace_back(f, gens[prods[i].second]);
        }
        out.ideal_part += ideal_d;
        out.h += pd - ideal_d;
    }
    return out;
}

long dim_polynomials(int m, int n, int degree) {
    return static_cast<long>(
        binomial(static_cast<unsigned long>(degree + m * n - 1), static_cast<unsigned long>(m * n - 1))
            .get_si());
}

long dim_ideal(const RatMat& s, int m, int n, int degree) {
    int nv = m * n;
    auto gens = pluriharmonic_generators(s, m, n);
    auto prods = ideal_generators_of_degree(gens, nv, degree);
    if (prods.empty()) return 0;
    auto mons = monomials_of_degree(nv, degree);
    std::map<RatPoly::Expo, int> col_of;
    for (size_t i = 0; i < mons.size(); ++i) col_of[mons[i]] = static_cast<int>(i);
    RatMat mat(static_cast<int>(prods.size()), static_cast<int>(mons.size()));
    for (size_t i = 0; i < prods.size(); ++i)
        for (const auto& [e, c] : prods[i].first.terms()) mat(static_cast<int>(i), col_of[e]) = c.re;
    return mat.rank();
}

long dim_pluriharmonic(const RatMat& s, int m, int n, int degree) {
    int nv = m * n;
    auto gens = pluriharmonic_generators(s, m, n);
    auto mons = monomials_of_degree(nv, degree);
    if (degree < 2) return static_cast<long>(mons.size());
    auto target = monomials_of_degree(nv, degree - 2);
    std::map<RatPoly::Expo, int> row_of;
    for (size_t i = 0; i < target.size(); ++i) row_of[target[i]] = static_cast<int>(i);
    RatMat op(static_cast<int>(gens.size() * target.size()), static_cast<int>(mons.size()));
    for (size_t j = 0; j < mons.size(); ++j) {
        RatPoly mono(nv);
        mono.add_term(mons[j], GaussianRational(1));
        for (size_t t = 0; t < gens.size(); ++t) {
            RatPoly im = apply_diff(gens[t], mono);
            for (const auto& [e, c] : im.terms())
                op(static_cast<int>(t * target.size()) + row_of[e], static_cast<int>(j)) = c.re;
        }
    }
    return static_cast<long>(mons.size()) - op.rank();
}

LatticeSumResult theta_spherical(const RMat& s, const CPoly& p, const RMat& alpha,
                                 const RMat& beta, const SiegelPoint& omega, const CMat& z,
                                 const TruncationPolicy& policy) {
    const int m = static_cast<int>(s.rows());
    const int n = omega.degree();
    if (alpha.rows() != m || alpha.cols() != n || beta.rows() != m || beta.cols() != n)
        throw structural_error("theta_spherical: characteristic shapes");
    const CMat& om = omega.omega;
    auto term = [&](const std::vector<long>& lv) -> cplx {
        RMat nm = alpha;
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < n; ++a) nm(k, a) += static_cast<double>(lv[static_cast<size_t>(k) * n + a]);
        std::vector<cplx> coords(static_cast<size_t>(m) * n);
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < n; ++a) coords[static_cast<size_t>(k) * n + a] = nm(k, a);
        cplx pval = p.eval(coords);
        if (pval == cplx(0.0, 0.0)) return pval;
        CMat nc = nm.cast<cplx>();
        cplx quad = (nc.transpose() * s.cast<cplx>() * nc * om).trace();
        cplx lin = 2.0 * (nc.transpose() * z).trace();
        double chi = 2.0 * M_PI * (nm.transpose() * beta).trace();
        return pval * std::exp(cplx(0.0, M_PI) * (quad + lin)) * std::exp(cplx(0.0, chi));
    };
    GaussianDecay d;
    Eigen::SelfAdjointEigenSolver<RMat> es_s(s), es_y(omega.y());
    d.lambda = es_s.eigenvalues().minCoeff() * es_y.eigenvalues().minCoeff();
    d.lin = 2.0 * z.imag().norm();
    d.shift = alpha.norm();
    d.poly_deg = p.degree();
    double csum = 0.0;
    for (const auto& [e, c] : p.terms()) csum += std::abs(c);
    d.poly_c = std::max(1.0, csum) * std::pow(1.0 + alpha.cwiseAbs().maxCoeff() + 1.0,
                                              static_cast<double>(p.degree()));
    return box_lattice_sum(m, n, policy, d, term);
}

double transform_check_weight(const RMat& s, const RatPoly& p, const RMat& alpha,
                              const RMat& beta, const SymplecticMatrix& gamma,
                              const SiegelPoint& omega, const TruncationPolicy& policy) {
    const int m = static_cast<int>(s.rows());
    const int n = omega.degree();
    CPoly pc = to_cpoly(p);
    CMat cd = gamma.c() * omega.omega + gamma.d().cast<cplx>();
    // P~(Z) = P(Z (C Omega + D)): z_{kj} -> sum_l z_{kl} cd(l, j)
    std::vector<CPoly> subs;
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < n; ++j) {
            CPoly lin(m * n);
            for (int l = 0; l < n; ++l) {
                CPoly::Expo e(static_cast<size_t>(m) * n, 0);
                e[static_cast<size_t>(k * n + l)] = 1;
                lin.add_term(e, cd(l, j));
            }
            subs.push_back(lin);
        }
    CPoly ptilde = pc.substituted(subs);
    SiegelPoint momega = act(gamma, omega);
    LatticeSumResult lhs = theta_spherical(s, pc, alpha, beta, omega, CMat::Zero(m, n), policy);
    LatticeSumResult rhs = theta_spherical(s, ptilde, alpha, beta, momega, CMat::Zero(m, n), policy);
    cplx det_cd = cd.determinant();
    cplx factor;
    if (m % 2 == 0) {
        factor = std::pow(det_cd, -m / 2);
    } else {
        factor = std::pow(std::sqrt(det_cd), -m);
    }
    return std::abs(lhs.value - factor * rhs.value);
}

bool has_det_type(const RatPoly& p, int m, int n, int det_weight,
                  const std::vector<Rational>& diag) {
    if (static_cast<int>(diag.size()) != n) throw structural_error("has_det_type: diag size");
    int nv = m * n;
    std::vector<RatPoly> subs;
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < n; ++j)
            subs.push_back(RatPoly::variable(nv, k * n + j, GaussianRational(diag[static_cast<size_t>(j)])));
    RatPoly lhs = p.substituted(subs);
    Rational det(1);
    for (const auto& d : diag) det *= d;
    GaussianRational factor = gauss_pow(GaussianRational(det), det_weight);
    RatPoly rhs = p.scaled(factor);
    return lhs == rhs;
}

LatticeSumResult freitag_theta(const RMat& s, const RatPoly& p, int det_weight,
                               const SiegelPoint& omega, const TruncationPolicy& policy) {
    const int m = static_cast<int>(s.rows());
    const int n = omega.degree();
    std::vector<Rational> diag;
    for (int j = 0; j < n; ++j) diag.push_back(Rational(j + 2));
    if (!has_det_type(p, m, n, det_weight, diag))
        throw domain_error("freitag_theta: P fails the det^k scaling law");
    // plain pluriharmonicity (S = I weighting) per the det-type definition
    if (!is_pluriharmonic(p, rat_from_rmat(RMat::Identity(m, m)), m, n))
        throw domain_error("freitag_theta: P not pluriharmonic");
    RMat root = sym_sqrt(s);
    CPoly pc = to_cpoly(p);
    const CMat& om = omega.omega;
    auto term = [&](const std::vector<long>& lv) -> cplx {
        RMat nm(m, n);
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < n; ++a) nm(k, a) = static_cast<double>(lv[static_cast<size_t>(k) * n + a]);
        RMat arg = root * nm;
        std::vector<cplx> coords(static_cast<size_t>(m) * n);
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < n; ++a) coords[static_cast<size_t>(k) * n + a] = arg(k, a);
        cplx pval = pc.eval(coords);
        if (pval == cplx(0.0, 0.0)) return pval;
        cplx quad = (nm.transpose().cast<cplx>() * s.cast<cplx>() * nm.cast<cplx>() * om).trace();
        return pval * std::exp(cplx(0.0, M_PI) * quad);
    };
    double csum = 0.0;
    for (const auto& [e, c] : pc.terms()) csum += std::abs(c);
    double root_norm = root.norm();
    Eigen::SelfAdjointEigenSolver<RMat> es_s(s), es_y(omega.y());
    if (m * n >= 5 && n == 1) {
        RMat gram = omega.y()(0, 0) * s;
        double pc = std::max(1.0, csum) * std::pow(std::max(1.0, root_norm), p.degree());
        return ellipsoid_lattice_sum(gram, RVec::Zero(m), policy, 1.0, term, pc, p.degree());
    }
    GaussianDecay d;
    d.lambda = es_s.eigenvalues().minCoeff() * es_y.eigenvalues().minCoeff();
    d.poly_deg = p.degree();
    d.poly_c = std::max(1.0, csum) * std::pow(std::max(1.0, root_norm), p.degree());
    return box_lattice_sum(m, n, policy, d, term);
}

} // namespace siegel
