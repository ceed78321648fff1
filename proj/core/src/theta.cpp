#include "siegel/theta.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace siegel {

namespace {

struct Kahan {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
    void add(cplx z) {
        double yr = z.real() - cre, yi = z.imag() - cim;
        double tr = re + yr, ti = im + yi;
        cre = (tr - re) - yr;
        cim = (ti - im) - yi;
        re = tr;
        im = ti;
    }
    void merge(const Kahan& o) {
        add(cplx(o.re, o.im));
        add(cplx(-o.cre, -o.cim));
    }
    cplx value() const { return {re, im}; }
};

double min_eigenvalue(const RMat& sym) {
    Eigen::SelfAdjointEigenSolver<RMat> es(sym);
    return es.eigenvalues().minCoeff();
}

} // namespace

double box_tail_bound(int mn, int radius, const GaussianDecay& d) {
    double total = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int r = radius + 1; r < radius + 100000; ++r) {
        double t = std::max(0.0, r - d.shift);
        double count = 2.0 * mn * std::pow(2.0 * r + 1.0, mn - 1);
        double poly = d.poly_c * std::pow(std::max(1.0, double(r)), d.poly_deg);
        double term = count * poly * std::exp(-M_PI * d.lambda * t * t + M_PI * d.lin * t);
        total += term;
        if (term < prev) {
            double ratio = prev == std::numeric_limits<double>::infinity() ? 0.0 : term / prev;
            if (term < 1e-320) return total;
            if (ratio < 0.5 && term < 1e-6 * total + 1e-300) {
                // geometric remainder
                return total + term * ratio / (1.0 - ratio);
            }
        }
        prev = term;
    }
    return std::numeric_limits<double>::infinity();
}

LatticeSumResult box_lattice_sum(int m, int n, const TruncationPolicy& policy,
                                 const GaussianDecay& decay,
                                 const std::function<cplx(const std::vector<long>&)>& term) {
    int mn = m * n;
    // pick the radius from the certificate
    int radius = -1;
    double bound = 0.0;
    int rmin = static_cast<int>(std::ceil(decay.shift + decay.lin / (2.0 * decay.lambda))) + 1;
    for (int r = std::max(1, rmin); r <= policy.max_radius; ++r) {
        bound = box_tail_bound(mn, r, decay);
        if (bound <= policy.target_tail) {
            radius = r;
            break;
        }
    }
    if (radius < 0)
        throw truncation_error("box_lattice_sum: max_radius hit before tail target", bound);

    const long r = radius;
    std::vector<Kahan> shells(static_cast<size_t>(radius) + 1);
    long long terms = 0;

    auto scan_first_range = [&](long f0, long f1, std::vector<Kahan>& acc, long long& cnt) {
        std::vector<long> v(static_cast<size_t>(mn), -r);
        for (long first = f0; first < f1; ++first) {
            v[0] = first;
            std::fill(v.begin() + 1, v.end(), -r);
            while (true) {
                long shell = 0;
                for (int i = 0; i < mn; ++i) shell = std::max(shell, std::labs(v[i]));
                acc[static_cast<size_t>(shell)].add(term(v));
                ++cnt;
                int pos = mn - 1;
                while (pos >= 1 && v[pos] == r) {
                    v[pos] = -r;
                    --pos;
                }
                if (pos < 1) break;
                ++v[pos];
            }
        }
    };

    int nthreads = std::max(1, policy.threads);
    if (nthreads == 1 || mn == 1) {
        if (mn == 1) {
            std::vector<long> v(1);
            for (long x = -r; x <= r; ++x) {
                v[0] = x;
                shells[static_cast<size_t>(std::labs(x))].add(term(v));
                ++terms;
            }
        } else {
            scan_first_range(-r, r + 1, shells, terms);
        }
    } else {
        long span = 2 * r + 1;
        long chunk = (span + nthreads - 1) / nthreads;
        std::vector<std::vector<Kahan>> partial(nthreads,
                                                std::vector<Kahan>(static_cast<size_t>(radius) + 1));
        std::vector<long long> counts(nthreads, 0);
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) {
            long f0 = -r + t * chunk;
            long f1 = std::min(r + 1, f0 + chunk);
            if (f0 >= f1) continue;
            pool.emplace_back([&, f0, f1, t] { scan_first_range(f0, f1, partial[t], counts[t]); });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < nthreads; ++t) {
            terms += counts[t];
            for (size_t s = 0; s < shells.size(); ++s) shells[s].merge(partial[t][s]);
        }
    }

    Kahan total;
    for (const auto& s : shells) total.merge(s);
    return {total.value(), bound, radius, terms};
}

LatticeSumResult ellipsoid_lattice_sum(const RMat& gram, const RVec& center,
                                       const TruncationPolicy& policy, double amp,
                                       const std::function<cplx(const std::vector<long>&)>& term,
                                       double poly_c, int poly_deg) {
    const int dim = static_cast<int>(gram.rows());
    Eigen::SelfAdjointEigenSolver<RMat> es(gram);
    double lam_max = es.eigenvalues().maxCoeff();
    double lam_min = es.eigenvalues().minCoeff();
    double det_g = gram.determinant();
    if (lam_min <= 0.0)
        throw domain_error("ellipsoid_lattice_sum: form not positive definite");
    double hh = 0.5 * std::sqrt(lam_max * dim); // covering correction in q-norm
    double vball = std::pow(M_PI, dim / 2.0) / std::tgamma(dim / 2.0 + 1.0);
    auto count_bound = [&](double t) {
        return vball * std::pow(std::sqrt(t) + hh, dim) / std::sqrt(det_g);
    };
    auto tail_at = [&](double level) {
        double tail = 0.0;
        for (int k = 0; k < 2000; ++k) {
            double t = level + k;
            double poly = poly_c * std::pow(std::max(1.0, std::sqrt((t + 1) / lam_min)), poly_deg);
            double add = amp * poly * std::exp(-M_PI * t) * count_bound(t + 1);
            tail += add;
            if (add < 1e-3 * policy.target_tail && k > 3) break;
        }
        return tail * (1.0 + 1e-2);
    };
    double level = 2.0;
    double bound = tail_at(level);
    while (bound > policy.target_tail) {
        level += 1.0;
        bound = tail_at(level);
        if (level > 4000.0)
            throw truncation_error("ellipsoid_lattice_sum: tail target unreachable", bound);
    }

    // Fincke-Pohst backtracking over x with |U (x + center)|^2 <= level,
    // gram = U^T U, U upper triangular.
    Eigen::LLT<RMat> llt(gram);
    if (llt.info() != Eigen::Success) throw conditioning_error("ellipsoid_lattice_sum: LLT failed");
    RMat u = llt.matrixL().transpose();

    Kahan acc;
    long long terms = 0;
    std::vector<long> x(static_cast<size_t>(dim), 0);
    // partial[i] = contribution of coordinates > i to the squared norm
    std::function<void(int, double)> descend = [&](int i, double used) {
        // bound for coordinate i: |u_ii (x_i + c_i + (1/u_ii) sum_{j>i} u_ij (x_j + c_j))|^2 <= level - used
        double off = 0.0;
        for (int j = i + 1; j < dim; ++j) off += u(i, j) * (x[static_cast<size_t>(j)] + center(j));
        double room = level - used;
        if (room < 0.0) return;
        double half = std::sqrt(room) / u(i, i);
        double mid = -center(i) - off / u(i, i);
        long lo = static_cast<long>(std::ceil(mid - half - 1e-12));
        long hi = static_cast<long>(std::floor(mid + half + 1e-12));
        for (long xi = lo; xi <= hi; ++xi) {
            x[static_cast<size_t>(i)] = xi;
            double li = u(i, i) * (xi + center(i)) + off;
            double used2 = used + li * li;
            if (used2 > level * (1.0 + 1e-12)) continue;
            if (i == 0) {
                acc.add(term(x));
                ++terms;
            } else {
                descend(i - 1, used2);
            }
        }
    };
    descend(dim - 1, 0.0);
    return {acc.value(), bound, static_cast<int>(std::lround(level)), terms};
}

// ---------------------------------------------------------------------------

ThetaSpec::ThetaSpec(RMat s_, RMat a_, RMat b_, TruncationPolicy p)
    : s(std::move(s_)), a(std::move(a_)), b(std::move(b_)), policy(p) {
    if (!is_symmetric(s, 1e-12)) throw structural_error("ThetaSpec: S not symmetric");
    if (!is_positive_definite(s)) throw domain_error("ThetaSpec: S not positive definite");
    if (a.rows() != s.rows() || b.rows() != s.rows() || a.cols() != b.cols())
        throw structural_error("ThetaSpec: characteristic shapes");
    if (policy.target_tail <= 0) throw structural_error("ThetaSpec: tail target must be positive");
}

namespace {

GaussianDecay theta_decay(const RMat& s, const RMat& a, const SiegelPoint& omega, const CMat& w) {
    GaussianDecay d;
    d.lambda = min_eigenvalue(s) * min_eigenvalue(omega.y());
    d.lin = 2.0 * (s * w.imag()).norm();
    d.shift = a.norm();
    return d;
}

} // namespace

LatticeSumResult theta_char(const ThetaSpec& spec, const SiegelPoint& omega, const CMat& w) {
    const int m = spec.m(), n = spec.n();
    if (omega.degree() != n) throw structural_error("theta_char: degree mismatch");
    if (w.rows() != m || w.cols() != n) throw structural_error("theta_char: W shape");
    if (m > 8 || n > 8) throw structural_error("theta_char: dimensions beyond desk scale");
    const RMat& s = spec.s;
    CMat wb = w + spec.b.cast<cplx>();
    const CMat& om = omega.omega;
    // exponent = sigma(S(M Omega tM)) + 2 sigma(S (W+B) tM), M = N + A, written
    // with stack buffers; this loop dominates every verification sweep
    auto term = [&, m, n](const std::vector<long>& nv) -> cplx {
        double mm[64];
        cplx mo[64]; // M Omega, m x n
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < n; ++a)
                mm[k * n + a] = static_cast<double>(nv[static_cast<size_t>(k) * n + a]) +
                                spec.a(k, a);
        for (int k = 0; k < m; ++k)
            for (int b = 0; b < n; ++b) {
                cplx acc(0.0, 0.0);
                for (int a = 0; a < n; ++a) acc += mm[k * n + a] * om(a, b);
                mo[k * n + b] = acc;
            }
        cplx e(0.0, 0.0);
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
                if (s(k, l) == 0.0) continue;
                cplx dot(0.0, 0.0);
                for (int a = 0; a < n; ++a)
                    dot += (mo[l * n + a] + 2.0 * wb(l, a)) * mm[k * n + a];
                e += s(k, l) * dot;
            }
        return std::exp(cplx(0.0, M_PI) * e);
    };

    if (m * n >= 5 && n == 1 && w.cwiseAbs().maxCoeff() == 0.0) {
        // quadratic-form ball enumeration; q(v) = (v+a)^T (y S) (v+a) dominates
        // the modulus, phases bounded by 1
        RMat gram = omega.y()(0, 0) * s;
        RVec c0 = spec.a.col(0);
        return ellipsoid_lattice_sum(gram, c0, spec.policy, 1.0, term);
    }
    return box_lattice_sum(m, n, spec.policy, theta_decay(spec.s, spec.a, omega, w), term);
}

double theta_quasiperiodicity_residual(const ThetaSpec& spec, const SiegelPoint& omega,
                                       const CMat& w, const Eigen::MatrixXi& xi,
                                       const Eigen::MatrixXi& eta) {
    if (xi.rows() != spec.m() || xi.cols() != spec.n())
        throw structural_error("theta_quasiperiodicity_residual: shift shapes");
    RMat xir = xi.cast<double>(), etar = eta.cast<double>();
    CMat shift = xir.cast<cplx>() * omega.omega + etar.cast<cplx>();
    LatticeSumResult lhs = theta_char(spec, omega, w + shift);
    LatticeSumResult rhs0 = theta_char(spec, omega, w);
    cplx e1 = (spec.s.cast<cplx>() *
               (xir.cast<cplx>() * omega.omega * xir.transpose().cast<cplx>() +
                2.0 * w * xir.transpose().cast<cplx>()))
                  .trace();
    cplx e2 = (spec.s.cast<cplx>() *
               (spec.a.cast<cplx>() * etar.transpose().cast<cplx>() -
                spec.b.cast<cplx>() * xir.transpose().cast<cplx>()))
                  .trace();
    cplx factor = std::exp(cplx(0.0, -M_PI) * e1) * std::exp(cplx(0.0, 2.0 * M_PI) * e2);
    double denom = std::abs(rhs0.value);
    if (denom < 1e-14) throw conditioning_error("theta_quasiperiodicity_residual: theta ~ 0");
    return std::abs(lhs.value - factor * rhs0.value) / denom;
}

LatticeSumResult theta_series(const RMat& s, const SiegelPoint& omega,
                              const TruncationPolicy& policy) {
    int m = static_cast<int>(s.rows());
    int n = omega.degree();
    ThetaSpec spec(s, RMat::Zero(m, n), RMat::Zero(m, n), policy);
    return theta_char(spec, omega, CMat::Zero(m, n));
}

LatticeSumResult theta_null(const SiegelPoint& omega, const IntCharacteristic& ch,
                            const TruncationPolicy& policy) {
    int n = omega.degree();
    if (static_cast<int>(ch.a.size()) != n || static_cast<int>(ch.b.size()) != n)
        throw structural_error("theta_null: characteristic length");
    const CMat& om = omega.omega;
    auto term = [&](const std::vector<long>& nv) -> cplx {
        CVec v(n);
        double bdot = 0.0;
        for (int i = 0; i < n; ++i) {
            v(i) = cplx(nv[static_cast<size_t>(i)] + 0.5 * ch.a[static_cast<size_t>(i)], 0.0);
            bdot += static_cast<double>(ch.b[static_cast<size_t>(i)]) * nv[static_cast<size_t>(i)];
        }
        cplx q = (v.transpose() * om * v)(0, 0);
        return std::exp(cplx(0.0, M_PI) * (q + bdot));
    };
    GaussianDecay d;
    d.lambda = min_eigenvalue(omega.y());
    d.shift = 0.5 * std::sqrt(static_cast<double>(n));
    return box_lattice_sum(1, n, policy, d, term);
}

std::vector<IntCharacteristic> all_characteristics(int n) {
    std::vector<IntCharacteristic> out;
    long total = 1L << (2 * n);
    for (long mask = 0; mask < total; ++mask) {
        IntCharacteristic ch;
        ch.a.resize(static_cast<size_t>(n));
        ch.b.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            ch.a[static_cast<size_t>(i)] = (mask >> i) & 1;
            ch.b[static_cast<size_t>(i)] = (mask >> (n + i)) & 1;
        }
        out.push_back(ch);
    }
    return out;
}

std::vector<IntCharacteristic> even_characteristics(int n) {
    std::vector<IntCharacteristic> out;
    for (auto& ch : all_characteristics(n))
        if (ch.even()) out.push_back(ch);
    return out;
}

IntCharacteristic char_action(const Eigen::MatrixXi& gamma, const IntCharacteristic& ch) {
    int n = static_cast<int>(gamma.rows()) / 2;
    if (static_cast<int>(ch.a.size()) != n) throw structural_error("char_action: size mismatch");
    Eigen::MatrixXi a = gamma.topLeftCorner(n, n), b = gamma.topRightCorner(n, n);
    Eigen::MatrixXi c = gamma.bottomLeftCorner(n, n), d = gamma.bottomRightCorner(n, n);
    Eigen::VectorXi av(n), bv(n);
    for (int i = 0; i < n; ++i) {
        av(i) = ch.a[static_cast<size_t>(i)];
        bv(i) = ch.b[static_cast<size_t>(i)];
    }
    Eigen::VectorXi a2 = d * av - c * bv + (c * d.transpose()).diagonal();
    Eigen::VectorXi b2 = -b * av + a * bv + (a * b.transpose()).diagonal();
    IntCharacteristic out;
    out.a.resize(static_cast<size_t>(n));
    out.b.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.a[static_cast<size_t>(i)] = ((a2(i) % 2) + 2) % 2;
        out.b[static_cast<size_t>(i)] = ((b2(i) % 2) + 2) % 2;
    }
    return out;
}

LatticeSumResult delta_n(const SiegelPoint& omega, const TruncationPolicy& policy) {
    int n = omega.degree();
    if (n > 2) throw structural_error("delta_n: only n <= 2 supported");
    int kn = (n == 1) ? 8 : 2;
    cplx prod(1.0, 0.0);
    double bound = 0.0;
    int radius = 0;
    long long terms = 0;
    for (const auto& ch : even_characteristics(n)) {
        LatticeSumResult r = theta_null(omega, ch, policy);
        for (int k = 0; k < kn; ++k) prod *= r.value;
        bound = std::max(bound, r.tail_bound);
        radius = std::max(radius, r.radius);
        terms += r.terms;
    }
    return {prod, bound, radius, terms};
}

namespace {

Rational mod2(const Rational& q) {
    BigInt num = q.get_num(), den = q.get_den();
    BigInt twice_den = 2 * den;
    BigInt red;
    mpz_mod(red.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
    Rational r(red, den);
    r.canonicalize();
    return r;
}

RatMat rat_from_int(const Eigen::MatrixXi& m) {
    RatMat r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

} // namespace

Rational second_degree_character_defect(const RatMat& s_int, const RatMat& a_char,
                                        const RatMat& b_char, const Eigen::MatrixXi& xi1,
                                        const Eigen::MatrixXi& eta1, const Eigen::MatrixXi& xi2,
                                        const Eigen::MatrixXi& eta2) {
    RatMat x1 = rat_from_int(xi1), e1 = rat_from_int(eta1);
    RatMat x2 = rat_from_int(xi2), e2 = rat_from_int(eta2);
    auto psi_exp = [&](const RatMat& xi, const RatMat& eta) -> Rational {
        // psi = e^{pi i sigma(S eta t(xi))}, chi = e^{2 pi i sigma(S(A t(eta) - B t(xi)))}
        Rational p = (s_int * eta * xi.transpose()).trace();
        Rational chi = Rational(2) * (s_int * (a_char * eta.transpose() - b_char * xi.transpose()))
                                         .trace();
        return p + chi;
    };
    Rational lhs = psi_exp(x1 + x2, e1 + e2);
    Rational pairing = (s_int * (x1 * e2.transpose() - e1 * x2.transpose())).trace();
    Rational rhs = pairing + psi_exp(x1, e1) + psi_exp(x2, e2);
    return mod2(lhs - rhs);
}

LatticeSumResult lattice_rep_theta(const RMat& m_mat, const MultiIndex& j, const RMat& a_alpha,
                                   const SiegelPoint& omega, const HeisenbergElement& g,
                                   const TruncationPolicy& policy) {
    const int m = static_cast<int>(m_mat.rows());
    const int n = omega.degree();
    if (g.m() != m || g.n() != n || j.m != m || j.n != n)
        throw structural_error("lattice_rep_theta: shape mismatch");
    RMat lam = to_rmat(g.lambda), mu = to_rmat(g.mu), kap = to_rmat(g.kappa);
    const CMat& om = omega.omega;
    cplx pref =
        std::exp(cplx(0.0, 2.0 * M_PI) * (m_mat * (kap - lam * mu.transpose())).trace());
    RMat base = lam + a_alpha;
    auto term = [&](const std::vector<long>& nv) -> cplx {
        RMat x = base;
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < n; ++a) x(k, a) += static_cast<double>(nv[static_cast<size_t>(k) * n + a]);
        double mono = 1.0;
        for (int k = 0; k < m; ++k)
            for (int a = 0; a < n; ++a)
                for (unsigned t = 0; t < j(k, a); ++t) mono *= x(k, a);
        CMat xc = x.cast<cplx>();
        cplx e = (m_mat.cast<cplx>() * (xc * om * xc.transpose() + 2.0 * xc * mu.transpose().cast<cplx>()))
                     .trace();
        return mono * std::exp(cplx(0.0, 2.0 * M_PI) * e);
    };
    GaussianDecay d;
    d.lambda = 2.0 * min_eigenvalue(m_mat) * min_eigenvalue(omega.y());
    d.shift = base.norm();
    d.poly_deg = static_cast<int>(j.total());
    d.poly_c = std::pow(1.0 + base.cwiseAbs().maxCoeff(), static_cast<double>(j.total()));
    LatticeSumResult r = box_lattice_sum(m, n, policy, d, term);
    r.value *= pref;
    return r;
}

RMat e8_gram() {
    RMat s(8, 8);
    s << 2, 0, -1, 0, 0, 0, 0, 0, //
        0, 2, 0, -1, 0, 0, 0, 0,  //
        -1, 0, 2, -1, 0, 0, 0, 0, //
        0, -1, -1, 2, -1, 0, 0, 0, //
        0, 0, 0, -1, 2, -1, 0, 0, //
        0, 0, 0, 0, -1, 2, -1, 0, //
        0, 0, 0, 0, 0, -1, 2, -1, //
        0, 0, 0, 0, 0, 0, -1, 2;
    return s;
}

long e8_rep_count(const RMat& s, int two_k) {
    // exact integer evaluation of the form over the ball q <= two_k
    Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> si(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) si(i, j) = std::lround(s(i, j));
    long count = 0;
    TruncationPolicy pol;
    pol.target_tail = 1.0; // level fixed by hand below
    RVec c0 = RVec::Zero(8);
    auto term = [&](const std::vector<long>& x) -> cplx {
        long q = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) q += si(i, j) * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
        if (q == two_k) ++count;
        return {0.0, 0.0};
    };
    // enumerate the ball of level two_k + 1/2 exactly
    Eigen::LLT<RMat> llt(s);
    RMat u = llt.matrixL().transpose();
    std::vector<long> x(8, 0);
    std::function<void(int, double)> descend = [&](int i, double used) {
        double off = 0.0;
        for (int j = i + 1; j < 8; ++j) off += u(i, j) * x[static_cast<size_t>(j)];
        double room = (two_k + 0.5) - used;
        if (room < 0.0) return;
        double half = std::sqrt(room) / u(i, i);
        double mid = -off / u(i, i);
        long lo = static_cast<long>(std::ceil(mid - half - 1e-9));
        long hi = static_cast<long>(std::floor(mid + half + 1e-9));
        for (long xi = lo; xi <= hi; ++xi) {
            x[static_cast<size_t>(i)] = xi;
            double li = u(i, i) * xi + off;
            double used2 = used + li * li;
            if (used2 > two_k + 0.5) continue;
            if (i == 0)
                term(x);
            else
                descend(i - 1, used2);
        }
    };
    descend(7, 0.0);
    return count;
}

long level_of_even(const RatMat& s) {
    RatMat inv = s.inverse();
    BigInt l(1);
    for (int i = 0; i < inv.rows(); ++i)
        for (int j = 0; j < inv.cols(); ++j) {
            BigInt den = inv(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    for (long k = 1; k <= 2; ++k) {
        Rational q = Rational(l) * k;
        bool even = true;
        for (int i = 0; i < inv.rows() && even; ++i) {
            Rational d = q * inv(i, i);
            if (d.get_den() != 1 || d.get_num() % 2 != 0) even = false;
        }
        if (even) {
            Rational qk = Rational(l) * k;
            return qk.get_num().get_si();
        }
    }
    throw domain_error("level_of_even: no small level found (S not even?)");
}

} // namespace siegel
