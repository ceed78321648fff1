// siegeltheta: theta functions on the Siegel upper half-space, the
// Heisenberg/Weil machinery behind them, and machine-readable verification
// reports for their transformation laws.

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "siegel/abelian.hpp"
#include "siegel/fock.hpp"
#include "siegel/harmonic.hpp"
#include "siegel/hermite.hpp"
#include "siegel/heisenberg.hpp"
#include "siegel/json_io.hpp"
#include "siegel/states.hpp"
#include "siegel/symplectic.hpp"
#include "siegel/theta.hpp"
#include "siegel/weil.hpp"

using namespace siegel;

namespace {

struct CommonOpts {
    double tol = 1e-9;
    double tail = 1e-12;
    int radius_max = 64;
    long seed = 1;
    int threads = 1;
    std::string json_in;
};

void add_common(CLI::App* app, CommonOpts& c) {
    app->add_option("--tol", c.tol, "pass/fail tolerance for residuals");
    app->add_option("--tail", c.tail, "certified truncation tail target");
    app->add_option("--radius-max", c.radius_max, "lattice sum radius cap");
    app->add_option("--seed", c.seed, "seed for randomized verification");
    app->add_option("--threads", c.threads, "worker threads for lattice sums");
    app->add_option("--json-in", c.json_in, "file with JSON-encoded inputs");
}

TruncationPolicy policy_of(const CommonOpts& c) {
    TruncationPolicy p;
    p.target_tail = c.tail;
    p.max_radius = c.radius_max;
    p.threads = c.threads;
    return p;
}

json parse_json_arg(const std::string& text) { return json::parse(text); }

json file_inputs(const CommonOpts& c) {
    if (c.json_in.empty()) return json::object();
    std::ifstream in(c.json_in);
    if (!in) throw structural_error("cannot open --json-in file: " + c.json_in);
    json j;
    in >> j;
    return j;
}

int finish(Report& rep, const CommonOpts& c) {
    rep.seed = c.seed;
    rep.tolerances["tol"] = c.tol;
    rep.tolerances["tail"] = c.tail;
    for (const auto& [name, val] : rep.residuals)
        if (!(val < c.tol)) rep.pass = false;
    std::cout << rep.to_json().dump(2) << std::endl;
    return rep.pass ? 0 : 1;
}

SiegelPoint random_siegel_pt(std::mt19937_64& g, int n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    RMat x(n, n), y(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            x(i, j) = x(j, i) = d(g);
            y(i, j) = y(j, i) = 0.3 * d(g);
        }
    y += RMat::Identity(n, n) * 1.2;
    return SiegelPoint(x.cast<cplx>() + cplx(0.0, 1.0) * y.cast<cplx>());
}

SymplecticMatrix random_symp(std::mt19937_64& g, int n, int len = 4) {
    std::uniform_int_distribution<int> kind(0, 2), ival(-2, 2);
    SymplecticMatrix m = SymplecticMatrix::identity(n);
    for (int t = 0; t < len; ++t) {
        int k = kind(g);
        if (k == 0) {
            RMat b(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) b(i, j) = b(j, i) = 0.5 * ival(g);
            m = m * SymplecticMatrix::translation(b);
        } else if (k == 1) {
            RMat a = RMat::Identity(n, n);
            if (n > 1) a(0, n - 1) = ival(g);
            m = m * SymplecticMatrix::dilation(a);
        } else {
            m = m * SymplecticMatrix::inversion(n);
        }
    }
    return m;
}

GeneratorWord random_gen_word(std::mt19937_64& g, int n, int len) {
    std::uniform_int_distribution<int> kind(0, 2), ival(-2, 2);
    GeneratorWord w;
    for (int t = 0; t < len; ++t) {
        int k = kind(g);
        if (k == 0) {
            RMat b(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) b(i, j) = b(j, i) = 0.5 * ival(g);
            w.push_back(GenTranslation{b});
        } else if (k == 1) {
            RMat a = RMat::Identity(n, n);
            if (n > 1) a(0, n - 1) = ival(g);
            w.push_back(GenDilation{a});
        } else {
            w.push_back(GenInversion{});
        }
    }
    return w;
}

RatMat random_half_int(std::mt19937_64& g, int rows, int cols) {
    std::uniform_int_distribution<int> iv(-4, 4);
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = ratio(iv(g), 2);
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta functions, the Heisenberg group and the Weil representation "
                 "on the Siegel upper half-space"};
    app.require_subcommand(1);
    CommonOpts c;

    std::function<int()> run;

    // ---------------- siegel ----------------
    auto* siegel_cmd = app.add_subcommand("siegel", "symplectic group and Siegel space geometry");
    siegel_cmd->require_subcommand(1);
    static std::string m_str, om_str, om0_str, om1_str, l1s, l2s, l3s;
    static int voln = 1;
    {
        auto* act_cmd = siegel_cmd->add_subcommand("act", "apply M . Omega");
        act_cmd->add_option("--matrix", m_str, "2n x 2n symplectic matrix (JSON)")->required();
        act_cmd->add_option("--omega", om_str, "Siegel point (JSON complex matrix)")->required();
        add_common(act_cmd, c);
        act_cmd->callback([&] {
            run = [&]() -> int {
                SymplecticMatrix m(decode_rmat(parse_json_arg(m_str)), 1e-9);
                SiegelPoint om(decode_cmat(parse_json_arg(om_str)));
                SiegelPoint moved = act(m, om);
                Report rep;
                rep.command = "siegel act";
                rep.inputs = {{"matrix", parse_json_arg(m_str)}, {"omega", parse_json_arg(om_str)}};
                rep.values["omega"] = encode_cmat(moved.omega);
                rep.values["automorphic_factor"] = encode_complex(automorphic_factor(m, om));
                return finish(rep, c);
            };
        });

        auto* dist_cmd = siegel_cmd->add_subcommand("distance", "geodesic distance");
        dist_cmd->add_option("--omega0", om0_str)->required();
        dist_cmd->add_option("--omega1", om1_str)->required();
        add_common(dist_cmd, c);
        dist_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint a(decode_cmat(parse_json_arg(om0_str)));
                SiegelPoint b(decode_cmat(parse_json_arg(om1_str)));
                Report rep;
                rep.command = "siegel distance";
                rep.values["rho"] = geodesic_distance(a, b);
                return finish(rep, c);
            };
        });

        auto* red_cmd = siegel_cmd->add_subcommand("reduce", "Siegel reduction, n <= 2");
        red_cmd->add_option("--omega", om_str)->required();
        add_common(red_cmd, c);
        red_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint om(decode_cmat(parse_json_arg(om_str)));
                SiegelReduction r = siegel_reduce(om);
                Report rep;
                rep.command = "siegel reduce";
                rep.values["reduced"] = encode_cmat(r.reduced.omega);
                rep.values["gamma"] = encode_rmat(r.gamma.mat());
                rep.values["iterations"] = r.iterations;
                return finish(rep, c);
            };
        });

        auto* vol_cmd = siegel_cmd->add_subcommand("volume", "exact vol(F_n)");
        vol_cmd->add_option("--n", voln, "degree")->required();
        add_common(vol_cmd, c);
        vol_cmd->callback([&] {
            run = [&]() -> int {
                SymbolicScalar v = siegel_volume(voln);
                Report rep;
                rep.command = "siegel volume";
                rep.inputs["n"] = voln;
                const auto& [key, q] = *v.terms().begin();
                std::string txt = "pi^" + std::to_string(key.half_pi_pow / 2);
                if (q.re.get_num() != 1) txt = q.re.get_num().get_str() + "*" + txt;
                if (q.re.get_den() != 1) txt += "/" + q.re.get_den().get_str();
                rep.values["value"] = txt;
                rep.values["numeric"] = v.to_complex().real();
                return finish(rep, c);
            };
        });

        auto* mas_cmd = siegel_cmd->add_subcommand("maslov", "Maslov index of a Lagrangian triple");
        mas_cmd->add_option("--l1", l1s, "n x 2n basis (JSON)")->required();
        mas_cmd->add_option("--l2", l2s)->required();
        mas_cmd->add_option("--l3", l3s)->required();
        add_common(mas_cmd, c);
        mas_cmd->callback([&] {
            run = [&]() -> int {
                LagrangianSubspace l1(decode_rmat(parse_json_arg(l1s)));
                LagrangianSubspace l2(decode_rmat(parse_json_arg(l2s)));
                LagrangianSubspace l3(decode_rmat(parse_json_arg(l3s)));
                Report rep;
                rep.command = "siegel maslov";
                rep.values["tau"] = maslov_index(l1, l2, l3);
                return finish(rep, c);
            };
        });
    }

    // ---------------- heis ----------------
    auto* heis_cmd = app.add_subcommand("heis", "Heisenberg group operations");
    heis_cmd->require_subcommand(1);
    static std::string g1_str, g2_str, f_str;
    {
        auto* mul_cmd = heis_cmd->add_subcommand("mul", "group product");
        mul_cmd->add_option("--g1", g1_str, "element (JSON)")->required();
        mul_cmd->add_option("--g2", g2_str)->required();
        add_common(mul_cmd, c);
        mul_cmd->callback([&] {
            run = [&]() -> int {
                HeisenbergElement a = decode_heisenberg(parse_json_arg(g1_str));
                HeisenbergElement b = decode_heisenberg(parse_json_arg(g2_str));
                Report rep;
                rep.command = "heis mul";
                rep.values["product"] = encode_heisenberg(heis_mul(a, b));
                return finish(rep, c);
            };
        });

        auto* emb_cmd = heis_cmd->add_subcommand("embed", "symplectic embedding");
        emb_cmd->add_option("--g1", g1_str)->required();
        add_common(emb_cmd, c);
        emb_cmd->callback([&] {
            run = [&]() -> int {
                HeisenbergElement a = decode_heisenberg(parse_json_arg(g1_str));
                Report rep;
                rep.command = "heis embed";
                RatMat e = embed_sp(a);
                rep.values["matrix"] = encode_ratmat(e);
                rep.residuals["symplectic_exact"] = is_symplectic_exact(e) ? 0.0 : 1.0;
                return finish(rep, c);
            };
        });

        auto* coad_cmd = heis_cmd->add_subcommand("coadjoint", "coadjoint action on F(a,b,c)");
        coad_cmd->add_option("--g1", g1_str)->required();
        coad_cmd->add_option("--functional", f_str, "{a, b, c} (JSON)")->required();
        add_common(coad_cmd, c);
        coad_cmd->callback([&] {
            run = [&]() -> int {
                HeisenbergElement g = decode_heisenberg(parse_json_arg(g1_str));
                json fj = parse_json_arg(f_str);
                CoadjointFunctional f(decode_ratmat(fj.at("a")), decode_ratmat(fj.at("b")),
                                      decode_ratmat(fj.at("c")));
                CoadjointFunctional moved = coadjoint(g, f);
                Report rep;
                rep.command = "heis coadjoint";
                rep.values["a"] = encode_ratmat(moved.a);
                rep.values["b"] = encode_ratmat(moved.b);
                rep.values["c"] = encode_ratmat(moved.c);
                return finish(rep, c);
            };
        });

        auto* act_cmd = heis_cmd->add_subcommand(
            "act", "Schroedinger composition check on a Gaussian-polynomial state");
        add_common(act_cmd, c);
        act_cmd->callback([&] {
            run = [&]() -> int {
                std::mt19937_64 g(static_cast<unsigned long>(c.seed));
                int m = 1 + static_cast<int>(g() % 2), n = 1 + static_cast<int>(g() % 2);
                auto elem = [&]() {
                    RatMat lam = random_half_int(g, m, n), mu = random_half_int(g, m, n);
                    RatMat sym = random_half_int(g, m, m);
                    sym = Rational(1, 2) * (sym + sym.transpose());
                    return HeisenbergElement(lam, mu, sym - mu * lam.transpose(), HeisLaw::Circle);
                };
                GaussianPolynomialState f = ground_state(m, n);
                HeisenbergElement g1 = elem(), g2 = elem();
                GaussianPolynomialState lhs = schrodinger_act(g1, schrodinger_act(g2, f));
                GaussianPolynomialState rhs = schrodinger_act(heis_mul(g1, g2), f);
                Report rep;
                rep.command = "heis act";
                rep.inputs["m"] = m;
                rep.inputs["n"] = n;
                rep.residuals["composition_exact"] = state_equal(lhs, rhs) ? 0.0 : 1.0;
                SymbolicScalar norm0 = gaussian_inner(f, f);
                SymbolicScalar norm1 = gaussian_inner(lhs, lhs);
                rep.residuals["norm_preserved_exact"] = (norm0 == norm1) ? 0.0 : 1.0;
                return finish(rep, c);
            };
        });
    }

    // ---------------- theta ----------------
    auto* theta_cmd = app.add_subcommand("theta", "theta series with characteristics");
    theta_cmd->require_subcommand(1);
    static std::string s_str = "[[1]]", tom_str = "[[[0,1]]]", a_str, b_str, w_str;
    static std::string char_a = "[0]", char_b = "[0]";
    static int tm = 1, tn = 1;
    static double m_index = 1.0;
    {
        auto* eval_cmd = theta_cmd->add_subcommand("eval", "theta^{(S)}[A,B](Omega, W)");
        eval_cmd->add_option("--m", tm);
        eval_cmd->add_option("--n", tn);
        eval_cmd->add_option("--S", s_str, "positive definite S (JSON)");
        eval_cmd->add_option("--omega", tom_str, "Siegel point (JSON)");
        eval_cmd->add_option("--A", a_str);
        eval_cmd->add_option("--B", b_str);
        eval_cmd->add_option("--W", w_str);
        add_common(eval_cmd, c);
        eval_cmd->callback([&] {
            run = [&]() -> int {
                json fin = file_inputs(c);
                RMat s = decode_rmat(fin.contains("S") ? fin["S"] : parse_json_arg(s_str));
                SiegelPoint om(
                    decode_cmat(fin.contains("omega") ? fin["omega"] : parse_json_arg(tom_str)));
                int m = static_cast<int>(s.rows()), n = om.degree();
                RMat a = fin.contains("A") ? decode_rmat(fin["A"])
                         : a_str.empty() ? RMat::Zero(m, n)
                                         : decode_rmat(parse_json_arg(a_str));
                RMat b = fin.contains("B") ? decode_rmat(fin["B"])
                         : b_str.empty() ? RMat::Zero(m, n)
                                         : decode_rmat(parse_json_arg(b_str));
                CMat w = fin.contains("W") ? decode_cmat(fin["W"])
                         : w_str.empty() ? CMat::Zero(m, n)
                                         : decode_cmat(parse_json_arg(w_str));
                ThetaSpec spec(s, a, b, policy_of(c));
                LatticeSumResult r = theta_char(spec, om, w);
                Report rep;
                rep.command = "theta eval";
                rep.inputs["S"] = encode_rmat(s);
                rep.inputs["omega"] = encode_cmat(om.omega);
                rep.values["value"] = encode_complex(r.value);
                rep.values["radius"] = r.radius;
                rep.values["terms"] = r.terms;
                rep.tail_bounds["value"] = r.tail_bound;
                return finish(rep, c);
            };
        });

        auto* inv_cmd = theta_cmd->add_subcommand("inversion", "theta inversion-law residual");
        inv_cmd->add_option("--S", s_str);
        inv_cmd->add_option("--n", tn);
        add_common(inv_cmd, c);
        inv_cmd->callback([&] {
            run = [&]() -> int {
                std::mt19937_64 g(static_cast<unsigned long>(c.seed));
                RMat s = decode_rmat(parse_json_arg(s_str));
                int m = static_cast<int>(s.rows());
                SiegelPoint om = random_siegel_pt(g, tn);
                SiegelPoint mom(CMat((-om.omega.inverse()).eval()), 1e-8);
                LatticeSumResult lhs = theta_series(s.inverse(), mom, policy_of(c));
                LatticeSumResult rhs = theta_series(s, om, policy_of(c));
                cplx h = principal_halfplane_sqrt_det(om);
                cplx factor = std::pow(s.determinant(), 0.5 * tn) * std::pow(h, m);
                double resid = std::abs(lhs.value - factor * rhs.value) / std::abs(lhs.value);
                Report rep;
                rep.command = "theta inversion";
                rep.inputs["S"] = parse_json_arg(s_str);
                rep.values["theta_S"] = encode_complex(rhs.value);
                rep.values["theta_Sinv_at_inverted"] = encode_complex(lhs.value);
                rep.residuals["inversion"] = resid;
                rep.tail_bounds["theta_S"] = rhs.tail_bound;
                return finish(rep, c);
            };
        });

        auto* null_cmd = theta_cmd->add_subcommand("null", "thetanullwerte");
        null_cmd->add_option("--omega", tom_str);
        null_cmd->add_option("--a", char_a, "binary characteristic a (JSON array)");
        null_cmd->add_option("--b", char_b);
        add_common(null_cmd, c);
        null_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint om(decode_cmat(parse_json_arg(tom_str)));
                IntCharacteristic ch;
                for (const auto& v : parse_json_arg(char_a)) ch.a.push_back(v.get<int>());
                for (const auto& v : parse_json_arg(char_b)) ch.b.push_back(v.get<int>());
                LatticeSumResult r = theta_null(om, ch, policy_of(c));
                Report rep;
                rep.command = "theta null";
                rep.values["value"] = encode_complex(r.value);
                rep.values["even"] = ch.even();
                rep.tail_bounds["value"] = r.tail_bound;
                return finish(rep, c);
            };
        });

        auto* delta_cmd = theta_cmd->add_subcommand("delta", "Delta^(n), n <= 2");
        delta_cmd->add_option("--omega", tom_str);
        add_common(delta_cmd, c);
        delta_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint om(decode_cmat(parse_json_arg(tom_str)));
                LatticeSumResult r = delta_n(om, policy_of(c));
                Report rep;
                rep.command = "theta delta";
                rep.values["value"] = encode_complex(r.value);
                rep.tail_bounds["value"] = r.tail_bound;
                return finish(rep, c);
            };
        });

        auto* invar_cmd =
            theta_cmd->add_subcommand("invariance", "lattice-shift invariance of the index-M theta family");
        invar_cmd->add_option("--index", m_index, "positive index M (m = n = 1)");
        add_common(invar_cmd, c);
        invar_cmd->callback([&] {
            run = [&]() -> int {
                std::mt19937_64 g(static_cast<unsigned long>(c.seed));
                std::uniform_int_distribution<int> iv(-2, 2);
                SiegelPoint om = random_siegel_pt(g, 1);
                RMat mm2(1, 1);
                mm2 << m_index;
                long lv = iv(g), mv = iv(g), kv = iv(g);
                bool integral_index = (m_index == std::floor(m_index));
                if (!integral_index && ((kv - lv * mv) % 2) != 0) kv += 1;
                RatMat lam(1, 1), mu(1, 1), kap(1, 1);
                lam(0, 0) = lv;
                mu(0, 0) = mv;
                kap(0, 0) = kv;
                HeisenbergElement gamma(lam, mu, kap, HeisLaw::Circle);
                HeisenbergElement base(random_half_int(g, 1, 1), random_half_int(g, 1, 1),
                                       random_half_int(g, 1, 1), HeisLaw::Circle);
                cplx lhs = lattice_rep_theta(mm2, MultiIndex(1, 1), RMat::Zero(1, 1), om,
                                             heis_mul(gamma, base), policy_of(c))
                               .value;
                cplx rhs = lattice_rep_theta(mm2, MultiIndex(1, 1), RMat::Zero(1, 1), om, base,
                                             policy_of(c))
                               .value;
                Report rep;
                rep.command = "theta invariance";
                rep.inputs["index"] = m_index;
                rep.values["value"] = encode_complex(rhs);
                rep.residuals["invariance"] = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
                return finish(rep, c);
            };
        });
    }

    // ---------------- harmonic ----------------
    auto* harm_cmd = app.add_subcommand("harmonic", "pluriharmonic polynomial algebra");
    harm_cmd->require_subcommand(1);
    static std::string hs_str = "[[1]]", p_str = "[]", hal_str, hbe_str, hom_str = "[[[0,1]]]";
    static int hm = 1, hn = 1;
    {
        auto* chk_cmd = harm_cmd->add_subcommand("check", "pluriharmonicity test");
        chk_cmd->add_option("--m", hm);
        chk_cmd->add_option("--n", hn);
        chk_cmd->add_option("--S", hs_str, "rational S (JSON, {num,den} entries or ints)");
        chk_cmd->add_option("--poly", p_str, "polynomial (JSON)");
        add_common(chk_cmd, c);
        chk_cmd->callback([&] {
            run = [&]() -> int {
                RatMat s = decode_ratmat(parse_json_arg(hs_str));
                RatPoly p = decode_polynomial(parse_json_arg(p_str), hm, hn);
                Report rep;
                rep.command = "harmonic check";
                rep.values["pluriharmonic"] = is_pluriharmonic(p, s, hm, hn);
                return finish(rep, c);
            };
        });

        auto* dec_cmd = harm_cmd->add_subcommand("decompose", "orthogonal splitting P = h + ideal");
        dec_cmd->add_option("--m", hm);
        dec_cmd->add_option("--n", hn);
        dec_cmd->add_option("--S", hs_str);
        dec_cmd->add_option("--poly", p_str);
        add_common(dec_cmd, c);
        dec_cmd->callback([&] {
            run = [&]() -> int {
                RatMat s = decode_ratmat(parse_json_arg(hs_str));
                RatPoly p = decode_polynomial(parse_json_arg(p_str), hm, hn);
                HarmonicDecomposition d = decompose(p, s, hm, hn);
                Report rep;
                rep.command = "harmonic decompose";
                rep.values["harmonic"] = encode_polynomial(d.h, hm, hn);
                rep.values["ideal"] = encode_polynomial(d.ideal_part, hm, hn);
                bool ok = is_pluriharmonic(d.h, s, hm, hn) &&
                          pairing(d.h, d.ideal_part) == GaussianRational(0) &&
                          (d.h + d.ideal_part) == p;
                rep.residuals["invariants_exact"] = ok ? 0.0 : 1.0;
                return finish(rep, c);
            };
        });

        auto* ts_cmd = harm_cmd->add_subcommand("theta", "spherical theta series value");
        ts_cmd->add_option("--m", hm);
        ts_cmd->add_option("--n", hn);
        ts_cmd->add_option("--S", hs_str);
        ts_cmd->add_option("--poly", p_str);
        ts_cmd->add_option("--omega", hom_str);
        ts_cmd->add_option("--alpha", hal_str);
        ts_cmd->add_option("--beta", hbe_str);
        add_common(ts_cmd, c);
        ts_cmd->callback([&] {
            run = [&]() -> int {
                RatMat s = decode_ratmat(parse_json_arg(hs_str));
                RatPoly p = decode_polynomial(parse_json_arg(p_str), hm, hn);
                SiegelPoint om(decode_cmat(parse_json_arg(hom_str)));
                RMat alpha =
                    hal_str.empty() ? RMat::Zero(hm, hn) : decode_rmat(parse_json_arg(hal_str));
                RMat beta =
                    hbe_str.empty() ? RMat::Zero(hm, hn) : decode_rmat(parse_json_arg(hbe_str));
                LatticeSumResult r = theta_spherical(to_rmat(s), to_cpoly(p), alpha, beta, om,
                                                     CMat::Zero(hm, hn), policy_of(c));
                Report rep;
                rep.command = "harmonic theta";
                rep.values["value"] = encode_complex(r.value);
                rep.tail_bounds["value"] = r.tail_bound;
                return finish(rep, c);
            };
        });
    }

    // ---------------- hermite ----------------
    auto* herm_cmd = app.add_subcommand("hermite", "Hermite ladder calculus");
    herm_cmd->require_subcommand(1);
    static int km = 1, kn = 1, cap = 3;
    static std::string j_str = "[[0]]";
    {
        auto* eval_cmd = herm_cmd->add_subcommand("eval", "h_J polynomial part");
        eval_cmd->add_option("--m", km);
        eval_cmd->add_option("--n", kn);
        eval_cmd->add_option("--J", j_str, "multi-index entries (JSON nested)");
        add_common(eval_cmd, c);
        eval_cmd->callback([&] {
            run = [&]() -> int {
                json jj = parse_json_arg(j_str);
                MultiIndex j(km, kn);
                for (int k = 0; k < km; ++k)
                    for (int a = 0; a < kn; ++a) j(k, a) = jj[k][a].get<unsigned>();
                SymPoly p = hermite_p(j);
                Report rep;
                rep.command = "hermite eval";
                rep.inputs["J"] = jj;
                json terms = json::array();
                for (const auto& [e, coef] : p.terms()) {
                    json t;
                    t["exps"] = e;
                    t["coef"] = coef.str();
                    terms.push_back(t);
                }
                rep.values["P_J"] = terms;
                return finish(rep, c);
            };
        });

        auto* ortho_cmd = herm_cmd->add_subcommand("ortho", "exact orthonormality sweep");
        ortho_cmd->add_option("--m", km);
        ortho_cmd->add_option("--n", kn);
        ortho_cmd->add_option("--cap", cap, "check |J|, |K| <= cap");
        add_common(ortho_cmd, c);
        ortho_cmd->callback([&] {
            run = [&]() -> int {
                auto idx = multiindex_iter(km, kn, static_cast<unsigned>(cap));
                bool ok = true;
                for (const auto& j : idx)
                    for (const auto& k : idx) {
                        SymbolicScalar ip = gaussian_inner(hermite_h(j), hermite_h(k));
                        ok = ok && (j == k ? ip == SymbolicScalar(1) : ip.is_zero());
                    }
                Report rep;
                rep.command = "hermite ortho";
                rep.inputs["cap"] = cap;
                rep.residuals["orthonormality_exact"] = ok ? 0.0 : 1.0;
                return finish(rep, c);
            };
        });

        auto* four_cmd = herm_cmd->add_subcommand("fourier", "F h_J = (-i)^{|J|} h_J sweep");
        four_cmd->add_option("--m", km);
        four_cmd->add_option("--n", kn);
        four_cmd->add_option("--cap", cap);
        add_common(four_cmd, c);
        four_cmd->callback([&] {
            run = [&]() -> int {
                bool ok = true;
                for (const auto& j : multiindex_iter(km, kn, static_cast<unsigned>(cap))) {
                    GaussianPolynomialState h = hermite_h(j);
                    GaussianPolynomialState fh = fourier(h, Rational(2));
                    SymbolicScalar eig{GaussianRational(i_pow(-static_cast<long>(j.total())))};
                    ok = ok && (fh.p == h.p.scaled(eig));
                }
                Report rep;
                rep.command = "hermite fourier";
                rep.residuals["eigenrelation_exact"] = ok ? 0.0 : 1.0;
                return finish(rep, c);
            };
        });

        auto* ham_cmd = herm_cmd->add_subcommand("hamiltonian", "H h_J = 8 pi (J + 1/2) h_J sweep");
        ham_cmd->add_option("--m", km);
        ham_cmd->add_option("--n", kn);
        ham_cmd->add_option("--cap", cap);
        add_common(ham_cmd, c);
        ham_cmd->callback([&] {
            run = [&]() -> int {
                bool ok = true;
                for (const auto& j : multiindex_iter(km, kn, static_cast<unsigned>(cap)))
                    for (int k = 0; k < km; ++k)
                        for (int a = 0; a < kn; ++a)
                            ok = ok && hermite_operator_residual(j, k, a).is_zero();
                Report rep;
                rep.command = "hermite hamiltonian";
                rep.residuals["eigenrelation_exact"] = ok ? 0.0 : 1.0;
                return finish(rep, c);
            };
        });
    }

    // ---------------- fock ----------------
    auto* fock_cmd = app.add_subcommand("fock", "Fock space and the Bargmann transform");
    fock_cmd->require_subcommand(1);
    static double mval = 1.0;
    static std::string fw_str = "[0.3, 0.2]", fwp_str = "[0.1, -0.4]", fj_str = "[[1]]";
    static unsigned bj = 0;
    {
        auto* basis_cmd = fock_cmd->add_subcommand("basis", "Phi_{M,J}(W)");
        basis_cmd->add_option("--M", mval);
        basis_cmd->add_option("--J", fj_str);
        basis_cmd->add_option("--W", fw_str, "complex scalar [re, im]");
        add_common(basis_cmd, c);
        basis_cmd->callback([&] {
            run = [&]() -> int {
                RMat mm(1, 1);
                mm << mval;
                json jj = parse_json_arg(fj_str);
                MultiIndex j(1, 1);
                j(0, 0) = jj[0][0].get<unsigned>();
                CMat w(1, 1);
                w(0, 0) = decode_complex(parse_json_arg(fw_str));
                Report rep;
                rep.command = "fock basis";
                rep.values["value"] = encode_complex(fock_basis_eval(mm, j, w));
                return finish(rep, c);
            };
        });

        auto* ker_cmd = fock_cmd->add_subcommand("kernel", "truncated kernel vs closed form");
        ker_cmd->add_option("--M", mval);
        ker_cmd->add_option("--W", fw_str);
        ker_cmd->add_option("--Wp", fwp_str);
        add_common(ker_cmd, c);
        ker_cmd->callback([&] {
            run = [&]() -> int {
                RMat mm(1, 1);
                mm << mval;
                CMat w(1, 1), wp(1, 1);
                w(0, 0) = decode_complex(parse_json_arg(fw_str));
                wp(0, 0) = decode_complex(parse_json_arg(fwp_str));
                cplx closed = fock_kernel_closed(mm, w, wp);
                cplx trunc = fock_kernel_truncated(mm, w, wp, 24);
                Report rep;
                rep.command = "fock kernel";
                rep.values["closed"] = encode_complex(closed);
                rep.values["truncated"] = encode_complex(trunc);
                rep.residuals["kernel"] = std::abs(closed - trunc);
                return finish(rep, c);
            };
        });

        auto* barg_cmd = fock_cmd->add_subcommand("bargmann", "I_M h_j against kappa_M Phi_j");
        barg_cmd->add_option("--M", mval);
        barg_cmd->add_option("--j", bj);
        barg_cmd->add_option("--W", fw_str);
        add_common(barg_cmd, c);
        barg_cmd->callback([&] {
            run = [&]() -> int {
                cplx w = decode_complex(parse_json_arg(fw_str));
                cplx lhs = bargmann_transform(
                    mval, [&](double u) { return cplx(taylor_hermite(mval, bj, u), 0.0); }, w);
                RMat mm(1, 1);
                mm << mval;
                MultiIndex j(1, 1);
                j(0, 0) = bj;
                CMat wm(1, 1);
                wm(0, 0) = w;
                cplx rhs = bargmann_image_constant(mval) * fock_basis_eval(mm, j, wm);
                Report rep;
                rep.command = "fock bargmann";
                rep.values["transform"] = encode_complex(lhs);
                rep.values["expected"] = encode_complex(rhs);
                rep.residuals["intertwiner"] = std::abs(lhs - rhs);
                return finish(rep, c);
            };
        });
    }

    // ---------------- weil ----------------
    auto* weil_cmd = app.add_subcommand("weil", "Weil representation on Gaussian states");
    weil_cmd->require_subcommand(1);
    static int wn = 2, wm = 2, wlen = 3, reps = 20;
    static std::string wm_str = "[[0.5]]", wom_str = "[[[0,1]]]", ws_str = "[[2,0],[0,4]]";
    {
        auto* act_cmd = weil_cmd->add_subcommand("act", "generator word on a Gaussian state");
        act_cmd->add_option("--n", wn);
        act_cmd->add_option("--m", wm);
        act_cmd->add_option("--len", wlen);
        add_common(act_cmd, c);
        act_cmd->callback([&] {
            run = [&]() -> int {
                std::mt19937_64 g(static_cast<unsigned long>(c.seed));
                GaussianState f;
                f.omega = random_siegel_pt(g, wn);
                f.c = RMat::Identity(wm, wm);
                GeneratorWord w = random_gen_word(g, wn, wlen);
                GaussianState out = omega_apply(w, f);
                Report rep;
                rep.command = "weil act";
                rep.values["omega"] = encode_cmat(out.omega.omega);
                rep.values["amplitude"] = encode_complex(out.amp);
                return finish(rep, c);
            };
        });

        auto* cov_cmd = weil_cmd->add_subcommand("covariance", "branch-free covariance check");
        cov_cmd->add_option("--n", wn);
        cov_cmd->add_option("--m", wm);
        cov_cmd->add_option("--len", wlen);
        cov_cmd->add_option("--reps", reps);
        add_common(cov_cmd, c);
        cov_cmd->callback([&] {
            run = [&]() -> int {
                std::mt19937_64 g(static_cast<unsigned long>(c.seed));
                std::uniform_int_distribution<int> num(-3, 3);
                int bad = 0;
                for (int rep2 = 0; rep2 < reps; ++rep2) {
                    GaussMat om(wn, wn);
                    for (int i = 0; i < wn; ++i)
                        for (int j = i; j < wn; ++j)
                            om(i, j) = om(j, i) = GaussianRational(
                                ratio(num(g), 2),
                                i == j ? ratio(num(g) + 5, 2) : ratio(num(g), 8));
                    ExactSiegelPoint ep(om);
                    GeneratorWord w = random_gen_word(g, wn, wlen);
                    CovarianceCheck cc = covariance_check(w, ep, wm);
                    if (!cc.omega_match || !cc.ratio_squared_one) ++bad;
                }
                Report rep;
                rep.command = "weil covariance";
                rep.inputs["reps"] = reps;
                rep.residuals["failures"] = static_cast<double>(bad);
                return finish(rep, c);
            };
        });

        auto* coc_cmd = weil_cmd->add_subcommand("cocycle", "cocycle condition residual sweep");
        coc_cmd->add_option("--n", wn);
        coc_cmd->add_option("--reps", reps);
        add_common(coc_cmd, c);
        coc_cmd->callback([&] {
            run = [&]() -> int {
                std::mt19937_64 g(static_cast<unsigned long>(c.seed));
                double worst = 0.0;
                for (int rep2 = 0; rep2 < reps; ++rep2) {
                    SymplecticMatrix a = random_symp(g, wn), b = random_symp(g, wn),
                                     d = random_symp(g, wn);
                    worst = std::max(worst, cocycle_condition_residual(a, b, d));
                }
                Report rep;
                rep.command = "weil cocycle";
                rep.inputs["reps"] = reps;
                rep.residuals["cocycle"] = worst;
                return finish(rep, c);
            };
        });

        auto* lift_cmd = weil_cmd->add_subcommand("lift", "Theta_M(Omega)");
        lift_cmd->add_option("--M", wm_str);
        lift_cmd->add_option("--omega", wom_str);
        add_common(lift_cmd, c);
        lift_cmd->callback([&] {
            run = [&]() -> int {
                RMat m = decode_rmat(parse_json_arg(wm_str));
                SiegelPoint om(decode_cmat(parse_json_arg(wom_str)));
                LatticeSumResult r = theta_lift(m, om, policy_of(c));
                Report rep;
                rep.command = "weil lift";
                rep.values["value"] = encode_complex(r.value);
                rep.tail_bounds["value"] = r.tail_bound;
                return finish(rep, c);
            };
        });

        auto* poi_cmd = weil_cmd->add_subcommand("poisson", "Poisson summation residual");
        poi_cmd->add_option("--omega", wom_str);
        add_common(poi_cmd, c);
        poi_cmd->callback([&] {
            run = [&]() -> int {
                GaussianState f;
                f.omega = SiegelPoint(decode_cmat(parse_json_arg(wom_str)));
                f.c = RMat::Identity(1, 1);
                Report rep;
                rep.command = "weil poisson";
                rep.residuals["poisson"] = poisson_residual(f, policy_of(c));
                return finish(rep, c);
            };
        });

        auto* nu_cmd = weil_cmd->add_subcommand("nu", "unimodular-ratio check for theta_S");
        nu_cmd->add_option("--S", ws_str);
        add_common(nu_cmd, c);
        nu_cmd->callback([&] {
            run = [&]() -> int {
                std::mt19937_64 g(static_cast<unsigned long>(c.seed));
                RMat s = decode_rmat(parse_json_arg(ws_str));
                long q = level_of_even(rat_from_rmat(s));
                RMat gm(2, 2);
                gm << 1, 0, static_cast<double>(q), 1;
                std::vector<SiegelPoint> pts;
                for (int i = 0; i < 3; ++i) pts.push_back(random_siegel_pt(g, 1));
                NuRatioReport nu = nu_ratio(s, SymplecticMatrix(gm), pts, policy_of(c));
                Report rep;
                rep.command = "weil nu";
                rep.inputs["S"] = parse_json_arg(ws_str);
                rep.values["level"] = q;
                rep.values["ratio"] = encode_complex(nu.ratio);
                rep.residuals["modulus"] = nu.modulus_dev;
                rep.residuals["omega_independence"] = nu.omega_spread;
                return finish(rep, c);
            };
        });
    }

    // ---------------- abelian ----------------
    auto* ab_cmd = app.add_subcommand("abelian", "spectral data of A_Omega");
    ab_cmd->require_subcommand(1);
    static std::string aom_str = "[[[0,1]]]", aa_str = "[[1]]", ab_str = "[[0]]", az_str;
    static int qa = 1, qb = 0, qap = 1, qbp = 0;
    {
        auto* eig_cmd = ab_cmd->add_subcommand("eigen", "E_{Omega;A,B} value");
        eig_cmd->add_option("--omega", aom_str);
        eig_cmd->add_option("--A", aa_str);
        eig_cmd->add_option("--B", ab_str);
        eig_cmd->add_option("--Z", az_str)->required();
        add_common(eig_cmd, c);
        eig_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint om(decode_cmat(parse_json_arg(aom_str)));
                RMat ar = decode_rmat(parse_json_arg(aa_str));
                RMat br = decode_rmat(parse_json_arg(ab_str));
                CMat z = decode_cmat(parse_json_arg(az_str));
                Report rep;
                rep.command = "abelian eigen";
                rep.values["value"] =
                    encode_complex(eigenfunction_eval(om, ar.cast<int>(), br.cast<int>(), z));
                return finish(rep, c);
            };
        });

        auto* spec_cmd = ab_cmd->add_subcommand("spectrum", "Laplacian eigenvalue of E_{A,B}");
        spec_cmd->add_option("--omega", aom_str);
        spec_cmd->add_option("--A", aa_str);
        spec_cmd->add_option("--B", ab_str);
        add_common(spec_cmd, c);
        spec_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint om(decode_cmat(parse_json_arg(aom_str)));
                RMat ar = decode_rmat(parse_json_arg(aa_str));
                RMat br = decode_rmat(parse_json_arg(ab_str));
                std::vector<CMat> samples{CMat::Random(ar.rows(), ar.cols())};
                double dev = 0.0;
                double ev =
                    laplacian_eigenvalue(om, ar.cast<int>(), br.cast<int>(), samples, &dev);
                Report rep;
                rep.command = "abelian spectrum";
                rep.values["eigenvalue"] = ev;
                rep.residuals["constancy"] = dev;
                return finish(rep, c);
            };
        });

        auto* red_cmd = ab_cmd->add_subcommand("reduce", "fundamental-domain representative");
        red_cmd->add_option("--omega", aom_str);
        red_cmd->add_option("--Z", az_str)->required();
        add_common(red_cmd, c);
        red_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint om(decode_cmat(parse_json_arg(aom_str)));
                CMat z = decode_cmat(parse_json_arg(az_str));
                FundamentalDomainPoint fd = fundamental_domain_member(om, z);
                Report rep;
                rep.command = "abelian reduce";
                rep.values["inside"] = fd.inside;
                rep.values["reduced"] = encode_cmat(fd.reduced);
                rep.values["lambda"] = fd.lambda(0, 0);
                rep.values["mu"] = fd.mu(0, 0);
                return finish(rep, c);
            };
        });

        auto* orth_cmd = ab_cmd->add_subcommand("ortho", "orthonormality with quadrature check");
        orth_cmd->add_option("--omega", aom_str);
        orth_cmd->add_option("--a", qa);
        orth_cmd->add_option("--b", qb);
        orth_cmd->add_option("--ap", qap);
        orth_cmd->add_option("--bp", qbp);
        add_common(orth_cmd, c);
        orth_cmd->callback([&] {
            run = [&]() -> int {
                SiegelPoint om(decode_cmat(parse_json_arg(aom_str)));
                Eigen::MatrixXi a(1, 1), b(1, 1), ap(1, 1), bp(1, 1);
                a(0, 0) = qa;
                b(0, 0) = qb;
                ap(0, 0) = qap;
                bp(0, 0) = qbp;
                int exact = orthonormality_exact(a, b, ap, bp);
                cplx quad = orthonormality_quadrature(om, qa, qb, qap, qbp, 32);
                Report rep;
                rep.command = "abelian ortho";
                rep.values["exact"] = exact;
                rep.values["quadrature"] = encode_complex(quad);
                rep.residuals["cross_check"] = std::abs(quad - cplx(exact, 0.0));
                return finish(rep, c);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run) return run();
    } catch (const structural_error& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
