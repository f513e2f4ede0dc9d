#include "fglwb/genera.hpp"

namespace fglwb {

GradedPoly genus_eval(const ClassifyingMap& map, const GradedPoly& cls) {
    if (cls.max_weight() > map.N)
        throw DomainError("genus_eval: class of weight " + std::to_string(cls.max_weight()) +
                          " exceeds the map's weight bound " + std::to_string(map.N));
    return substitute(cls, map.images, map.N);
}

PolySeries map_series(const ClassifyingMap& map, const PolySeries& s) {
    return series_map<GradedPoly>(s, [&](const GradedPoly& c) { return genus_eval(map, c); });
}

PolySeries kh_residual(const PolySeries& f, int order) {
    PolySeries fo = f.truncated(order + 1);
    PolySeries d1 = series_derive(fo);  // order `order`
    PolySeries d2 = series_derive(d1).truncated(order);
    fo = fo.truncated(order);
    PolySeries lhs_inner = d2 * fo - d1 * d1;
    PolySeries lhs = lhs_inner * lhs_inner;

    // f'^4 + q1 f'^3 f + q2 f'^2 f^2 + q3 f' f^3 + q4 f^4
    std::vector<PolySeries> dp{PolySeries::constant(order, 1)}, fp{PolySeries::constant(order, 1)};
    for (int k = 1; k <= 4; ++k) {
        dp.push_back(dp.back() * d1);
        fp.push_back(fp.back() * fo);
    }
    PolySeries rhs = dp[4];
    for (int i = 1; i <= 4; ++i) rhs += (dp[4 - i] * fp[i]).scaled(GradedPoly::q(i));
    return lhs - rhs;
}

KHSolution kh_solve(int N) {
    if (N < 2) throw DomainError("kh_solve: N must be >= 2");
    KHSolution sol;
    sol.N = N;
    int K = N + 1;
    PolySeries f = PolySeries::variable(K);
    for (int k = 2; k <= K; ++k) {
        // With a_k = 0 the x^(k-1) residual is E0; d/da_k of it is -2k(k-1).
        GradedPoly e0 = kh_residual(f, k - 1)[k - 1];
        f[k] = e0 * Rat(1, 2 * k * (k - 1));
        if (!kh_residual(f, k - 1)[k - 1].is_zero())
            throw ConsistencyError("kh_solve: linear solve failed at order " + std::to_string(k));
    }
    sol.f = f;
    sol.g = series_revert(f);
    PolySeries gp = series_derive(sol.g);
    sol.phi.name = "kh";
    sol.phi.N = N;
    for (int n = 1; n <= N; ++n) sol.phi.images[Generator::cp(n)] = gp[n];
    for (int i = 1; i <= 4; ++i) sol.phi.target_gens.push_back(Generator::q(i));
    return sol;
}

ClassifyingMap schreieder_genus(int N) {
    if (N < 1) throw DomainError("schreieder_genus: N must be >= 1");
    PolySeries radicand(N);
    radicand[0] = GradedPoly(1);
    for (int i = 1; i <= 4 && i <= N; ++i) radicand[i] = GradedPoly::q(i);
    PolySeries logp = series_binomial_pow(radicand, Rat(-1, 2));
    ClassifyingMap map;
    map.name = "schreieder";
    map.N = N;
    for (int n = 1; n <= N; ++n) map.images[Generator::cp(n)] = logp[n];
    for (int i = 1; i <= 4; ++i) map.target_gens.push_back(Generator::q(i));
    return map;
}

namespace {

/// Solve combo(n) = c CP_n + R = 0 for CP_n given images of CP_k, k < n.
void eliminate(ClassifyingMap& map, int n, const GradedPoly& combo) {
    Monomial top(Generator::cp(n));
    Rat c = combo.coeff_of(top);
    if (c == 0)
        throw ConsistencyError("elimination: CP" + std::to_string(n) + " does not occur in the weight-" +
                               std::to_string(n) + " relation");
    GradedPoly rest = combo;
    rest.add_term(top, -c);
    map.images[Generator::cp(n)] = substitute(rest, map.images, n) * (-1 / c);
}

}  // namespace

ClassifyingMap buchstaber_map(const FGLTable& F, const PairingTable& A) {
    int N = F.N;
    if (N < 5) throw DomainError("buchstaber_map: N must be >= 5");
    ClassifyingMap map;
    map.name = "buchstaber";
    map.N = N;
    for (int n = 1; n <= 4; ++n) {
        map.images[Generator::cp(n)] = GradedPoly::cp(n);
        map.target_gens.push_back(Generator::cp(n));
    }
    for (int n = 5; n <= N; ++n) eliminate(map, n, build_combo(n, ComboKind::T, F, A).cls);
    return map;
}

ClassifyingMap abelian_map(const FGLTable& F) {
    int N = F.N;
    if (N < 3) throw DomainError("abelian_map: N must be >= 3");
    ClassifyingMap map;
    map.name = "abelian";
    map.N = N;
    PairingTable unused;
    for (int n = 1; n <= 2; ++n) {
        map.images[Generator::cp(n)] = GradedPoly::cp(n);
        map.target_gens.push_back(Generator::cp(n));
    }
    for (int n = 3; n <= N; ++n) eliminate(map, n, build_combo(n, ComboKind::Z, F, unused).cls);
    return map;
}

Report annihilation_report(const ClassifyingMap& map, IdealFamily family, const FGLTable& F,
                           const PairingTable& A) {
    Report rep;
    int N = map.N;
    if (family == IdealFamily::Pairing) {
        rep.title = map.name + " map on A(i,j), i,j >= 3, weight <= " + std::to_string(N);
        for (int i = 3; 2 * i - 2 <= N; ++i)
            for (int j = i; i + j - 2 <= N; ++j) {
                GradedPoly img = genus_eval(map, A.a(i, j));
                rep.add("A(" + std::to_string(i) + "," + std::to_string(j) + ")", img.is_zero(), img.pretty());
            }
    } else {
        rep.title = map.name + " map on alpha(i,j), i,j >= 2, weight <= " + std::to_string(N);
        for (int i = 2; 2 * i - 1 <= N; ++i)
            for (int j = i; i + j - 1 <= N; ++j) {
                GradedPoly img = genus_eval(map, F.a(i, j));
                rep.add("alpha(" + std::to_string(i) + "," + std::to_string(j) + ")", img.is_zero(), img.pretty());
            }
    }
    return rep;
}

Report kh_factors_through_buchstaber(const KHSolution& kh, const PairingTable& A) {
    Report rep;
    int N = std::min(kh.N, A.N);
    rep.title = "KH genus on A(i,j), i,j >= 3, weight <= " + std::to_string(N);
    for (int i = 3; 2 * i - 2 <= N; ++i)
        for (int j = i; i + j - 2 <= N; ++j) {
            GradedPoly img = genus_eval(kh.phi, A.a(i, j));
            rep.add("A(" + std::to_string(i) + "," + std::to_string(j) + ")", img.is_zero(), img.pretty());
        }
    return rep;
}

QuarticCertificate quartic_certificate(const ClassifyingMap& buchstaber, const FGLTable& F) {
    QuarticCertificate cert;
    int N = buchstaber.N;
    cert.N = N;
    PolySeries logB = map_series(buchstaber, F.log);                            // order N + 1
    PolySeries inv_omega = series_reciprocal(map_series(buchstaber, F.omega));  // order N
    PolySeries t(N + 1);
    for (int k = 0; k <= N; ++k) t[k + 1] = inv_omega[k];

    auto inv_sq = [](const PolySeries& L) {
        PolySeries Lp = series_derive(L);
        return series_reciprocal(Lp * Lp);
    };
    auto first_nonzero_tail = [N](const PolySeries& s) {
        for (int k = 5; k <= N; ++k)
            if (!s[k].is_zero()) return k;
        return -1;
    };

    cert.L = series_compose(logB, series_revert(t));
    cert.inv_sq_derivative = inv_sq(cert.L);
    for (int k = 0; k <= std::min(4, N); ++k) cert.q_dictionary.push_back(cert.inv_sq_derivative[k]);
    for (int k = 5; k <= N; ++k) cert.tail_residuals.push_back(cert.inv_sq_derivative[k]);
    cert.first_offending = first_nonzero_tail(cert.inv_sq_derivative);
    cert.forward_first_offending = first_nonzero_tail(inv_sq(series_compose(logB, t)));
    return cert;
}

}  // namespace fglwb

namespace fglwb {

Report su_restriction_report(const std::vector<WeightedClass>& generators, const ClassifyingMap& buchstaber,
                             const ClassifyingMap& abelian) {
    Report rep;
    rep.title = "buchstaber and abelian maps on SU generators";
    GradedPoly r_x2;
    for (const auto& g : generators)
        if (g.k == 2) r_x2 = genus_eval(abelian, g.cls);

    for (const auto& g : generators) {
        std::string tag = "x" + std::to_string(g.k);
        if (g.k <= buchstaber.N) rep.note("f_B(" + tag + ") = " + genus_eval(buchstaber, g.cls).pretty());
        if (g.k > abelian.N) continue;
        GradedPoly r = genus_eval(abelian, g.cls);
        rep.note("r_Ab(" + tag + ") = " + r.pretty());
        if (g.k == 2) {
            rep.add("r_Ab(x2) = x2", r == g.cls, r.pretty());
        } else if (g.k == 3 || g.k == 4) {
            rep.add("r_Ab(" + tag + ") = 0", r.is_zero(), r.pretty());
        } else if (g.k % 2 == 1) {
            rep.note("finding " + tag + ": " + (r.is_zero() ? "r_Ab = 0, in Z[1/2][x2]" : "r_Ab != 0 in odd weight, NOT in Z[1/2][x2]"));
        } else {
            GradedPoly base = r_x2.pow(g.k / 2);
            Monomial lead(Generator::cp(1), g.k);
            Rat c = base.coeff_of(lead) == 0 ? Rat(0) : r.coeff_of(lead) / base.coeff_of(lead);
            bool proportional = !r_x2.is_zero() && r == base * c;
            std::string verdict;
            if (!proportional) {
                verdict = "r_Ab is not a multiple of r_Ab(x2)^" + std::to_string(g.k / 2) + ", NOT in Z[1/2][x2]";
            } else if (c == 0) {
                verdict = "r_Ab = 0, in Z[1/2][x2]";
            } else {
                bool dyadic = dyadic_split(make_rat(c.get_den())).odd == 1;
                verdict = "r_Ab = " + rat_to_short_string(c) + " * r_Ab(x2)^" + std::to_string(g.k / 2) +
                          (dyadic ? (is_dyadic_unit(c) ? ", dyadic unit multiple" : ", dyadic multiple")
                                  : ", coefficient NOT in Z[1/2]");
            }
            rep.note("finding " + tag + ": " + verdict);
        }
    }
    return rep;
}

}  // namespace fglwb
