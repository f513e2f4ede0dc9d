#include "fglwb/verify.hpp"

#include "fglwb/expr.hpp"

#include <algorithm>

namespace fglwb {

namespace {

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

bool only_uses(const GradedPoly& p, int max_cp) {
    for (const auto& g : p.generators())
        if (g.kind != GenKind::CP || g.index > max_cp) return false;
    return true;
}

bool homogeneous_of(const GradedPoly& p, int w) { return p.is_zero() || p.weight() == w; }

Report map_shape(const ClassifyingMap& map, int kept) {
    Report rep;
    rep.title = map.name + " map images";
    std::string fixed_bad, shape_bad;
    for (int n = 1; n <= map.N; ++n) {
        const GradedPoly& img = map.images.at(Generator::cp(n));
        if (n <= kept && img != GradedPoly::cp(n) && fixed_bad.empty()) fixed_bad = "CP" + std::to_string(n) + " -> " + img.pretty();
        if ((!homogeneous_of(img, n) || !only_uses(img, kept)) && shape_bad.empty())
            shape_bad = "CP" + std::to_string(n) + " -> " + img.pretty();
    }
    rep.add("fixes CP1..CP" + std::to_string(kept), fixed_bad.empty(), fixed_bad);
    rep.add("images homogeneous in Q[CP1..CP" + std::to_string(kept) + "]", shape_bad.empty(), shape_bad);
    for (int n = kept + 1; n <= map.N; ++n) {
        bool dyadic = true;
        for (const auto& [m, c] : map.images.at(Generator::cp(n)).terms())
            if (dyadic_split(make_rat(c.get_den())).odd != 1) dyadic = false;
        rep.note("CP" + std::to_string(n) + " image has " + (dyadic ? "only dyadic denominators" : "a non-dyadic denominator"));
    }
    return rep;
}

Report stability(const std::string& title, const ClassifyingMap& small, const ClassifyingMap& big) {
    Report rep;
    rep.title = title;
    std::string bad;
    for (int n = 1; n <= small.N && bad.empty(); ++n)
        if (small.images.at(Generator::cp(n)) != big.images.at(Generator::cp(n))) bad = "CP" + std::to_string(n);
    rep.add("images at N=" + std::to_string(small.N) + " agree with N=" + std::to_string(big.N), bad.empty(), bad);
    return rep;
}

std::string first_nonzero_coeff(const PolySeries& s, int upto) {
    for (int k = 0; k <= std::min(upto, s.order()); ++k)
        if (!s[k].is_zero()) return "x^" + std::to_string(k) + ": " + s[k].pretty();
    return {};
}

}  // namespace

std::optional<Suite> suite_from_name(const std::string& name) {
    if (name == "combinat") return Suite::Combinat;
    if (name == "fgl") return Suite::Fgl;
    if (name == "genera") return Suite::Genera;
    if (name == "su") return Suite::Su;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::vector<Report> verify_combinat(Workbench& wb, int bound) {
    std::vector<Report> out;
    out.push_back(verify_gcd_laws(bound));

    const FGLTable& F = wb.fgl();
    const PairingTable& A = wb.pairing();
    Report rep;
    rep.title = "generator combinations to weight " + std::to_string(wb.N());
    for (int m = 2; m <= wb.N(); ++m) {
        GeneratorCombo e = build_combo(m, ComboKind::E, F, A);
        rep.add("s(e_" + std::to_string(m) + ") = -d(m)", e.certificate.holds() && e.s == -Rat(d_gcd(m)),
                "s = " + rat_to_short_string(e.s));
    }
    for (int m = 3; m <= wb.N(); ++m) {
        GeneratorCombo z = build_combo(m, ComboKind::Z, F, A);
        rep.add("s(z_" + std::to_string(m) + ") = -d2(m)", z.certificate.holds() && z.s == -Rat(d2_gcd(m)),
                "s = " + rat_to_short_string(z.s));
    }
    for (int m = 5; m <= wb.N(); ++m) {
        GeneratorCombo t = build_combo(m, ComboKind::T, F, A);
        Rat D(D_gcd(m));
        rep.add("s(T_" + std::to_string(m) + ") = +-D(m)", t.certificate.holds() && (t.s == D || t.s == -D),
                "s = " + rat_to_short_string(t.s) + ", D = " + rat_to_short_string(D));
    }
    out.push_back(rep);
    return out;
}

std::vector<Report> verify_fgl(Workbench& wb) {
    std::vector<Report> out;
    const FGLTable& F = wb.fgl();
    out.push_back(fgl_axiom_check(F));

    Report rep;
    rep.title = "universal coefficients";
    auto cp = GradedPoly::cp;
    rep.add("alpha11 = -CP1", F.a(1, 1) == -cp(1), F.a(1, 1).pretty());
    rep.add("alpha12 = CP1^2 - CP2", F.a(1, 2) == cp(1).pow(2) - cp(2), F.a(1, 2).pretty());
    rep.add("2 alpha22 = -3CP3 + 8CP1CP2 - 5CP1^3", F.a(2, 2) * Rat(2) == reference_two_alpha22(),
            (F.a(2, 2) * Rat(2)).pretty());
    GradedPoly a23_shifted = F.a(2, 3) + cp(1) * F.a(2, 2);
    rep.add("alpha23 + CP1 alpha22 = 2CP1^4 - 7CP1^2CP2 + 3CP2^2 + 4CP1CP3 - 2CP4", a23_shifted == reference_alpha23(),
            a23_shifted.pretty());
    rep.note("alpha23 = " + F.a(2, 3).pretty());
    std::string bad;
    for (int s = 2; s <= F.N + 1 && bad.empty(); ++s)
        for (int i = 1; i < s && bad.empty(); ++i) {
            Rat v = s_number(F.a(i, s - i), s - 1);
            if (v != -Rat(binomial(s, i))) bad = "alpha" + ij(i, s - i) + ": " + rat_to_short_string(v);
        }
    rep.add("s(alpha_ij) = -binom(i+j, i), i+j <= " + std::to_string(F.N + 1), bad.empty(), bad);

    PolySeries ubar = formal_inverse(F);
    int K = F.N + 1;
    PolySeries diag(K), ubar_pow = PolySeries::constant(K, 1);
    for (int j = 0; j <= K; ++j) {
        PolySeries row(K);
        for (int i = 0; i + j <= K; ++i) row[i] = F.alpha(i, j);
        diag += row * ubar_pow;
        ubar_pow = ubar_pow * ubar;
    }
    bad = first_nonzero_coeff(diag, K);
    rep.add("F(u, ubar(u)) = 0", bad.empty(), bad);
    out.push_back(rep);
    return out;
}

PolySeries kh_log_residual(const PolySeries& g, int order) {
    PolySeries g1 = series_derive(g).truncated(order);
    PolySeries g2 = series_derive(series_derive(g)).truncated(order);
    PolySeries y = PolySeries::variable(order);
    PolySeries lhs_inner = y * g2 + g1;
    PolySeries yg = y * g1;
    PolySeries bracket = PolySeries::constant(order, 1);
    PolySeries power = PolySeries::constant(order, 1);
    for (int i = 1; i <= 4; ++i) {
        power = power * yg;
        bracket += power.scaled(GradedPoly::q(i));
    }
    return lhs_inner * lhs_inner - g1 * g1 * bracket;
}

std::vector<Report> verify_genera(Workbench& wb) {
    std::vector<Report> out;
    int N = wb.N();
    const FGLTable& F = wb.fgl();
    const PairingTable& A = wb.pairing();
    const ClassifyingMap& B = wb.buchstaber();
    const ClassifyingMap& Ab = wb.abelian();

    out.push_back(annihilation_report(B, IdealFamily::Pairing, F, A));
    out.push_back(map_shape(B, 4));
    {
        FGLTable F1 = universal_fgl(N + 1);
        out.push_back(stability("buchstaber map stability", B, buchstaber_map(F1, pairing_series(F1))));
        out.push_back(stability("abelian map stability", Ab, abelian_map(F1)));
    }

    KHSolution kh = kh_solve(N);
    Report khr;
    khr.title = "Krichever-Hoehn genus";
    std::string bad = first_nonzero_coeff(kh_residual(kh.f, N), N);
    khr.add("ODE residual in f vanishes to order " + std::to_string(N), bad.empty(), bad);
    bad = first_nonzero_coeff(kh_log_residual(kh.g, N - 1), N - 1);
    khr.add("logarithm form of the ODE vanishes to order " + std::to_string(N - 1), bad.empty(), bad);
    GeneratorImages zero_q;
    for (int i = 1; i <= 4; ++i) zero_q[Generator::q(i)] = GradedPoly();
    bad.clear();
    for (int n = 1; n <= N && bad.empty(); ++n) {
        GradedPoly v = substitute(kh.phi.images.at(Generator::cp(n)), zero_q, n);
        if (!v.is_zero()) bad = "CP" + std::to_string(n) + " -> " + v.pretty();
    }
    khr.add("q = 0 gives the zero genus in positive weight", bad.empty(), bad);
    out.push_back(khr);
    out.push_back(kh_factors_through_buchstaber(kh, A));

    QuarticCertificate qc = quartic_certificate(B, F);
    Report qr;
    qr.title = "quartic certificate for the Buchstaber law";
    qr.add("1/(L')^2 has constant term 1", qc.q_dictionary.at(0) == GradedPoly(1), qc.q_dictionary.at(0).pretty());
    bad.clear();
    if (!qc.passes()) bad = "x^" + std::to_string(qc.first_offending) + ": " + qc.tail_residuals.at(qc.first_offending - 5).pretty();
    qr.add("1/(L')^2 coefficients of x^5..x^" + std::to_string(N) + " vanish", qc.passes(), bad);
    for (std::size_t k = 1; k < qc.q_dictionary.size(); ++k)
        qr.note("x^" + std::to_string(k) + ": " + qc.q_dictionary[k].pretty());
    qr.note(qc.forward_first_offending < 0
                ? "log_B(x/omega_B) also has a quartic 1/(L')^2"
                : "log_B(x/omega_B) has a nonzero x^" + std::to_string(qc.forward_first_offending) + " coefficient");
    out.push_back(qr);

    out.push_back(annihilation_report(Ab, IdealFamily::Alpha, F, A));
    Report abp = annihilation_report(Ab, IdealFamily::Pairing, F, A);
    abp.title = "abelian map on A(i,j), i,j >= 3, weight <= " + std::to_string(N);
    out.push_back(abp);
    out.push_back(map_shape(Ab, 2));

    ClassifyingMap psi = schreieder_genus(N);
    Report sr;
    sr.title = "Schreieder genus";
    auto q = GradedPoly::q;
    sr.add("psi(CP1) = -q1/2", psi.images.at(Generator::cp(1)) == q(1) * Rat(-1, 2),
           psi.images.at(Generator::cp(1)).pretty());
    if (N >= 2)
        sr.add("psi(CP2) = 3q1^2/8 - q2/2", psi.images.at(Generator::cp(2)) == q(1).pow(2) * Rat(3, 8) - q(2) * Rat(1, 2),
               psi.images.at(Generator::cp(2)).pretty());
    for (int n = 1; n <= std::min(N, 4); ++n)
        sr.note("phi_KH(CP" + std::to_string(n) + ") = " + kh.phi.images.at(Generator::cp(n)).pretty() + "; psi(CP" +
                std::to_string(n) + ") = " + psi.images.at(Generator::cp(n)).pretty());
    out.push_back(sr);
    return out;
}

const std::vector<ChernTableEntry>& reference_chern_tables() {
    static const std::vector<ChernTableEntry> table = {
        {"CP3", {3}, 4},        {"CP3", {2, 1}, 24},        {"CP3", {1, 1, 1}, 64},
        {"CP1*CP2", {3}, 6},    {"CP1*CP2", {2, 1}, 24},    {"CP1*CP2", {1, 1, 1}, 54},
        {"CP1^3", {3}, 8},      {"CP1^3", {2, 1}, 24},      {"CP1^3", {1, 1, 1}, 48},
        {"CP1^4", {1, 1, 1, 1}, 384},  {"CP1^4", {2, 1, 1}, 192},  {"CP1^4", {3, 1}, 64},
        {"CP1^2*CP2", {1, 1, 1, 1}, 432}, {"CP1^2*CP2", {2, 1, 1}, 204}, {"CP1^2*CP2", {3, 1}, 60},
        {"CP2^2", {1, 1, 1, 1}, 486},  {"CP2^2", {2, 1, 1}, 216},  {"CP2^2", {3, 1}, 54},
        {"CP1*CP3", {1, 1, 1, 1}, 512}, {"CP1*CP3", {2, 1, 1}, 224}, {"CP1*CP3", {3, 1}, 56},
        {"CP4", {1, 1, 1, 1}, 625},    {"CP4", {2, 1, 1}, 250},    {"CP4", {3, 1}, 50},
        {"CP1^2", {1, 1}, 8},   {"CP2", {1, 1}, 9},         {"CP1^2", {2}, 4},   {"CP2", {2}, 3},
    };
    return table;
}

std::vector<Report> verify_su(Workbench& wb) {
    std::vector<Report> out;
    int N = wb.N();
    const FGLTable& F = wb.fgl();

    Report ct;
    ct.title = "Chern numbers of products of projective spaces";
    for (const auto& e : reference_chern_tables()) {
        Partition w(e.partition);
        Rat v = chern_number(parse_class(e.manifold), w);
        ct.add(w.str() + "[" + e.manifold + "] = " + std::to_string(e.value), v == e.value, rat_to_short_string(v));
    }
    out.push_back(ct);

    SUGenerators g = build_x234(F);
    Report gr;
    gr.title = "SU generators x2, x3, x4";
    const std::vector<std::pair<int, const GradedPoly*>> gens{{2, &g.x2}, {3, &g.x3}, {4, &g.x4}};
    const Rat expected_s[] = {3, 6, 10};
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto [n, x] = gens[k];
        std::string tag = "x" + std::to_string(n);
        Report su = su_check(*x);
        const Check* f = su.first_failure();
        gr.add(tag + " has no Chern numbers with a c1 factor", su.passed(), f ? f->name + " = " + f->detail : "");
        Rat s = s_number_manifold(*x);
        gr.add("s(" + tag + ") = " + rat_to_short_string(expected_s[k]), s == expected_s[k] && s == s_number(*x, n),
               rat_to_short_string(s));
        gr.add(tag + " satisfies the Novikov criterion", novikov_admissible(n, s).admissible);
    }
    gr.add("CP1 fails the SU check", !su_check(GradedPoly::cp(1)).passed());
    out.push_back(gr);

    const WTable& W = wb.w();
    Report wr;
    wr.title = "W-theory coefficients";
    WCoefficient w11 = W.w(1, 1);
    wr.add("(w11, dw11) = (-CP1, -2)", w11.cls == -GradedPoly::cp(1) && w11.bnd == GradedPoly(-2),
           "(" + w11.cls.pretty() + ", " + w11.bnd.pretty() + ")");
    std::string bad;
    for (int s = 2; s <= N + 1 && bad.empty(); ++s)
        for (int i = 1; i < s && bad.empty(); ++i) {
            WCoefficient a = W.w(i, s - i), b = W.w(s - i, i);
            if (a.cls != b.cls || a.bnd != b.bnd) bad = "w" + ij(i, s - i);
        }
    wr.add("w_ij = w_ji, i+j <= " + std::to_string(N + 1), bad.empty(), bad);
    bad.clear();
    std::vector<WPair> pairs{{GradedPoly::cp(1), GradedPoly(2)}, {g.x2, GradedPoly()}};
    for (int s = 2; s <= std::min(N + 1, 8); ++s)
        for (int i = 1; i < s; ++i) pairs.push_back({W.w(i, s - i).cls, W.w(i, s - i).bnd});
    for (const auto& a : pairs)
        for (const auto& b : pairs) {
            if (!bad.empty()) break;
            int wa = a.cls.max_weight(), wb2 = b.cls.max_weight();
            if (wa + wb2 > 8) continue;
            WPair p = star_product(a, b, *W.ring);
            GradedPoly rule = a.cls * b.bnd + a.bnd * b.cls - GradedPoly::cp(1) * a.bnd * b.bnd;
            GradedPoly prod = a.cls * b.cls + F.a(1, 2) * Rat(2) * a.bnd * b.bnd;
            if (p.bnd != rule || p.cls != prod) bad = a.cls.pretty() + " * " + b.cls.pretty();
        }
    wr.add("boundary of a*b = a db + da b - CP1 da db, weight <= 8", bad.empty(), bad);
    out.push_back(wr);

    std::vector<SUGeneratorRow> rows = build_bk_xk(F, W);
    Report br;
    br.title = "generators x_k = boundary(CP1 * b_k)";
    for (const auto& r : rows) {
        std::string tag = "x" + std::to_string(r.k);
        br.add("s(" + tag + ") = 2 s(b" + std::to_string(r.k) + ")", r.s_x == r.s_b * Rat(2) && r.s_x == s_number_manifold(r.x),
               rat_to_short_string(r.s_x));
        if (r.su_checked) br.add(tag + " has no Chern numbers with a c1 factor", r.su_pass);
        br.note(tag + ": s = " + rat_to_short_string(r.s_x) +
                (r.s_x == 0 ? ", zero" : (r.novikov.admissible ? ", Novikov admissible" : ", not Novikov admissible")));
        if (r.k == 3) br.add("x3 row = 2 x3", r.x == g.x3 * Rat(2), r.x.pretty());
    }
    out.push_back(br);

    out.push_back(snumber_ledger_report(20));

    std::vector<WeightedClass> classes{{2, g.x2}, {3, g.x3}, {4, g.x4}};
    for (const auto& r : rows)
        if (r.k >= 5) classes.push_back({r.k, r.x});
    out.push_back(su_restriction_report(classes, wb.buchstaber(), wb.abelian()));
    return out;
}

std::vector<Report> run_verify(Suite suite, Workbench& wb) {
    std::vector<Report> out;
    auto take = [&](std::vector<Report> r) { out.insert(out.end(), r.begin(), r.end()); };
    if (suite == Suite::Combinat || suite == Suite::All) take(verify_combinat(wb));
    if (suite == Suite::Fgl || suite == Suite::All) take(verify_fgl(wb));
    if (suite == Suite::Genera || suite == Suite::All) take(verify_genera(wb));
    if (suite == Suite::Su || suite == Suite::All) take(verify_su(wb));
    return out;
}

Report cache_agreement(const CacheFile& cached, Workbench& fresh) {
    Report rep;
    rep.title = "cache agreement (cache N=" + std::to_string(cached.N) + ", fresh N=" + std::to_string(fresh.N()) + ")";
    int shared = std::min(cached.N, fresh.N());
    for (const auto& t : cached.tables) {
        CacheTable want = restrict_table(fresh.table(t.name), shared);
        CacheTable have = restrict_table(t, shared);
        std::string bad;
        if (have.rows.size() != want.rows.size()) bad = "row count " + std::to_string(have.rows.size());
        for (std::size_t r = 0; r < want.rows.size() && bad.empty(); ++r)
            if (have.rows[r] != want.rows[r]) bad = "key " + have.rows[r].first;
        rep.add(t.name, bad.empty(), bad);
    }
    return rep;
}

}  // namespace fglwb
