// Acceptance runner: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criteria. Exit status is 0 iff every selected criterion passes.
#include "fglwb/combinat.hpp"
#include "fglwb/expr.hpp"
#include "fglwb/genera.hpp"
#include "fglwb/suw.hpp"
#include "fglwb/verify.hpp"
#include "properties.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace fglwb;

namespace {

constexpr int N = 12;

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

GradedPoly cp(int n) { return GradedPoly(Monomial(Generator::cp(n))); }

// Shared tables, computed on first use.
struct Tables {
    std::optional<FGLTable> F_;
    std::optional<PairingTable> A_;
    std::optional<ClassifyingMap> B_, Ab_;
    std::optional<WTable> W_;
    std::optional<std::vector<SUGeneratorRow>> rows_;

    const FGLTable& F() { return F_ ? *F_ : *(F_ = universal_fgl(N)); }
    const PairingTable& A() { return A_ ? *A_ : *(A_ = pairing_series(F())); }
    const ClassifyingMap& B() { return B_ ? *B_ : *(B_ = buchstaber_map(F(), A())); }
    const ClassifyingMap& Ab() { return Ab_ ? *Ab_ : *(Ab_ = abelian_map(F())); }
    const WTable& W() { return W_ ? *W_ : *(W_ = w_coefficients(F())); }
    const std::vector<SUGeneratorRow>& rows() { return rows_ ? *rows_ : *(rows_ = build_bk_xk(F(), W())); }
};

long prime_power_base(long n) {
    if (n < 2) return 0;
    long p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

Outcome convention_anchor(Tables& t) {
    Outcome o;
    const FGLTable& F = t.F();
    o.expect(F.a(1, 2) == parse_class("CP1^2 - CP2"), "alpha12 = " + F.a(1, 2).pretty());
    GradedPoly two_a22 = F.a(2, 2) * Rat(2);
    o.expect(two_a22 == parse_class("-3*CP3 + 8*CP1*CP2 - 5*CP1^3"), "2 alpha22 = " + two_a22.pretty());
    GradedPoly reference = parse_class("2*CP1^4 - 7*CP1^2*CP2 + 3*CP2^2 + 4*CP1*CP3 - 2*CP4");
    o.expect(F.a(2, 3) == reference,
             "alpha23 = " + F.a(2, 3).pretty() + ", expected " + reference.pretty() + " (difference " +
                 (F.a(2, 3) - reference).pretty() + ")");
    return o;
}

Outcome chern_tables(Tables&) {
    Outcome o;
    for (const auto& e : reference_chern_tables()) {
        Partition w(e.partition);
        Rat v = chern_number(parse_class(e.manifold), w);
        o.expect(v == e.value, w.str() + "[" + e.manifold + "] = " + rat_to_short_string(v));
    }
    o.notes.push_back(std::to_string(reference_chern_tables().size()) + " entries");
    return o;
}

Outcome su_generators(Tables& t) {
    Outcome o;
    SUGenerators g = build_x234(t.F());
    const std::pair<const GradedPoly*, int> gens[] = {{&g.x2, 3}, {&g.x3, 6}, {&g.x4, 10}};
    int k = 2;
    for (const auto& [x, s] : gens) {
        std::string tag = "x" + std::to_string(k);
        o.expect(su_check(*x).passed(), tag + " fails su_check");
        Rat got = s_number(*x, k);
        o.expect(got == s, "s(" + tag + ") = " + rat_to_short_string(got));
        o.expect(novikov_admissible(k, got).admissible, tag + " not Novikov-admissible");
        ++k;
    }
    return o;
}

Outcome combinatorics(Tables& t) {
    Outcome o;
    Report laws = verify_gcd_laws(64);
    if (const Check* c = laws.first_failure()) o.expect(false, c->name + ": " + c->detail);
    for (long m = 1; m <= 64; ++m) {
        long p = prime_power_base(m + 1);
        o.expect(d_gcd(m) == (p ? BigInt(p) : BigInt(1)), "d(" + std::to_string(m) + ")");
    }
    for (long m = 5; m <= 64; ++m) {
        BigInt ratio = D_gcd(m) / d_gcd(m);
        bool two_case = ((m + 2) & (m + 1)) == 0;  // m = 2^k - 2
        o.expect(two_case ? ratio == 2 : ratio == d_gcd(m - 1), "D(" + std::to_string(m) + ")/d");
    }
    for (long m = 4; m <= 64; ++m) o.expect(d2_gcd(m) == d_gcd(m) * d_gcd(m - 1), "d2(" + std::to_string(m) + ")");
    for (int m = 5; m <= N; ++m) {
        GeneratorCombo T = build_combo(m, ComboKind::T, t.F(), t.A());
        Rat D(D_gcd(m));
        o.expect(T.s == D || T.s == -D, "s(T" + std::to_string(m) + ") = " + rat_to_short_string(T.s));
    }
    return o;
}

Outcome fgl_axioms(Tables& t) {
    Outcome o;
    Report r = fgl_axiom_check(t.F());
    if (const Check* c = r.first_failure()) o.expect(false, c->name + ": " + c->detail);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; i + j <= N + 1; ++j) {
            Rat s = s_number(t.F().a(i, j), i + j - 1);
            o.expect(s == -Rat(binomial(i + j, i)), "s(alpha" + std::to_string(i) + std::to_string(j) + ")");
        }
    return o;
}

Outcome buchstaber(Tables& t) {
    Outcome o;
    const ClassifyingMap& B = t.B();
    for (int i = 3; i <= N + 2; ++i)
        for (int j = 3; i + j <= N + 2; ++j)
            o.expect(genus_eval(B, t.A().a(i, j)).is_zero(), "f_B(A" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int n = 1; n <= N; ++n) {
        const GradedPoly& img = B.images.at(Generator::cp(n));
        if (n <= 4) o.expect(img == cp(n), "f_B(CP" + std::to_string(n) + ") != CP" + std::to_string(n));
        o.expect(img.is_homogeneous() && (img.is_zero() || img.weight() == n), "f_B(CP" + std::to_string(n) + ") weight");
        for (const auto& g : img.generators())
            o.expect(g.kind == GenKind::CP && g.index <= 4, "f_B(CP" + std::to_string(n) + ") uses " + g.name());
    }
    FGLTable F13 = universal_fgl(N + 1);
    ClassifyingMap B13 = buchstaber_map(F13, pairing_series(F13));
    for (int n = 1; n <= N; ++n)
        o.expect(B13.images.at(Generator::cp(n)) == B.images.at(Generator::cp(n)),
                 "f_B(CP" + std::to_string(n) + ") changes between N=12 and N=13");
    return o;
}

Outcome krichever_hoehn(Tables& t) {
    Outcome o;
    KHSolution kh = kh_solve(N);
    int bad = kh_residual(kh.f, N).first_nonzero();
    o.expect(bad < 0, "ODE residual nonzero at x^" + std::to_string(bad));
    GeneratorImages zero;
    for (int i = 1; i <= 4; ++i) zero[Generator::q(i)] = GradedPoly();
    for (int n = 1; n <= N; ++n)
        o.expect(substitute(kh.phi.images.at(Generator::cp(n)), zero, n).is_zero(),
                 "phi(CP" + std::to_string(n) + ") at q = 0");
    for (int i = 3; i <= N; ++i)
        for (int j = 3; i + j <= N; ++j)
            o.expect(genus_eval(kh.phi, t.A().a(i, j)).is_zero(),
                     "phi_KH(A" + std::to_string(i) + "," + std::to_string(j) + ")");
    return o;
}

Outcome quartic(Tables& t) {
    Outcome o;
    QuarticCertificate qc = quartic_certificate(t.B(), t.F());
    o.expect(qc.q_dictionary.at(0) == GradedPoly(1), "x^0 coefficient " + qc.q_dictionary.at(0).pretty());
    for (int k = 5; k <= 8; ++k)
        o.expect(qc.inv_sq_derivative[k].is_zero(), "x^" + std::to_string(k) + " coefficient nonzero");
    for (int k = 1; k <= 4; ++k) o.notes.push_back("x^" + std::to_string(k) + ": " + qc.q_dictionary.at(k).pretty());
    return o;
}

Outcome abelian(Tables& t) {
    Outcome o;
    const ClassifyingMap& Ab = t.Ab();
    for (int i = 2; i <= N; ++i)
        for (int j = 2; i + j <= N + 1; ++j)
            o.expect(genus_eval(Ab, t.F().a(i, j)).is_zero(), "f_Ab(alpha" + std::to_string(i) + std::to_string(j) + ")");
    SUGenerators g = build_x234(t.F());
    o.expect(genus_eval(Ab, g.x3).is_zero(), "r_Ab(x3) != 0");
    o.expect(genus_eval(Ab, g.x4).is_zero(), "r_Ab(x4) != 0");
    std::vector<WeightedClass> classes{{2, g.x2}};
    for (const auto& row : t.rows())
        if (row.k >= 5 && row.k <= 8) classes.push_back({row.k, row.x});
    Report r = su_restriction_report(classes, t.B(), Ab);
    if (const Check* c = r.first_failure()) o.expect(false, c->name + ": " + c->detail);
    for (int k = 5; k <= 8; ++k) {
        std::string tag = "finding x" + std::to_string(k) + ":";
        bool reported = false;
        for (const auto& n : r.notes)
            if (n.rfind(tag, 0) == 0) {
                reported = true;
                o.notes.push_back(n);
            }
        o.expect(reported, "no finding reported for x" + std::to_string(k));
    }
    return o;
}

Outcome w_theory(Tables& t) {
    Outcome o;
    const WTable& W = t.W();
    WCoefficient w11 = W.w(1, 1);
    o.expect(w11.cls == -cp(1) && w11.bnd == GradedPoly(-2), "(w11, dw11) = (" + w11.cls.pretty() + ", " + w11.bnd.pretty() + ")");
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; i + j - 1 <= N; ++j) {
            WCoefficient a = W.w(i, j), b = W.w(j, i);
            o.expect(a.cls == b.cls && a.bnd == b.bnd, "w" + std::to_string(i) + std::to_string(j) + " != w" + std::to_string(j) + std::to_string(i));
        }
    std::vector<WCoefficient> pairs;
    for (int i = 1; i <= 7; ++i)
        for (int j = i; i + j - 1 <= 7; ++j) pairs.push_back(W.w(i, j));
    int products = 0;
    for (const auto& a : pairs)
        for (const auto& b : pairs) {
            if ((a.i + a.j - 1) + (b.i + b.j - 1) > 8) continue;
            QuadElem prod = QuadElem(a.cls, a.bnd, W.ring) * QuadElem(b.cls, b.bnd, W.ring);
            GradedPoly rule = a.cls * b.bnd + a.bnd * b.cls - cp(1) * a.bnd * b.bnd;
            o.expect(prod.odd() == rule, "derivation rule for w" + std::to_string(a.i) + std::to_string(a.j) + " * w" +
                                             std::to_string(b.i) + std::to_string(b.j));
            ++products;
        }
    o.notes.push_back(std::to_string(products) + " products checked");
    for (const auto& row : t.rows()) {
        o.expect(row.s_x == row.s_b * 2, "s(x" + std::to_string(row.k) + ") != 2 s(b" + std::to_string(row.k) + ")");
        if (row.k >= 5 && row.k <= 8) o.expect(su_check(row.x).passed(), "x" + std::to_string(row.k) + " fails su_check");
    }
    return o;
}

Outcome snumber_ledger(Tables&) {
    Outcome o;
    for (const auto& row : snumber_ledger_rows(20)) {
        std::string tag = "k=" + std::to_string(row.k);
        Rat want;
        if (row.k == 8) want = 4;
        else if (row.k == 16) want = -16;
        else if (row.exceptional) continue;
        else want = prime_power_base(row.k) ? Rat(prime_power_base(row.k)) : Rat(1);
        for (std::size_t i = 0; i < row.ratio.size(); ++i)
            o.expect(row.ratio[i] == want, tag + " i=" + std::to_string(i + 1) + " ratio " + rat_to_short_string(row.ratio[i]));
    }
    return o;
}

Outcome properties(Tables&) {
    Outcome o;
    int total = 0;
    for (const auto& r : props::run_all()) {
        total += r.cases;
        o.expect(r.failures == 0, r.family + ": " + std::to_string(r.failures) + " failures, " + r.first_failure);
    }
    o.expect(total >= 1000, "only " + std::to_string(total) + " cases");
    o.notes.push_back(std::to_string(total) + " cases");
    return o;
}

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome(Tables&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "convention anchor", convention_anchor},
        {2, "Chern tables", chern_tables},
        {3, "SU generators x2, x3, x4", su_generators},
        {4, "gcd combinatorics", combinatorics},
        {5, "formal group law axioms and s-numbers", fgl_axioms},
        {6, "Buchstaber map", buchstaber},
        {7, "Krichever-Hoehn genus", krichever_hoehn},
        {8, "quartic certificate", quartic},
        {9, "abelian map", abelian},
        {10, "W-theory", w_theory},
        {11, "s-number ledger", snumber_ledger},
        {12, "property suites", properties},
    };
    return all;
}

std::string summarize(const std::vector<std::string>& items, std::size_t limit) {
    std::ostringstream out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) out << (i ? "; " : "") << items[i];
    if (items.size() > limit) out << "; ... (" << items.size() - limit << " more)";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int a = 1; a < argc; ++a) {
        int id = 0;
        try {
            id = std::stoi(argv[a]);
        } catch (const std::exception&) {
        }
        if (id < 1 || id > static_cast<int>(criteria().size())) {
            std::cerr << "usage: " << argv[0] << " [criterion 1-" << criteria().size() << "]...\n";
            return 2;
        }
        selected.push_back(id);
    }
    if (selected.empty())
        for (const auto& c : criteria()) selected.push_back(c.id);

    Tables tables;
    int failed = 0;
    for (int id : selected) {
        const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
        Outcome o;
        try {
            o = c.run(tables);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title;
        if (!o.pass) std::cout << ": " << summarize(o.failures, 3);
        else if (!o.notes.empty()) std::cout << " (" << summarize(o.notes, 4) << ")";
        std::cout << "\n";
    }
    std::cout << (selected.size() - failed) << "/" << selected.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
