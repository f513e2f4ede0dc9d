#include "fglwb/combinat.hpp"

namespace fglwb {

namespace {

BigInt gcd_of(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

}  // namespace

BigInt d_gcd(long m) {
    if (m < 1) throw DomainError("d(m): m must be >= 1");
    std::vector<BigInt> v;
    for (long i = 1; i <= m; ++i) v.push_back(binomial(m + 1, i));
    return gcd_of(v);
}

BigInt D_gcd(long m) {
    if (m < 5) throw DomainError("D(m): m must be >= 5");
    std::vector<BigInt> v;
    for (long i = 3; i <= m - 1; ++i) v.push_back(binomial(m + 1, i) - binomial(m + 1, i - 1));
    return gcd_of(v);
}

BigInt d2_gcd(long m) {
    if (m < 3) throw DomainError("d2(m): m must be >= 3");
    if (m == 3) return binomial(4, 2);
    std::vector<BigInt> v;
    for (long i = 2; i <= m - 2; ++i) v.push_back(binomial(m + 1, i));
    return gcd_of(v);
}

BigInt d_closed_form(long m) {
    long p = prime_power_base(m + 1);
    return p ? BigInt(p) : BigInt(1);
}

Report verify_gcd_laws(long M) {
    if (M < 5) throw DomainError("verify_gcd_laws: M must be >= 5");
    Report rep;
    rep.title = "gcd laws up to m = " + std::to_string(M);

    std::string bad;
    for (long m = 1; m <= M && bad.empty(); ++m)
        if (d_gcd(m) != d_closed_form(m))
            bad = "m=" + std::to_string(m) + ": d=" + d_gcd(m).get_str() + " closed form " + d_closed_form(m).get_str();
    rep.add("d(m) closed form", bad.empty(), bad);

    bad.clear();
    for (long m = 5; m <= M && bad.empty(); ++m) {
        BigInt D = D_gcd(m), d = d_gcd(m);
        bool two_power_minus_two = prime_power_base(m + 2) == 2;
        BigInt want = two_power_minus_two ? BigInt(2) : d_gcd(m - 1);
        if (D % d != 0 || D / d != want)
            bad = "m=" + std::to_string(m) + ": D/d=" + Rat(D, d).get_str() + " expected " + want.get_str();
    }
    rep.add("D(m)/d(m)", bad.empty(), bad);

    bad.clear();
    for (long m = 3; m <= M && bad.empty(); ++m)
        if (d2_gcd(m) != d_gcd(m) * d_gcd(m - 1))
            bad = "m=" + std::to_string(m) + ": d2=" + d2_gcd(m).get_str();
    rep.add("d2(m) = d(m) d(m-1)", bad.empty(), bad);
    return rep;
}

Rat s_number(const GradedPoly& p, int n) {
    if (n < 1) throw DomainError("s_number: weight must be >= 1");
    if (!p.is_zero() && p.weight() != n)
        throw DomainError("s_number: class is not homogeneous of weight " + std::to_string(n));
    return Rat(n + 1) * p.coeff_of(Monomial(Generator::cp(n)));
}

std::string combo_kind_name(ComboKind k) {
    switch (k) {
    case ComboKind::E: return "E";
    case ComboKind::T: return "T";
    case ComboKind::Z: return "Z";
    }
    return "?";
}

GeneratorCombo build_combo(int m, ComboKind kind, const FGLTable& F, const PairingTable& A) {
    GeneratorCombo c;
    c.m = m;
    c.kind = kind;
    std::vector<const GradedPoly*> terms;
    std::vector<BigInt> weights;
    switch (kind) {
    case ComboKind::E:
        if (m < 2) throw DomainError("E combination needs m >= 2");
        if (m > F.N) throw DomainError("E combination beyond the table weight");
        c.first_index = 1;
        for (int i = 1; i <= m; ++i) {
            terms.push_back(&F.a(i, m + 1 - i));
            weights.push_back(binomial(m + 1, i));
        }
        break;
    case ComboKind::Z:
        if (m < 3) throw DomainError("Z combination needs m >= 3");
        if (m > F.N) throw DomainError("Z combination beyond the table weight");
        c.first_index = 2;
        for (int i = 2; i <= m - 1; ++i) {
            terms.push_back(&F.a(i, m + 1 - i));
            weights.push_back(binomial(m + 1, i));
        }
        break;
    case ComboKind::T:
        if (m < 5) throw DomainError("T combination needs m >= 5");
        if (m > A.N) throw DomainError("T combination beyond the table weight");
        c.first_index = 3;
        for (int i = 3; i <= m - 1; ++i) {
            terms.push_back(&A.a(i, m + 2 - i));
            Rat s = s_number(A.a(i, m + 2 - i), m);
            if (s.get_den() != 1) throw ConsistencyError("non-integral s-number of a pairing coefficient");
            weights.push_back(s.get_num());
        }
        break;
    }

    std::vector<BigInt> nonzero;
    std::vector<std::size_t> where;
    for (std::size_t k = 0; k < weights.size(); ++k)
        if (weights[k] != 0) {
            nonzero.push_back(weights[k]);
            where.push_back(k);
        }
    c.certificate = ext_gcd_vector(nonzero);
    c.lambda.assign(terms.size(), BigInt(0));
    for (std::size_t k = 0; k < where.size(); ++k) c.lambda[where[k]] = c.certificate.lambda[k];

    for (std::size_t k = 0; k < terms.size(); ++k)
        if (c.lambda[k] != 0) c.cls += *terms[k] * Rat(c.lambda[k]);
    c.s = s_number(c.cls, m);
    return c;
}

NovikovResult novikov_admissible(int n, const Rat& s) {
    if (n < 2) throw DomainError("novikov_admissible: n must be >= 2");
    if (s == 0) throw DomainError("novikov_admissible: zero s-number");
    NovikovResult r;
    r.split = dyadic_split(s);
    long p = prime_power_base(n);
    if (p == 0 || p == 2) p = prime_power_base(n + 1);
    if (p == 2) p = 0;
    r.prime = p;
    r.admissible = r.split.odd == (p ? Rat(p) : Rat(1));
    return r;
}

}  // namespace fglwb
