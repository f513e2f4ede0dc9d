#include "fglwb/fgl.hpp"

#include <sstream>

namespace fglwb {

PolySeries mishchenko_log(int N) {
    if (N < 1) throw DomainError("mishchenko_log: N must be >= 1");
    PolySeries log(N + 1);
    log[1] = GradedPoly(1);
    for (int n = 1; n <= N; ++n) log[n + 1] = GradedPoly::cp(n) * Rat(1, n + 1);
    return log;
}

FGLTable universal_fgl(int N) {
    if (N < 1) throw DomainError("universal_fgl: N must be >= 1");
    FGLTable F;
    F.N = N;
    F.log = mishchenko_log(N);
    PolySeries exp = series_revert(F.log);
    PolySeries2 sum = PolySeries2::from_univariate(F.log, 0, N + 1) +
                      PolySeries2::from_univariate(F.log, 1, N + 1);
    F.alpha = compose_outer(exp, sum);
    F.omega = invariant_differential(F);
    return F;
}

PolySeries invariant_differential(const FGLTable& F) {
    PolySeries omega = series_reciprocal(series_derive(F.log));
    for (int i = 0; i <= omega.order(); ++i) {
        if (omega[i] != F.alpha.coeff(i, 1))
            throw ConsistencyError("invariant differential: 1/log' and dF/dy(x,0) disagree at x^" +
                                   std::to_string(i));
    }
    return omega;
}

PairingTable pairing_series(const FGLTable& F) {
    int D = F.N + 2;
    PolySeries2 Fw(D);
    for (int i = 0; i <= F.N + 1; ++i)
        for (int j = 0; i + j <= F.N + 1; ++j) Fw(i, j) = F.alpha(i, j);
    // x omega(y) - y omega(x)
    PolySeries2 diff(D);
    for (int k = 0; k <= F.omega.order() && k + 1 <= D; ++k) {
        diff(1, k) += F.omega[k];
        diff(k, 1) -= F.omega[k];
    }
    PairingTable P;
    P.N = F.N;
    P.A = Fw * diff;
    return P;
}

PolySeries formal_inverse(const FGLTable& F) {
    int K = F.N + 1;
    // c_j(u) = sum_{i >= 1} alpha(i, j) u^i for j >= 1.
    std::vector<PolySeries> c(static_cast<std::size_t>(K) + 1, PolySeries(K));
    for (int j = 1; j <= K; ++j)
        for (int i = 1; i + j <= K; ++i) c[j][i] = F.alpha(i, j);
    PolySeries u = PolySeries::variable(K);
    PolySeries ubar = -u;
    // Each pass fixes one more coefficient: ubar = -u - sum_j c_j(u) ubar^j.
    for (int pass = 1; pass < K; ++pass) {
        PolySeries acc(K);
        for (int j = K; j >= 1; --j) {
            acc = acc + c[j];
            acc = acc * ubar;
        }
        ubar = -u - acc;
    }
    return ubar;
}

namespace {

std::string monomial3(int i, int j, int k) {
    std::ostringstream os;
    os << "x^" << i << " y^" << j << " z^" << k;
    return os.str();
}

}  // namespace

Report fgl_axiom_check(const PolySeries2& F, int N) {
    Report rep;
    rep.title = "formal group law axioms to weight " + std::to_string(N);
    int D = std::min(N + 1, F.degree());

    // Unit.
    std::string bad;
    for (int i = 0; i <= D && bad.empty(); ++i) {
        GradedPoly want = (i == 1) ? GradedPoly(1) : GradedPoly();
        if (F(i, 0) != want) bad = "F(x,0) - x at x^" + std::to_string(i) + ": " + (F(i, 0) - want).pretty();
        else if (F(0, i) != want)
            bad = "F(0,y) - y at y^" + std::to_string(i) + ": " + (F(0, i) - want).pretty();
    }
    rep.add("unit", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i <= D && bad.empty(); ++i)
        for (int j = i + 1; i + j <= D && bad.empty(); ++j)
            if (F(i, j) != F(j, i))
                bad = "alpha(" + std::to_string(i) + "," + std::to_string(j) + ") - alpha(" + std::to_string(j) +
                      "," + std::to_string(i) + ") = " + (F(i, j) - F(j, i)).pretty();
    rep.add("commutativity", bad.empty(), bad);

    // Associativity. P_a = F(x, y)^a; F(y, z)^b has the same coefficients.
    std::vector<PolySeries2> P;
    P.emplace_back(D);
    P[0](0, 0) = GradedPoly(1);
    for (int a = 1; a <= D; ++a) P.push_back(P.back() * F);
    bad.clear();
    for (int total = 1; total <= D && bad.empty(); ++total)
        for (int i = 0; i <= total && bad.empty(); ++i)
            for (int j = 0; i + j <= total && bad.empty(); ++j) {
                int k = total - i - j;
                GradedPoly lhs, rhs;
                // F(F(x,y), z) at x^i y^j z^k
                for (int a = 0; a + k <= D; ++a) {
                    const GradedPoly& f = F(a, k);
                    if (f.is_zero() || P[a](i, j).is_zero()) continue;
                    lhs += f * P[a](i, j);
                }
                // F(x, F(y,z)) at x^i y^j z^k
                for (int b = 0; i + b <= D; ++b) {
                    const GradedPoly& f = F(i, b);
                    if (f.is_zero() || P[b](j, k).is_zero()) continue;
                    rhs += f * P[b](j, k);
                }
                if (lhs != rhs) bad = "residual at " + monomial3(i, j, k) + ": " + (lhs - rhs).pretty();
            }
    rep.add("associativity", bad.empty(), bad);
    return rep;
}

PolySeries2 apply_strong_iso(const PolySeries& t, const PolySeries2& F) {
    if (t.order() < 1 || !t[0].is_zero() || t[1] != GradedPoly(1))
        throw DomainError("apply_strong_iso: t must be x + O(x^2)");
    PolySeries tinv = series_revert(t);
    return compose_outer(t, compose_inner(F, tinv, tinv));
}

}  // namespace fglwb
