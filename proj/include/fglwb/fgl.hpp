// The universal formal group law over Q[CP_1, CP_2, ...].
#pragma once

#include "fglwb/report.hpp"
#include "fglwb/series.hpp"

namespace fglwb {

/// Universal law to weight N: alpha(i, j) for i + j <= N + 1.
struct FGLTable {
    int N = 0;
    PolySeries2 alpha;  // degree N + 1
    PolySeries log;     // order N + 1
    PolySeries omega;   // order N

    const GradedPoly& a(int i, int j) const { return alpha(i, j); }
};

/// A(x, y) = F(x, y) (x omega(y) - y omega(x)), coefficients for i + j <= N + 2.
struct PairingTable {
    int N = 0;
    PolySeries2 A;  // degree N + 2

    const GradedPoly& a(int i, int j) const { return A(i, j); }
};

/// sum_{n >= 0} CP_n x^(n+1) / (n+1), CP_0 = 1, through x^(N+1).
PolySeries mishchenko_log(int N);

/// F(x, y) = exp(log x + log y). Checks omega two ways.
FGLTable universal_fgl(int N);

/// 1 / log'(x), cross-checked against 1 + sum alpha(i, 1) x^i.
PolySeries invariant_differential(const FGLTable& F);

PairingTable pairing_series(const FGLTable& F);

/// ubar(u) with F(u, ubar) = 0 through u^(N+1).
PolySeries formal_inverse(const FGLTable& F);

/// Unit, commutativity and associativity residuals of F to total weight N.
Report fgl_axiom_check(const PolySeries2& F, int N);
inline Report fgl_axiom_check(const FGLTable& F) { return fgl_axiom_check(F.alpha, F.N); }

/// t(F(t^-1(x), t^-1(y))) for t = x + O(x^2).
PolySeries2 apply_strong_iso(const PolySeries& t, const PolySeries2& F);

}  // namespace fglwb
