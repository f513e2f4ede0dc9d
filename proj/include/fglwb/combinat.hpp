// Binomial gcd functions, s-numbers, generator combinations and Novikov's
// criterion.
#pragma once

#include "fglwb/fgl.hpp"
#include "fglwb/report.hpp"

#include <vector>

namespace fglwb {

/// gcd of binom(m+1, i), i = 1..m.
BigInt d_gcd(long m);
/// gcd of binom(m+1, i) - binom(m+1, i-1), 2 < i <= m-1, zeros skipped. m >= 5.
BigInt D_gcd(long m);
/// gcd of binom(m+1, i), 2 <= i <= m-2 for m >= 4; d2(3) = binom(4, 2).
BigInt d2_gcd(long m);
/// p if m + 1 = p^s, else 1.
BigInt d_closed_form(long m);

/// D/d, d2 = d(m) d(m-1) and the closed form of d, for m up to M.
Report verify_gcd_laws(long M);

/// Power-sum Chern number of a homogeneous class of weight n:
/// (n+1) * coefficient of CP_n.
Rat s_number(const GradedPoly& p, int n);

enum class ComboKind { E, T, Z };

struct GeneratorCombo {
    int m = 0;
    ComboKind kind = ComboKind::E;
    int first_index = 1;        // lambda[k] multiplies the term with index first_index + k
    std::vector<BigInt> lambda;
    GcdCertificate certificate; // over the nonzero s-numbers actually used
    GradedPoly cls;
    Rat s;                      // s_m(cls)
};

/// E: sum_{i=1..m} lambda_i alpha(i, m+1-i), lambda from binom(m+1, i).
/// T: sum_{i=3..m-1} lambda_i A(i, m+2-i), lambda from s_m(A(i, m+2-i)).
/// Z: sum_{i=2..m-1} lambda_i alpha(i, m+1-i), lambda from binom(m+1, i).
GeneratorCombo build_combo(int m, ComboKind kind, const FGLTable& F, const PairingTable& A);

struct NovikovResult {
    bool admissible = false;
    DyadicSplit split;
    long prime = 0;  // the odd prime p with n = p^l or n+1 = p^l, 0 if none
};

NovikovResult novikov_admissible(int n, const Rat& s);

std::string combo_kind_name(ComboKind k);

}  // namespace fglwb
