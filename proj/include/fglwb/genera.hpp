// Genera and classifying maps: Krichever-Hoehn, Schreieder, Buchstaber and
// abelian quotients realised by degreewise elimination.
#pragma once

#include "fglwb/combinat.hpp"
#include "fglwb/fgl.hpp"
#include "fglwb/report.hpp"

#include <string>
#include <vector>

namespace fglwb {

/// Ring map out of Q[CP_1, ..., CP_N] given by generator images.
struct ClassifyingMap {
    std::string name;
    int N = 0;
    GeneratorImages images;              // CP_n -> image, n <= N
    std::vector<Generator> target_gens;
};

/// Multiplicative extension of the generator images. cls must have weight <= N.
GradedPoly genus_eval(const ClassifyingMap& map, const GradedPoly& cls);

/// The series with every coefficient pushed through the map.
PolySeries map_series(const ClassifyingMap& map, const PolySeries& s);

struct KHSolution {
    int N = 0;
    PolySeries f;  // exponential, order N + 1, over Q[q1..q4]
    PolySeries g;  // logarithm = revert(f)
    ClassifyingMap phi;
};

/// Solves (f''f - f'^2)^2 = f'^4 + q1 f'^3 f + q2 f'^2 f^2 + q3 f' f^3 + q4 f^4
/// order by order with f = x + O(x^2).
KHSolution kh_solve(int N);

/// (f''f - f'^2)^2 - (f'^4 + q1 f'^3 f + ... + q4 f^4), through x^order.
PolySeries kh_residual(const PolySeries& f, int order);

/// log' = (1 + q1 x + q2 x^2 + q3 x^3 + q4 x^4)^(-1/2) = sum psi(CP_n) x^n.
ClassifyingMap schreieder_genus(int N);

/// Kills the pairing coefficients A(i, j), i, j >= 3, weight by weight using
/// T_n; CP_1..CP_4 are retained.
ClassifyingMap buchstaber_map(const FGLTable& F, const PairingTable& A);

/// Kills alpha(i, j), i, j >= 2, using z_k; CP_1, CP_2 are retained.
ClassifyingMap abelian_map(const FGLTable& F);

enum class IdealFamily { Pairing, Alpha };

/// Images of A(i, j), i, j >= 3 (Pairing) or alpha(i, j), i, j >= 2 (Alpha)
/// up to the map's weight; passes iff all vanish.
Report annihilation_report(const ClassifyingMap& map, IdealFamily family, const FGLTable& F,
                           const PairingTable& A);

/// phi_KH(A(i, j)) = 0 for 3 <= i, j, i + j - 2 <= N.
Report kh_factors_through_buchstaber(const KHSolution& kh, const PairingTable& A);

struct QuarticCertificate {
    int N = 0;
    PolySeries L;                          // log_B(t^-1(x)), t(x) = x / omega_B(x)
    PolySeries inv_sq_derivative;          // 1 / (L')^2
    std::vector<GradedPoly> q_dictionary;  // coefficients of x^0..x^4
    std::vector<GradedPoly> tail_residuals;  // coefficients of x^5..x^N
    int first_offending = -1;              // exponent of first nonzero tail coefficient
    int forward_first_offending = -1;      // same test for log_B(t(x)); diagnostic only

    bool passes() const { return first_offending < 0; }
};

QuarticCertificate quartic_certificate(const ClassifyingMap& buchstaber, const FGLTable& F);

/// An SU generator of weight k, as a class in MU.
struct WeightedClass {
    int k = 0;
    GradedPoly cls;
};

/// f_B and r_Ab on SU generators. Checks r_Ab(x2) = x2 and r_Ab(x3) = r_Ab(x4) = 0;
/// for k >= 5 records as findings whether r_Ab(x_k) is 0 (k odd) or a dyadic
/// multiple of r_Ab(x2)^(k/2) (k even).
Report su_restriction_report(const std::vector<WeightedClass>& generators, const ClassifyingMap& buchstaber,
                             const ClassifyingMap& abelian);

}  // namespace fglwb
