// Chern numbers of products of projective spaces, SU checks, the W-theory
// formal group law over MU[t]/(t^2 - alpha11 t - 2 alpha21) and SU generators.
#pragma once

#include "fglwb/combinat.hpp"
#include "fglwb/fgl.hpp"
#include "fglwb/report.hpp"

#include <memory>
#include <vector>

namespace fglwb {

/// Parts in descending order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const;
    bool contains(int part) const;
    std::string str() const;  // "c1c1c2" style: ascending Chern indices

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, each descending, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Chern number c_w[M] for M a homogeneous Q-combination of products of CP_n.
Rat chern_number(const GradedPoly& M, const Partition& w);

/// Power-sum Chern number, computed from the Chern roots of each product.
Rat s_number_manifold(const GradedPoly& M);

/// Default weight above which su_check does not enumerate partitions.
inline constexpr int kDefaultPartitionCap = 10;

/// Every Chern number with a c1 factor must vanish.
Report su_check(const GradedPoly& M, int partition_cap = kDefaultPartitionCap);

struct SUGenerators {
    GradedPoly x2, x3, x4;
};

/// x2 = CP2 - 9/8 CP1^2, x3 = -alpha22, x4 = -alpha23 - x3 CP1 / 2.
/// Throws ConsistencyError if alpha22 or x4 disagree with the reference expressions.
SUGenerators build_x234(const FGLTable& F);

/// Fixed reference expressions.
GradedPoly reference_two_alpha22();
GradedPoly reference_alpha23();
GradedPoly reference_x4();

/// tau^2 = alpha11 tau + 2 alpha12.
std::shared_ptr<const QuadParams> gamma_ring(const FGLTable& F);

/// gamma(u) = u + tau u ubar + sum_{i >= 2} alpha(i,1) u ubar^i, order N + 1.
QuadSeries gamma_series(const FGLTable& F, std::shared_ptr<const QuadParams> ring);

struct WCoefficient {
    int i = 0, j = 0;
    GradedPoly cls;  // w_ij, weight i + j - 1
    GradedPoly bnd;  // boundary, weight i + j - 2
};

struct WTable {
    int N = 0;
    std::shared_ptr<const QuadParams> ring;
    QuadSeries gamma;
    QuadSeries2 law;  // gamma(F(gamma^-1 u, gamma^-1 v)), degree N + 1

    WCoefficient w(int i, int j) const;
};

WTable w_coefficients(const FGLTable& F);

/// A class together with its boundary.
struct WPair {
    GradedPoly cls;
    GradedPoly bnd;
    bool operator==(const WPair&) const = default;
};

/// (a + tau da)(b + tau db) in the gamma ring.
WPair star_product(const WPair& a, const WPair& b, const QuadParams& ring);

struct SUGeneratorRow {
    int k = 0;
    WPair b;
    GradedPoly x;      // 2 b.cls - CP1 b.bnd
    Rat s_b, s_x;
    NovikovResult novikov;
    bool su_checked = false;  // false when k exceeds the partition cap
    bool su_pass = false;
};

/// b_k from the E-kind lambda vectors and x_k = boundary(CP1 * b_k), 2 <= k <= N.
std::vector<SUGeneratorRow> build_bk_xk(const FGLTable& F, const WTable& W,
                                        int partition_cap = kDefaultPartitionCap);

struct SNumberLedgerRow {
    int k = 0;
    BigInt divisor;   // d(k-1) or its replacement
    bool exceptional = false;
    Rat s_wk;         // s_k(w_k)
    std::vector<Rat> s_alpha;  // s_k(alpha(i, k+1-i)), i = 1..k
    std::vector<Rat> s_w;      // s_k(w(i, k+1-i)) from the formulas
    std::vector<Rat> ratio;
    Rat expected_ratio;
    BigInt gcd_w;
};

/// s-number ledger of the tuned orientation, modulo decomposables.
std::vector<SNumberLedgerRow> snumber_ledger_rows(int K);
Report snumber_ledger_report(int K);

}  // namespace fglwb
