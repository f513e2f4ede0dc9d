#include "fglwb/suw.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace fglwb;
using namespace fglwb::test;

namespace {

using ChernPoly = std::map<std::vector<int>, Rat>;

// Power sum p_n of the Chern roots as a polynomial in c_1..c_n, by Newton's identities.
ChernPoly newton_power_sum(int n) {
    std::vector<ChernPoly> p(n + 1);
    for (int k = 1; k <= n; ++k) {
        ChernPoly acc;
        for (int i = 1; i < k; ++i) {
            Rat sign = (i % 2 == 1) ? 1 : -1;
            for (const auto& [parts, c] : p[k - i]) {
                std::vector<int> q = parts;
                q.push_back(i);
                std::sort(q.rbegin(), q.rend());
                acc[q] += sign * c;
            }
        }
        acc[{k}] += Rat(k % 2 == 1 ? k : -k);
        p[k] = acc;
    }
    return p[n];
}

Rat s_via_newton(const GradedPoly& M, int n) {
    Rat total = 0;
    for (const auto& [parts, c] : newton_power_sum(n))
        if (c != 0) total += c * chern_number(M, Partition(parts));
    return total;
}

const WTable& w6() {
    static const FGLTable F = universal_fgl(6);
    static const WTable W = w_coefficients(F);
    return W;
}

}  // namespace

TEST_SUITE("suw") {

TEST_CASE("partitions") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(4).front() == Partition({4}));
    CHECK(Partition({1, 2, 1}).parts() == std::vector<int>{2, 1, 1});
    CHECK(Partition({2, 1, 1}).str() == "c1c1c2");
    CHECK(Partition({3, 1}).contains(1));
    CHECK_FALSE(Partition({3, 2}).contains(1));
}

TEST_CASE("Chern numbers of products of projective spaces") {
    CHECK(chern_number(cp(3), Partition({3})) == 4);
    CHECK(chern_number(cp(1) * cp(2), Partition({2, 1})) == 24);
    CHECK(chern_number(cp(4), Partition({1, 1, 1, 1})) == 625);
    CHECK(chern_number(cp(2), Partition({1, 1})) == 9);
    CHECK(chern_number(cp(2), Partition({2})) == 3);
    CHECK(chern_number(cp(1).pow(2), Partition({1, 1})) == 8);
    CHECK(chern_number(cp(1).pow(2), Partition({2})) == 4);
    CHECK(chern_number(cp(2) * Rat(2) - cp(1).pow(2), Partition({2})) == 2);
    CHECK_THROWS_AS(chern_number(cp(2), Partition({3})), DomainError);
}

TEST_CASE("s-numbers agree with Newton's identities") {
    std::vector<GradedPoly> samples = {cp(2),         cp(1).pow(2),       cp(4),
                                       cp(2).pow(2),  cp(1) * cp(3),      P("CP1^2*CP3 - 2*CP2*CP3 + 7*CP5"),
                                       P("CP6 - CP1*CP2*CP3 + 1/3*CP2^3")};
    for (const auto& M : samples) {
        int n = *M.weight();
        CAPTURE(M.pretty());
        CHECK(s_number_manifold(M) == s_via_newton(M, n));
        CHECK(s_number_manifold(M) == s_number(M, n));
    }
    CHECK(s_number_manifold(cp(4)) == 5);
    CHECK(s_number_manifold(cp(2).pow(2)) == 0);
}

TEST_CASE("SU checks") {
    SUGenerators g = build_x234(fgl12());
    CHECK(g.x2 == P("CP2 - 9/8*CP1^2"));
    CHECK(g.x3 * Rat(-2) == reference_two_alpha22());
    CHECK(g.x4 == reference_x4());
    CHECK(su_check(g.x2).passed());
    CHECK(su_check(g.x3).passed());
    CHECK(su_check(g.x4).passed());
    CHECK_FALSE(su_check(cp(1)).passed());
    CHECK_FALSE(su_check(cp(2)).passed());
    CHECK(s_number(g.x2, 2) == 3);
    CHECK(s_number(g.x3, 3) == 6);
    CHECK(s_number(g.x4, 4) == 10);
}

TEST_CASE("gamma orientation") {
    const FGLTable& F = fgl12();
    auto ring = gamma_ring(F);
    CHECK(ring->r1 == F.a(1, 1));
    CHECK(ring->r0 == F.a(1, 2) * Rat(2));
    QuadSeries g = gamma_series(F, ring);
    CHECK(g[1].even() == GradedPoly(1));
    CHECK(g[1].odd().is_zero());
    CHECK(g[2].even().is_zero());
    CHECK(g[2].odd() == GradedPoly(-1));
}

TEST_CASE("W-theory coefficients") {
    const WTable& W = w6();
    WCoefficient w11 = W.w(1, 1);
    CHECK(w11.cls == -cp(1));
    CHECK(w11.bnd == GradedPoly(-2));
    CHECK(W.w(1, 2).cls.is_zero());
    CHECK(W.w(1, 2).bnd.is_zero());
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; i + j <= 6; ++j) {
            CHECK(W.w(i, j).cls == W.w(j, i).cls);
            CHECK(W.w(i, j).bnd == W.w(j, i).bnd);
            if (!W.w(i, j).cls.is_zero()) CHECK(W.w(i, j).cls.weight() == i + j - 1);
        }
}

TEST_CASE("star product") {
    QuadParams ring{cp(1) * Rat(-1), GradedPoly(2)};
    WPair one{GradedPoly(1), GradedPoly()};
    WPair tau{GradedPoly(), GradedPoly(1)};
    WPair a{cp(2), cp(1)};
    CHECK(star_product(one, a, ring) == a);
    CHECK(star_product(tau, tau, ring) == WPair{ring.r0, ring.r1});
    CHECK(star_product(a, tau, ring) == WPair{cp(1) * ring.r0, cp(2) + cp(1) * ring.r1});
    WPair b{cp(1).pow(2), GradedPoly(3)};
    CHECK(star_product(a, b, ring) == star_product(b, a, ring));
}

TEST_CASE("b_k and x_k") {
    const FGLTable F = universal_fgl(6);
    SUGenerators g = build_x234(F);
    auto rows = build_bk_xk(F, w6());
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        CAPTURE(r.k);
        CHECK(r.s_x == r.s_b * 2);
        CHECK(r.x == r.b.cls * Rat(2) - cp(1) * r.b.bnd);
        if (r.su_checked) CHECK(r.su_pass);
        if (r.k == 3) CHECK(r.x == g.x3 * Rat(2));
        if (r.k == 4) CHECK(r.x == g.x4 * Rat(-6));
    }
}

TEST_CASE("s-number ledger") {
    auto rows = snumber_ledger_rows(12);
    auto by_k = [&](int k) { return rows.at(static_cast<std::size_t>(k - 3)); };
    CHECK(by_k(9).expected_ratio == 3);
    CHECK(by_k(6).expected_ratio == 1);
    CHECK(by_k(8).expected_ratio == 4);
    CHECK(by_k(8).exceptional);
    CHECK_FALSE(by_k(9).exceptional);
    for (const auto& r : rows)
        for (const auto& x : r.ratio) CHECK(x == r.expected_ratio);
    CHECK(snumber_ledger_report(20).passed());
    CHECK_THROWS_AS(snumber_ledger_rows(2), DomainError);
}

}
