#include "support.hpp"

#include <doctest.h>

using namespace fglwb;
using namespace fglwb::test;

namespace {

PolySeries series(int order, std::vector<GradedPoly> c) { return PolySeries(order, std::move(c)); }

}  // namespace

TEST_SUITE("series") {

TEST_CASE("product and composition") {
    PolySeries x = PolySeries::variable(6);
    PolySeries s = series(6, {0, 1, 3, 0, cp(2)});
    CHECK(series_compose(x, s) == s);
    CHECK(series(6, {1, 1}) * series(6, {1, -1}) == series(6, {1, 0, -1}));
    CHECK(series_compose(series(6, {0, 0, 1}), series(6, {0, 1, 1})) == series(6, {0, 0, 1, 2, 1}));
    CHECK_THROWS_AS(series_compose(x, series(6, {1, 1})), DomainError);
}

TEST_CASE("reversion") {
    PolySeries x = PolySeries::variable(8);
    CHECK(series_revert(x) == x);
    // x - x^2 reverts to the Catalan generating function; oracle from the closed form.
    PolySeries r = series_revert(series(8, {0, 1, -1}));
    for (int n = 1; n <= 8; ++n) {
        BigInt catalan = binomial(2 * (n - 1), n - 1) / n;
        CHECK(r[n] == GradedPoly(Rat(catalan)));
    }
    PolySeries s = series(8, {0, 1, cp(1), cp(2) * Rat(1, 3), cp(1).pow(3)});
    CHECK(series_compose(series_revert(s), s) == x);
    CHECK(series_compose(s, series_revert(s)) == x);
    CHECK_THROWS_AS(series_revert(series(4, {0, 0, 1})), DomainError);
    CHECK_THROWS_AS(series_revert(series(4, {0, cp(1)})), DomainError);
}

TEST_CASE("binomial powers") {
    PolySeries one_plus_x = series(6, {1, 1});
    PolySeries r = series_binomial_pow(one_plus_x, Rat(-1, 2));
    Rat coeff = 1;
    for (int k = 0; k <= 6; ++k) {
        CHECK(r[k] == GradedPoly(coeff));
        coeff *= Rat(-1, 2) - k;
        coeff /= k + 1;
    }
    CHECK(r[3] == GradedPoly(Rat(-5, 16)));
    PolySeries s = series(6, {1, cp(1), cp(2), cp(1) * cp(2)});
    CHECK(series_binomial_pow(s, Rat(0)) == PolySeries::constant(6, 1));
    PolySeries h = series_binomial_pow(s, Rat(1, 2));
    CHECK(h * h == s);
    CHECK_THROWS_AS(series_binomial_pow(series(4, {2, 1}), Rat(1, 2)), DomainError);
}

TEST_CASE("derivative, integral and reciprocal") {
    CHECK(series_derive(series(5, {0, 0, 0, 1})) == series(4, {0, 0, 3}));
    CHECK(series_integrate(series(4, {1, Rat(-1, 2)})) == series(5, {0, 1, Rat(-1, 4)}));
    PolySeries r = series_reciprocal(series(2, {1, cp(1)}));
    CHECK(r == series(2, {1, -cp(1), cp(1).pow(2)}));
    PolySeries s = series(5, {1, cp(1), cp(2), 7});
    CHECK(s * series_reciprocal(s) == PolySeries::constant(5, 1));
    PolySeries z = series(5, {0, cp(1), 3, cp(3)});
    CHECK(series_derive(series_integrate(z)) == z);
    CHECK_THROWS_AS(series_reciprocal(series(3, {cp(1), 1})), DomainError);
}

TEST_CASE("two-variable series") {
    PolySeries s = series(4, {0, 1, cp(1)});
    PolySeries2 X = PolySeries2::from_univariate(s, 0, 4);
    CHECK(X(1, 0) == GradedPoly(1));
    CHECK(X(2, 0) == cp(1));
    CHECK(X(0, 1).is_zero());
    PolySeries2 Y = X.transposed();
    PolySeries2 XY = X * Y;
    CHECK(XY(1, 1) == GradedPoly(1));
    CHECK(XY(2, 1) == cp(1));
    CHECK(XY(2, 2) == cp(1).pow(2));
    CHECK((X + Y - Y) == X);
    PolySeries2 sq = compose_outer(series(4, {0, 0, 1}), X + Y);
    CHECK(sq(1, 1) == GradedPoly(2));
    PolySeries2 sub = compose_inner(X * Y, PolySeries::variable(4), series(4, {0, 2}));
    CHECK(sub(1, 1) == GradedPoly(2));
    CHECK(sub(2, 1) == cp(1) * Rat(2));
}

TEST_CASE("homogeneity flags") {
    CHECK(is_log_homogeneous(mishchenko_log(6)));
    CHECK_FALSE(is_log_homogeneous(series(3, {0, 1, cp(2)})));
    CHECK(is_omega_homogeneous(series_reciprocal(series_derive(mishchenko_log(6)))));
}

}
