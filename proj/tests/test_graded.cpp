#include "support.hpp"

#include <doctest.h>

using namespace fglwb;
using namespace fglwb::test;

TEST_SUITE("graded") {

TEST_CASE("generators and monomials") {
    CHECK(Generator::cp(3).name() == "CP3");
    CHECK(Generator::q(2).name() == "q2");
    CHECK_THROWS_AS(Generator::cp(0), DomainError);
    CHECK_THROWS_AS(Generator::q(5), DomainError);
    Monomial m = Monomial(Generator::cp(3)) * Monomial(Generator::cp(1), 2);
    CHECK(m.str() == "CP1^2*CP3");
    CHECK(m.weight() == 5);
    CHECK(Monomial().str() == "1");
}

TEST_CASE("canonical monomial order") {
    MonomialLess less;
    Monomial a(Generator::cp(1), 3), b = Monomial(Generator::cp(1)) * Monomial(Generator::cp(2)),
        c(Generator::cp(3));
    CHECK(less(a, b));
    CHECK(less(b, c));
    CHECK(less(Monomial(Generator::cp(2)), a));
    CHECK(less(Monomial(Generator::cp(4)), Monomial(Generator::q(4))));
    CHECK((cp(3) + cp(1) * cp(2) + cp(1).pow(3)).pretty() == "CP1^3 + CP1*CP2 + CP3");
}

TEST_CASE("arithmetic") {
    CHECK(cp(1) * cp(1) == cp(1).pow(2));
    CHECK((cp(2) - cp(1).pow(2) * Rat(9, 8)) + cp(1).pow(2) * Rat(9, 8) == cp(2));
    CHECK((cp(1).pow(2) - cp(2)) * cp(1) == cp(1).pow(3) - cp(1) * cp(2));
    CHECK((cp(1) - cp(1)).is_zero());
    CHECK(GradedPoly(Rat(3, 2)).scalar() == Rat(3, 2));
    CHECK_FALSE(cp(1).scalar().has_value());
}

TEST_CASE("coefficients and weights") {
    GradedPoly x3num = (cp(3) * Rat(-3) + cp(1) * cp(2) * Rat(8) - cp(1).pow(3) * Rat(5)) * Rat(1, 2);
    CHECK((cp(1).pow(2) - cp(2)).coeff_of(Monomial(Generator::cp(2))) == -1);
    CHECK(x3num.coeff_of(Monomial(Generator::cp(3))) == Rat(-3, 2));
    CHECK(GradedPoly().coeff_of(Monomial(Generator::cp(5))) == 0);
    CHECK(x3num.weight() == 3);
    CHECK_FALSE((cp(1) + cp(2)).weight().has_value());
    CHECK((cp(1) + cp(2)).max_weight() == 2);
    CHECK(GradedPoly().max_weight() == -1);
    CHECK((cp(1) + cp(2) * cp(3)).truncated(2) == cp(1));
    CHECK(mul_truncated(cp(1) + cp(2), cp(1) + cp(2), 3) == cp(1).pow(2) + cp(1) * cp(2) * Rat(2));
}

TEST_CASE("printing") {
    GradedPoly p = cp(1).pow(2) * Rat(-9, 8) + cp(2);
    CHECK(p.pretty() == "-9/8*CP1^2 + CP2");
    CHECK(p.canonical() == "-9/8*CP1^2 + 1/1*CP2");
    CHECK(GradedPoly().pretty() == "0");
    CHECK(GradedPoly().canonical() == "0");
    CHECK(GradedPoly(Rat(-1, 3)).pretty() == "-1/3");
    CHECK((cp(1) * Rat(-1)).pretty() == "-CP1");
    CHECK(parse_class(p.pretty()) == p);
    CHECK(parse_class(p.canonical()) == p);
}

TEST_CASE("substitution") {
    GeneratorImages id{{Generator::cp(4), cp(4)}};
    CHECK(substitute(cp(4), id, 4) == cp(4));
    GradedPoly img = (cp(1) * cp(2) * Rat(8) - cp(1).pow(3) * Rat(5)) * Rat(1, 3);
    GeneratorImages m{{Generator::cp(3), img}};
    CHECK(substitute(cp(3).pow(2), m, 6) == img * img);
    CHECK_THROWS_AS(substitute(cp(3) * cp(1), m, 6), DomainError);  // CP1 has no image
    GeneratorImages bad{{Generator::cp(2), cp(1) + cp(2)}};
    CHECK_THROWS_AS(substitute(cp(2), bad, 4), DomainError);
    GeneratorImages wrong_weight{{Generator::cp(2), cp(3)}};
    CHECK_THROWS_AS(substitute(cp(2), wrong_weight, 4), DomainError);
}

TEST_CASE("quadratic extension") {
    auto params = std::make_shared<const QuadParams>(QuadParams{-cp(1), (cp(1).pow(2) - cp(2)) * Rat(2)});
    QuadElem t = QuadElem::tau(params);
    QuadElem tt = t * t;
    CHECK(tt.even() == params->r0);
    CHECK(tt.odd() == params->r1);
    QuadElem ttt = tt * t;
    CHECK(ttt.even() == params->r0 * params->r1);
    CHECK(ttt.odd() == params->r0 + params->r1 * params->r1);
    QuadElem x(cp(2), cp(1), params);
    CHECK(QuadElem(1) * x == x);
    CHECK(x.is_homogeneous_of(2));
    CHECK_FALSE(x.is_homogeneous_of(3));

    auto other = std::make_shared<const QuadParams>(QuadParams{cp(1), GradedPoly()});
    CHECK_THROWS_AS(QuadElem::tau(params) * QuadElem::tau(other), DomainError);
}

}
