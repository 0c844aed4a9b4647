#include "doctest.h"
#include "ribbon/polynomial.hpp"

using namespace ribbon;

namespace {

SpinPolynomial golden_spin() {
    SpinPolynomial p;
    p.add_term(4, 3);
    p.add_term(6, 17);
    p.add_term(8, 33);
    p.add_term(10, 31);
    p.add_term(12, 18);
    p.add_term(14, 5);
    return p;
}

}  // namespace

TEST_CASE("addition") {
    SpinPolynomial a = SpinPolynomial::monomial(4, 3);
    SpinPolynomial b = SpinPolynomial::monomial(6, 17);
    SpinPolynomial sum = a + b;
    CHECK(sum.terms().at(4) == 3);
    CHECK(sum.terms().at(6) == 17);
    CHECK(sum + SpinPolynomial{} == sum);
    CHECK(SpinPolynomial::monomial(2) + SpinPolynomial::monomial(2) ==
          SpinPolynomial::monomial(2, 2));
}

TEST_CASE("shift") {
    CHECK(SpinPolynomial::one().shifted(2) == SpinPolynomial::monomial(2));
    CHECK(SpinPolynomial::monomial(2).shifted(-2) == SpinPolynomial::one());
    CHECK_THROWS_AS(SpinPolynomial::one().shifted(-1), NegativeExponent);
}

TEST_CASE("mirror") {
    SpinPolynomial mirrored = golden_spin().mirrored(14);
    SpinPolynomial expected;
    expected.add_term(0, 5);
    expected.add_term(2, 18);
    expected.add_term(4, 31);
    expected.add_term(6, 33);
    expected.add_term(8, 17);
    expected.add_term(10, 3);
    CHECK(mirrored == expected);
    CHECK(SpinPolynomial::one().mirrored(0) == SpinPolynomial::one());
    CHECK_THROWS_AS(SpinPolynomial::monomial(2).mirrored(0), PivotTooSmall);
    // involution for any admissible pivot
    CHECK(golden_spin().mirrored(20).mirrored(20) == golden_spin());
}

TEST_CASE("evaluation at one") {
    CHECK(golden_spin().eval_one() == 107);
    CHECK(SpinPolynomial{}.eval_one() == 0);
    SpinPolynomial big;
    big.add_term(0, BigInt("2492870571244950"));
    big.add_term(2, BigInt("2492870571244950"));
    CHECK(big.eval_one() == BigInt("4985741142489900"));
}

TEST_CASE("coefficients stay exact past 64 bits") {
    SpinPolynomial p;
    const BigInt huge = BigInt(1) << 90;
    p.add_term(0, huge);
    p.add_term(0, huge);
    CHECK(p.terms().at(0) == BigInt(1) << 91);
    CHECK((p + p).eval_one() == BigInt(1) << 92);
}

TEST_CASE("formatting") {
    SpinPolynomial p;
    p.add_term(4, 3);
    p.add_term(14, 5);
    CHECK(p.format(PolyStyle::plain) == "3*q^2 + 5*q^7");
    CHECK(p.format(PolyStyle::latex) == "3q^{2} + 5q^{7}");
    CHECK(SpinPolynomial::monomial(3).format(PolyStyle::plain) == "q^(3/2)");
    CHECK(SpinPolynomial::monomial(3).format(PolyStyle::latex) == "q^{3/2}");
    CHECK(SpinPolynomial::monomial(2, 2).format(PolyStyle::json) == R"([[2,"2"]])");
    CHECK(SpinPolynomial::monomial(2, 18).format(PolyStyle::plain) == "18*q");
    CHECK(SpinPolynomial::monomial(0, 5).format(PolyStyle::plain) == "5");
    CHECK(SpinPolynomial{}.format(PolyStyle::plain) == "0");
    CHECK(golden_spin().format(PolyStyle::plain) ==
          "3*q^2 + 17*q^3 + 33*q^4 + 31*q^5 + 18*q^6 + 5*q^7");
}

TEST_CASE("zero and negative coefficients are rejected or dropped") {
    SpinPolynomial p;
    p.add_term(2, 0);
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term(-2, 1), NegativeExponent);
}
