#include <doctest.h>

#include "orbicurve/laurent.hpp"

using namespace orbicurve;

TEST_CASE("series valuation") {
    // x^3 + x^4 truncated at 10 -> 3
    Laurent s = Laurent::monomial(Rat(1), 3, 10) + Laurent::monomial(Rat(1), 4, 10);
    CHECK(s.valuation() == 3);
    // x^-2 + 1 -> -2
    Laurent t = Laurent::monomial(Rat(1), -2) + Laurent::monomial(Rat(1), 0);
    CHECK(t.valuation() == -2);
    // all-zero to order 8 -> zero-to-truncation
    Laurent z = Laurent::monomial(Rat(1), 9, 8);
    CHECK(!z.valuation().has_value());
    CHECK(z.truncation() == 8);
}

TEST_CASE("arithmetic tracks valuations exactly") {
    Laurent x = Laurent::monomial(Rat(1), 1);
    Laurent a = Laurent::from_poly(Poly<Rat>{1, 2, 3});
    Laurent b = Laurent::monomial(Rat(2), -3) * a;
    CHECK(b.valuation() == -3);
    CHECK((a * b).valuation() == -3);
    CHECK((a + (-a)).known_zero());
    CHECK((x.pow(4)).valuation() == 4);
    CHECK(b.coeff(-3) == Rat(2));
    CHECK(b.coeff(-1) == Rat(6));
}

TEST_CASE("division is exact on valuations") {
    // (x^2 + x^3) / (x^5 (1 - x)) has valuation -3
    Laurent num = Laurent::monomial(Rat(1), 2) + Laurent::monomial(Rat(1), 3);
    Laurent den = Laurent::monomial(Rat(1), 5) *
                  (Laurent::monomial(Rat(1), 0) - Laurent::monomial(Rat(1), 1));
    Laurent q = Laurent::divide(num, den, 10);
    CHECK(q.valuation() == -3);
    // geometric series: 1/(1-x) has all coefficients 1
    Laurent g = Laurent::divide(Laurent::monomial(Rat(1), 0),
                                Laurent::monomial(Rat(1), 0) - Laurent::monomial(Rat(1), 1), 8);
    for (long e = 0; e <= 8; ++e) CHECK(g.coeff(e) == Rat(1));
    // (x^2+x^3)/x^2 = 1 + x exactly
    Laurent e = Laurent::divide(num, Laurent::monomial(Rat(1), 2));
    CHECK(e.is_exact());
    CHECK(e.coeff(0) == Rat(1));
    CHECK(e.coeff(1) == Rat(1));
    CHECK_THROWS_AS(Laurent::divide(num, Laurent::zero()), Error);
}

TEST_CASE("division by truncated-to-zero divisor is flagged") {
    Laurent z = Laurent::monomial(Rat(1), 9, 8);  // zero to truncation 8
    CHECK_THROWS_AS(Laurent::divide(Laurent::monomial(Rat(1), 0), z), TruncationError);
}

TEST_CASE("polynomial evaluation into series") {
    Poly<Rat> p{0, 0, 1};  // y^2
    Laurent s = Laurent::monomial(Rat(1), -1) + Laurent::monomial(Rat(1), 0);  // 1/x + 1
    Laurent v = Laurent::eval_poly(p, s);
    CHECK(v.valuation() == -2);
    CHECK(v.coeff(-2) == Rat(1));
    CHECK(v.coeff(-1) == Rat(2));
    CHECK(v.coeff(0) == Rat(1));
    CHECK(Laurent::eval_poly(Poly<Rat>{}, s).known_zero());
}

TEST_CASE("derivative shifts valuation") {
    Laurent s = Laurent::monomial(Rat(1), -2) + Laurent::monomial(Rat(3), 4);
    Laurent d = s.derivative();
    CHECK(d.coeff(-3) == Rat(-2));
    CHECK(d.coeff(3) == Rat(12));
    // derivative of a constant vanishes
    CHECK(Laurent::monomial(Rat(5), 0).derivative().known_zero());
}
