#include "ipd/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ipd;

namespace {
Polynomial X(int i) { return Polynomial::var_x(i); }
Polynomial Y(int i) { return Polynomial::var_y(i); }
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    CHECK(Polynomial{}.is_zero());
    CHECK((X(1) - X(1)).is_zero());
    CHECK((X(1) + X(2)) * (X(1) - X(2)) == X(1) * X(1) - X(2) * X(2));
    CHECK(Polynomial(3) + Polynomial(Rational(1, 2)) == Polynomial(Rational(7, 2)));
    CHECK((X(1) * X(2)).degree() == 2);
    CHECK(Polynomial{}.degree() == -1);
    CHECK((Rational(2) * X(1)).coeff({{1}, {}}) == 2);
}

TEST_CASE("zero coefficients are never stored") {
    Polynomial p = X(1) * X(2) + X(2) * X(1) - Rational(2) * (X(1) * X(2));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("serialization uses the graded term order") {
    Polynomial p = Rational(2) * (X(1) * X(1) * X(2)) + X(1) * X(3) - Polynomial(1);
    CHECK(p.to_string() == "2*x1^2*x2 + x1*x3 - 1");
    CHECK(Polynomial{}.to_string() == "0");
    CHECK((Rational(1, 2) * X(1)).to_string() == "1/2*x1");
    CHECK((Polynomial(0) - X(2)).to_string() == "-x2");
    // degree-2 block in the documented order
    Polynomial q = (X(1) + X(2)) * (X(1) + X(2)) + X(1) * X(3) + X(2) * X(3);
    CHECK(q.to_string() == "x1^2 + 2*x1*x2 + x2^2 + x1*x3 + x2*x3");
    // y block follows the x block
    CHECK((X(1) - Y(1)).to_string() == "x1 - y1");
    CHECK((X(2) * Y(3)).to_string() == "x2*y3");
}

TEST_CASE("specializations") {
    Polynomial p = X(1) * X(2) + X(3);
    CHECK(p.eval_all_x(1) == 2);
    CHECK(p.eval_all_x(Rational(1, 2)) == Rational(3, 4));
    CHECK(Polynomial(1).eval_all_x(7) == 1);
    CHECK_THROWS_AS((X(1) - Y(1)).eval_all_x(1), std::invalid_argument);
    CHECK((X(1) * Y(2) + X(1)).with_y_zero() == X(1));
}

TEST_CASE("integrality detection") {
    CHECK((X(1) + X(2)).is_integral());
    CHECK_FALSE((Rational(1, 2) * X(1)).is_integral());
    CHECK((Rational(1, 2) * X(1) + Rational(1, 2) * X(1)).is_integral());
}

TEST_CASE("divided differences") {
    // d_i of a symmetric-in-(i,i+1) polynomial vanishes
    CHECK(divided_difference(X(1) * X(2), 1).is_zero());
    CHECK(divided_difference(X(1) + X(2), 1).is_zero());
    // d_1(x1^2 x2) = x1 x2
    CHECK(divided_difference(X(1) * X(1) * X(2), 1) == X(1) * X(2));
    // d_1(x1) = 1, d_1(x2) = -1
    CHECK(divided_difference(X(1), 1) == Polynomial(1));
    CHECK(divided_difference(X(2), 1) == Polynomial(-1));
    // telescoping: d_1(x1^3) = x1^2 + x1 x2 + x2^2
    CHECK(divided_difference(X(1) * X(1) * X(1), 1) ==
          X(1) * X(1) + X(1) * X(2) + X(2) * X(2));
    // d_i d_i = 0 on assorted inputs
    for (const Polynomial& f : {X(1) * X(1) * X(2) * X(3), X(2) * X(2), X(1) * X(2) + X(3) * X(3)})
        for (int i : {1, 2})
            CHECK(divided_difference(divided_difference(f, i), i).is_zero());
}
