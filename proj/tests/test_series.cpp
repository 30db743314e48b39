#include <doctest.h>

#include "k3gm/bipoly.hpp"
#include "k3gm/biseries.hpp"
#include "k3gm/logseries.hpp"
#include "k3gm/qseries.hpp"
#include "k3gm/rational.hpp"

#include <stdexcept>

using namespace k3gm;

namespace {

QSeries q_of(std::initializer_list<int> cs)
{
    std::vector<Rational> v;
    for (int c : cs) {
        v.emplace_back(c);
    }
    return QSeries(0, v);
}

} // namespace

TEST_CASE("rational strings")
{
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK(parse_rational("10/-4") == Rational(-5, 2));
    CHECK(parse_rational("-12") == -12);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("geometric series inverse")
{
    QSeries one_minus_q = q_of({1, -1, 0, 0, 0, 0});
    QSeries g = inv(one_minus_q);
    for (int e = 0; e <= 5; ++e) {
        CHECK(g.coeff(e) == 1);
    }
    CHECK_THROWS(g.coeff(6));
}

TEST_CASE("univariate square root of 1 + 4q")
{
    // sqrt(1+4q) = 1 + 2q - 2q^2 + 4q^3 - 10q^4
    QSeries s = nth_root(q_of({1, 4, 0, 0, 0}), 2);
    CHECK(s.coeffs() == std::vector<Rational>{1, 2, -2, 4, -10});
}

TEST_CASE("Laurent series arithmetic keeps the pole order")
{
    QSeries a = shift(q_of({1, 2, 3}), -1);
    CHECK(a.pole_order() == 1);
    CHECK(a.coeff(-1) == 1);
    QSeries b = a * q_of({0, 1, 0});
    CHECK(b.coeff(0) == 1);
    CHECK(b.valuation() == 0);
    CHECK(theta(a).coeff(-1) == -1);
    CHECK(dilate(q_of({1, 1, 0, 0, 0}), 2).coeff(2) == 1);
}

TEST_CASE("bivariate product, orders and coefficient access")
{
    BiSeries a(3, 3);
    a.set(0, 0, 1);
    a.set(1, 0, 1);
    BiSeries b(2, 3);
    b.set(0, 0, 1);
    b.set(0, 1, -1);
    BiSeries c = a * b;
    CHECK(c.order1() == 2);
    CHECK(c.order2() == 3);
    CHECK(c.coeff(1, 1) == -1);
    CHECK(c.coeff(0, 2) == 0);
    CHECK_THROWS(c.coeff(3, 0));
}

TEST_CASE("bivariate exp and log")
{
    // exp(z1 + z2) = sum z1^n z2^m / (n! m!)
    BiSeries x = BiSeries::monomial(1, 0, 1, 4, 4) + BiSeries::monomial(0, 1, 1, 4, 4);
    BiSeries e = exp(x);
    CHECK(e.coeff(2, 3) == Rational(1, 12));
    CHECK(e.coeff(4, 0) == Rational(1, 24));
    BiSeries l = log(BiSeries::constant(1, 4, 4) - BiSeries::monomial(1, 0, 1, 4, 4));
    CHECK(l.coeff(3, 0) == Rational(-1, 3));
    CHECK_THROWS(log(BiSeries::constant(2, 3, 3)));
    CHECK_THROWS(inv(BiSeries::monomial(1, 0, 1, 3, 3)));
}

TEST_CASE("substitution and monomial division")
{
    // (1 + z1)(z1 -> z1 + z1 z2)
    BiSeries f = BiSeries::constant(1, 3, 3) + BiSeries::monomial(1, 0, 1, 3, 3);
    BiSeries i1 = BiSeries::monomial(1, 0, 1, 3, 3) + BiSeries::monomial(1, 1, 1, 3, 3);
    BiSeries i2 = BiSeries::monomial(0, 1, 1, 3, 3);
    BiSeries g = substitute(f, i1, i2);
    CHECK(g.coeff(1, 1) == 1);
    CHECK(g.coeff(1, 0) == 1);
    CHECK_THROWS(substitute(f, BiSeries::constant(1, 3, 3) + i1, i2));
    BiSeries d = divide_monomial(i1, 1, 0);
    CHECK(d.coeff(0, 0) == 1);
    CHECK(d.coeff(0, 1) == 1);
    CHECK(d.order1() == 2);
    CHECK_THROWS(divide_monomial(f, 1, 0));
}

TEST_CASE("lift and restriction")
{
    QSeries f = q_of({1, 2, 3, 4});
    BiSeries g = lift(f, 1, 1, 3);
    CHECK(g.coeff(2, 2) == 3);
    CHECK(g.coeff(2, 1) == 0);
    CHECK(restrict_z2_zero(lift(f, 1, 0, 3)).coeffs() == f.coeffs());
}

TEST_CASE("first mismatch reports the lexicographically first monomial")
{
    BiSeries a(2, 2), b(2, 2);
    a.set(1, 2, 5);
    b.set(2, 0, 1);
    auto m = first_mismatch(a, b);
    REQUIRE(m);
    CHECK(m->monomial == Exponent{1, 2});
    CHECK(m->lhs == 5);
    CHECK(equal_to_order(a, b, 0, 1));
}

TEST_CASE("polynomials and rational functions")
{
    BiPolynomial z1 = BiPolynomial::z1(), z2 = BiPolynomial::z2();
    BiPolynomial p = (BiPolynomial(1) - Rational(27) * z1) * (BiPolynomial(1) + z2);
    CHECK(to_string(p) == "1 + z2 - 27*z1 - 27*z1*z2");
    CHECK(theta(p, 1) == Rational(-27) * z1 - Rational(27) * z1 * z2);
    CHECK(divide_exact(p, BiPolynomial(1) + z2) == BiPolynomial(1) - Rational(27) * z1);
    CHECK_FALSE(divide_exact(p, BiPolynomial(1) + z1));

    auto f = BiRationalFunction::ratio(BiPolynomial(1), BiPolynomial(1) - z1);
    BiSeries s = f.to_series(5);
    CHECK(s.coeff(5, 0) == 1);
    CHECK(s.coeff(0, 1) == 0);
    CHECK(rf_equal(f * (BiPolynomial(1) - z1), BiRationalFunction(1)));
    // theta1 1/(1-z1) = z1/(1-z1)^2
    CHECK(rf_equal(theta(f, 1), BiRationalFunction(z1) * f * f));
}

TEST_CASE("log-series theta rule")
{
    BiSeries one = BiSeries::constant(1, 3, 3);
    BiSeries zero(3, 3);
    LogSeries x(zero, one, zero);
    LogSeries t = theta(x, 1);
    CHECK(t.c0.coeff(0, 0) == 1);
    CHECK(t.c1.is_zero());
    CHECK(theta(x, 2).c0.is_zero());
}
