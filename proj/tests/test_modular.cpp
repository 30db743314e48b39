#include <doctest.h>

#include "k3gm/modular.hpp"

using namespace k3gm;

namespace {

std::vector<Rational> head(const QSeries &s, int n)
{
    std::vector<Rational> v;
    for (int e = 0; e < n; ++e) {
        v.push_back(s.coeff(e));
    }
    return v;
}

// (N E2(q^N) - E2(q)) / (N - 1)
QSeries weight_two(int N, int qmax)
{
    QSeries e2 = eisenstein(2, qmax);
    return (Rational(N) * dilate(e2, N) - e2) * Rational(1, N - 1);
}

} // namespace

TEST_CASE("Eisenstein series oracles")
{
    CHECK(head(eisenstein(2, 5), 4) == std::vector<Rational>{1, -24, -72, -96});
    CHECK(head(eisenstein(4, 5), 4) == std::vector<Rational>{1, 240, 2160, 6720});
    CHECK(head(eisenstein(6, 5), 3) == std::vector<Rational>{1, -504, -16632});
}

TEST_CASE("eta product oracle")
{
    // prod (1 - q^n) = 1 - q - q^2 + q^5 + q^7 - ...
    EtaQuotient eta = eta_expansion(1, 8);
    CHECK(eta.offset == Rational(1, 24));
    CHECK(head(eta.unit, 9) == std::vector<Rational>{1, -1, -1, 0, 0, 1, 0, 1, 0});
}

TEST_CASE("Klein j oracle")
{
    QSeries j = klein_j(3);
    CHECK(j.pole_order() == 1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
}

TEST_CASE("level 3 A is the cubic theta series")
{
    FormSet f = build_forms(3, 5);
    CHECK(head(f.A, 6) == std::vector<Rational>{1, 6, 0, 6, 6, 0});
}

TEST_CASE("A^2 is the weight two Eisenstein series of the level")
{
    for (int N : {2, 3}) {
        CAPTURE(N);
        FormSet f = build_forms(N, 20);
        CHECK_FALSE(first_mismatch(f.A * f.A, weight_two(N, 20), 20));
    }
    FormSet f1 = build_forms(1, 20);
    CHECK_FALSE(first_mismatch(pow(f1.A, 4), eisenstein(4, 20), 20));
    CHECK_FALSE(first_mismatch(f1.E, eisenstein(2, 20), 20));
}

TEST_CASE("level constants")
{
    CHECK(level_constant(1) == 432);
    CHECK(level_constant(2) == 64);
    CHECK(level_constant(3) == 27);
    CHECK(level_root_exponent(1) == 6);
    CHECK(level_root_exponent(2) == 4);
    CHECK(level_root_exponent(3) == 3);
}

TEST_CASE("ring relations and hauptmodul for every level")
{
    for (int N = 1; N <= 3; ++N) {
        CAPTURE(N);
        FormSet f = build_forms(N, 30);
        CHECK(verify_ramanujan_ring(f).passed());
        CHECK(verify_jfunction(f).passed());
        QSeries a = alpha_series(f);
        CHECK(a.coeff(0) == 0);
    }
}

TEST_CASE("invalid level is rejected")
{
    CHECK_THROWS(build_forms(4, 10));
    CHECK_THROWS(build_forms(0, 10));
}
