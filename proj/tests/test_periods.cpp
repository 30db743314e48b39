#include <doctest.h>

#include "k3gm/model.hpp"
#include "k3gm/periods.hpp"

using namespace k3gm;

TEST_CASE("model constants")
{
    struct Row {
        Model m;
        int d, N, r, dN, CHH, CHL;
        Rational mu, nu;
    };
    for (const Row &row : {Row{Model::E6, 6, 3, 3, 27, 6, 3, 3, 3}, Row{Model::E7, 8, 2, 4, 64, 4, 2, 4, 4},
                           Row{Model::E8, 12, 1, 6, 432, 2, 1, 12, 6}}) {
        ModelParams p = model_params(row.m);
        CAPTURE(p.name);
        CHECK(p.d == row.d);
        CHECK(p.N == row.N);
        CHECK(p.r == row.r);
        CHECK(p.d_N == row.dN);
        CHECK(p.C_HH == row.CHH);
        CHECK(p.C_HL == row.CHL);
        CHECK(p.mu == row.mu);
        CHECK(p.nu == row.nu);
        CHECK(p.mu * p.nu * p.nu == p.d_N);
    }
    CHECK(parse_model("e7") == Model::E7);
    CHECK(parse_model("E8") == Model::E8);
    CHECK_THROWS(parse_model("e9"));
}

TEST_CASE("holomorphic period oracles")
{
    BiSeries e6 = holomorphic_period(model_params(Model::E6), 3);
    CHECK(e6.coeff(0, 0) == 1);
    CHECK(e6.coeff(1, 0) == 6);
    CHECK(e6.coeff(2, 0) == 90);
    CHECK(e6.coeff(2, 1) == 180);
    CHECK(e6.coeff(3, 0) == 1680);
    CHECK(e6.coeff(3, 1) == 10080);
    CHECK(e6.coeff(1, 1) == 0);
    CHECK(e6.coeff(0, 1) == 0);
    CHECK(holomorphic_period(model_params(Model::E7), 1).coeff(1, 0) == 12);
    CHECK(holomorphic_period(model_params(Model::E8), 1).coeff(1, 0) == 60);
}

TEST_CASE("logarithmic period oracles")
{
    PeriodSystem e6 = frobenius_log_periods(model_params(Model::E6), 3);
    CHECK(e6.Shat1.coeff(0, 0) == 0);
    CHECK(e6.Shat1.coeff(1, 0) == 15);
    CHECK(e6.Shat1.coeff(0, 1) == -1);
    CHECK(e6.Shat2.coeff(0, 1) == 2);
    CHECK(e6.Shat2.coeff(1, 0) == 12);
    CHECK_THROWS(frobenius_log_periods(model_params(Model::E6), 1));
}

TEST_CASE("discriminant at z2 = 0 is a square")
{
    for (Model m : all_models()) {
        ModelParams p = model_params(m);
        CAPTURE(p.name);
        BiPolynomial line = BiPolynomial(1) - Rational(p.d_N) * BiPolynomial::z1();
        CHECK(at_z2_zero(p.disc()) == line * line);
        CHECK(at_z2_zero(p.delta1()) == line);
    }
}

TEST_CASE("Picard-Fuchs suite passes at K = 10")
{
    for (Model m : all_models()) {
        ModelParams p = model_params(m);
        CAPTURE(p.name);
        VerificationReport r = verify_picard_fuchs(p, frobenius_log_periods(p, 10));
        CHECK(r.passed());
        CHECK(r.checks.size() >= 6);
    }
}

TEST_CASE("the operators detect a perturbed period")
{
    ModelParams p = model_params(Model::E7);
    PeriodSystem ps = frobenius_log_periods(p, 4);
    ps.X0.add_to(2, 1, 1);
    VerificationReport r = verify_picard_fuchs(p, ps);
    CHECK_FALSE(r.passed());
    for (const auto &c : r.checks) {
        if (c.status == Status::Fail) {
            CHECK(c.first_discrepancy.has_value());
        }
    }
}
