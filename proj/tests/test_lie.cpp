#include <doctest.h>

#include "k3gm/lie.hpp"

using namespace k3gm;

namespace {

ConstMatrix bracket(const ConstMatrix &a, const ConstMatrix &b)
{
    return a * b - b * a;
}

ConstMatrix scaled(const ConstMatrix &a, const Rational &s)
{
    ConstMatrix r = a;
    for (auto &row : r) {
        for (auto &e : row) {
            e *= s;
        }
    }
    return r;
}

} // namespace

TEST_CASE("unit matrices are 1-based")
{
    ConstMatrix e = unit_matrix(1, 4);
    CHECK(e[0][3] == 1);
    CHECK(identity_matrix()[2][2] == 1);
}

TEST_CASE("constructed generators match the displayed targets for every model")
{
    LieBasis t = printed_targets();
    for (Model m : all_models()) {
        ModelParams p = model_params(m);
        CAPTURE(p.name);
        LieBasis b = build_sl2sl2(p);
        CHECK(b.all() == t.all());
    }
}

TEST_CASE("sl2 + sl2 relations with J0 = J/2")
{
    LieBasis b = printed_targets();
    const ConstMatrix Js[2] = {b.J1, b.J2};
    const ConstMatrix Jm[2] = {b.J1m, b.J2m};
    const ConstMatrix Jp[2] = {b.J1p, b.J2p};
    for (int a = 0; a < 2; ++a) {
        CHECK(bracket(Jp[a], Jm[a]) == Js[a]);
        CHECK(bracket(scaled(Js[a], Rational(1, 2)), Jp[a]) == Jp[a]);
        CHECK(bracket(scaled(Js[a], Rational(1, 2)), Jm[a]) == scaled(Jm[a], -1));
        CHECK(bracket(Js[a], Jp[a]) == scaled(Jp[a], 2));
        const int o = 1 - a;
        for (const ConstMatrix &x : {Js[o], Jm[o], Jp[o]}) {
            CHECK(bracket(Js[a], x) == ConstMatrix{});
            CHECK(bracket(Jp[a], x) == ConstMatrix{});
            CHECK(bracket(Jm[a], x) == ConstMatrix{});
        }
    }
    const auto six = b.all();
    std::vector<ConstMatrix> all(six.begin(), six.end());
    CHECK(rank(all) == 6);
}

TEST_CASE("group elements preserve Phi, the printed g3 display does not")
{
    for (Model m : all_models()) {
        ModelParams p = model_params(m);
        CAPTURE(p.name);
        ConstMatrix phi = phi_const(p);
        auto gs = group_generators(p, GroupParams{Rational(2), Rational(3, 5), Rational(-1), Rational(1, 3)});
        for (const auto &g : gs) {
            CHECK(g * phi * transpose(g) == phi);
        }
        ConstMatrix g3 = printed_g3(p, Rational(1));
        CHECK_FALSE(g3 * phi * transpose(g3) == phi);
        CHECK_THROWS(group_generators(p, GroupParams{Rational(0), Rational(1), Rational(1), Rational(1)}));
    }
}

TEST_CASE("tangents satisfy the transposed infinitesimal relation")
{
    for (Model m : all_models()) {
        ModelParams p = model_params(m);
        CAPTURE(p.name);
        ConstMatrix phi = phi_const(p);
        auto ts = group_tangents(p);
        for (int k = 0; k < 4; ++k) {
            CAPTURE(k);
            CHECK(ts[k] * phi + phi * transpose(ts[k]) == ConstMatrix{});
            bool untransposed = ts[k] * phi + phi * ts[k] == ConstMatrix{};
            CHECK(untransposed == (k == 0));
        }
    }
}

TEST_CASE("lie and group suites")
{
    for (Model m : all_models()) {
        ModelParams p = model_params(m);
        CAPTURE(p.name);
        CHECK(verify_lie(p).passed());
        CHECK_FALSE(verify_group_displays(p).passed());
    }
}
