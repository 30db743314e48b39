#include "k3gm/pairing.hpp"

namespace k3gm {

namespace {

RF rf(const BiPolynomial &p)
{
    return RF(p);
}

std::optional<Discrepancy> rf_mismatch(const RF &lhs, const RF &rhs)
{
    if (rf_equal(lhs, rhs)) {
        return std::nullopt;
    }
    return discrepancy("exact", to_string(lhs), to_string(rhs));
}

std::string entry(int i, int j)
{
    return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

} // namespace

std::string to_string(PairingSource s)
{
    return s == PairingSource::Printed ? "printed" : "derived";
}

PairingData yukawa(const ModelParams &p)
{
    const RF D1 = rf(p.delta1());
    const RF D2 = rf(p.delta2());
    const RF Disc = rf(p.disc());
    const RF z1 = BiPolynomial::z1();
    const RF z2 = BiPolynomial::z2();
    const RF c = p.c;
    const RF one = 1;
    const RF half = Rational(1, 2);

    PairingData pd;
    pd.source = PairingSource::Printed;
    pd.Y11 = RF(2) * c / Disc;
    pd.Y12 = c * D1 / Disc;
    pd.Y22 = RF(2) * c * (RF(2) * D1 - one) * z2 / Disc;

    RF t1 = theta(pd.Y11, 1);
    RF t2 = theta(pd.Y11, 2);
    RF inner = RF(-4) * theta(t1, 1) + half * (D1 - one) * (one + D2 * (one + D1)) * t1 +
               half * ((D1 - one) * (RF(2) * D2 * (one - D1) - one) +
                       RF(4) * RF(p.mu) * (RF(p.nu) - one) * z1 * (RF(4) * (one - D2) + RF(3) * D2)) *
                   pd.Y11;
    pd.Y44 = -(inner / Disc);

    RF q24 = half * t1;
    RF q34 = -(half * t2) + theta(pd.Y12, 1);
    RF zero = 0;
    pd.Q = {{{zero, zero, zero, -pd.Y11},
             {zero, pd.Y11, pd.Y12, q24},
             {zero, pd.Y12, pd.Y22, q34},
             {-pd.Y11, q24, q34, pd.Y44}}};
    return pd;
}

PairingData derived_pairing(const ModelParams &p, const ConnectionPair &c)
{
    PairingData pd;
    pd.source = PairingSource::Derived;
    RFMatrix &Q = pd.Q;
    for (auto &row : Q) {
        row.fill(RF(0));
    }
    RF y11 = RF(2) * RF(p.c) / RF(c.Disc);
    Q[0][3] = -y11;
    for (int j = 0; j < 4; ++j) {
        Q[1][j] = theta(Q[0][j], 1) - Q[0][3] * c.G1[j][3];
        Q[2][j] = theta(Q[0][j], 2) - Q[0][3] * c.G2[j][3];
    }
    for (int j = 0; j < 4; ++j) {
        RF s = theta(Q[1][j], 1);
        for (int l = 0; l < 4; ++l) {
            s -= Q[1][l] * c.G1[j][l];
        }
        Q[3][j] = s;
    }
    pd.Y11 = Q[1][1];
    pd.Y12 = Q[1][2];
    pd.Y22 = Q[2][2];
    pd.Y44 = Q[3][3];
    return pd;
}

VerificationReport verify_yukawa(const ModelParams &p, const PairingData &pd)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "yukawa";
    const std::string tag = " (" + to_string(pd.source) + ")";
    const RF D1 = rf(p.delta1());
    const RF D2 = rf(p.delta2());
    const RF Disc = rf(p.disc());
    const RF z2 = BiPolynomial::z2();
    const RF one = 1;

    rep.add(exact_check("Delta1 Y11 - 2 Y12 = 0" + tag, rf_equal(D1 * pd.Y11, RF(2) * pd.Y12),
                        rf_mismatch(D1 * pd.Y11 - RF(2) * pd.Y12, RF(0))));
    RF rel2 = D2 * pd.Y22 + RF(4) * z2 * pd.Y12 - z2 * pd.Y11;
    rep.add(exact_check("Delta2 Y22 + 4 z2 Y12 - z2 Y11 = 0" + tag, rel2.is_zero(), rf_mismatch(rel2, RF(0))));

    RF m1 = (one - D1) * (one + (D1 - one) * D2) / Disc;
    RF m2 = (one - D1) * (one - D1) * (D2 - one) / Disc;
    RF t1 = theta(pd.Y11, 1);
    RF t2 = theta(pd.Y11, 2);
    rep.add(exact_check("theta1 Y11 = (1-Delta1)(1+(Delta1-1)Delta2)/Disc Y11" + tag, rf_equal(t1, m1 * pd.Y11),
                        rf_mismatch(t1, m1 * pd.Y11)));
    rep.add(exact_check("theta2 Y11 = (1-Delta1)^2(Delta2-1)/Disc Y11" + tag, rf_equal(t2, m2 * pd.Y11),
                        rf_mismatch(t2, m2 * pd.Y11)));

    // Localization: multiplier factors the displays are off by.
    Check c1 = exact_check("theta1 Y11 = 2 (1-Delta1)(1+(Delta1-1)Delta2)/Disc Y11" + tag,
                           rf_equal(t1, RF(2) * m1 * pd.Y11), rf_mismatch(t1, RF(2) * m1 * pd.Y11));
    Check c2 = exact_check("theta2 Y11 = -(1-Delta1)^2(Delta2-1)/Disc Y11" + tag, rf_equal(t2, -(m2 * pd.Y11)),
                           rf_mismatch(t2, -(m2 * pd.Y11)));
    c1.note = "diagnostic variant of the displayed multiplier";
    c2.note = "diagnostic variant of the displayed multiplier";
    rep.add(c1);
    rep.add(c2);
    rep.add(exact_check("Y11(0) = 2 c" + tag, pd.Y11.to_series(0).at(0, 0) == 2 * p.c));
    return rep;
}

VerificationReport verify_pairing(const ModelParams &p, const ConnectionPair &c, const PairingData &pd)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "pairing";
    const std::string tag = " (" + to_string(pd.source) + " Q, " + to_string(c.source) + " connection)";

    std::optional<Discrepancy> asym;
    for (int i = 0; i < 4 && !asym; ++i) {
        for (int j = i + 1; j < 4 && !asym; ++j) {
            if (!rf_equal(pd.Q[i][j], pd.Q[j][i])) {
                asym = discrepancy("entry " + entry(i, j), to_string(pd.Q[i][j]), to_string(pd.Q[j][i]));
            }
        }
    }
    rep.add(exact_check("Q symmetric" + tag, !asym, asym));

    for (int k = 1; k <= 2; ++k) {
        RFMatrix lhs = theta(pd.Q, k);
        RFMatrix rhs = c.G(k) * pd.Q + pd.Q * transpose(c.G(k));
        std::optional<Discrepancy> first;
        std::optional<Discrepancy> first_without_44;
        std::string failing;
        for (int i = 0; i < 4; ++i) {
            for (int j = i; j < 4; ++j) {
                if (rf_equal(lhs[i][j], rhs[i][j])) {
                    continue;
                }
                auto d = discrepancy("entry " + entry(i, j), to_string(lhs[i][j]), to_string(rhs[i][j]));
                failing += (failing.empty() ? "" : " ") + entry(i, j);
                if (!first) {
                    first = d;
                }
                const RFMatrix &G = c.G(k);
                bool touches44 = (i == 3 && j == 3) || (j == 3 && !G[i][3].is_zero()) ||
                                 (i == 3 && !G[j][3].is_zero());
                if (!touches44 && !first_without_44) {
                    first_without_44 = d;
                }
            }
        }
        std::string ks = std::to_string(k);
        Check all = exact_check("theta" + ks + " Q = G" + ks + " Q + Q G" + ks + "^T" + tag, !first, first);
        if (first) {
            all.note = "failing entries: " + failing;
        }
        rep.add(all);
        rep.add(exact_check("theta" + ks + " Q = G" + ks + " Q + Q G" + ks + "^T away from Q44" + tag,
                            !first_without_44, first_without_44));
    }
    return rep;
}

} // namespace k3gm
