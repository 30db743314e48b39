#include "k3gm/connection.hpp"

#include <stdexcept>

namespace k3gm {

namespace {

using Vec4 = std::array<RF, 4>;

std::string entry_name(const std::string &mat, int i, int j)
{
    return mat + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

Vec4 unit(int k)
{
    Vec4 v{RF(0), RF(0), RF(0), RF(0)};
    v[k] = RF(1);
    return v;
}

Vec4 operator+(Vec4 a, const Vec4 &b)
{
    for (int k = 0; k < 4; ++k) {
        a[k] += b[k];
    }
    return a;
}

Vec4 operator-(Vec4 a, const Vec4 &b)
{
    for (int k = 0; k < 4; ++k) {
        a[k] -= b[k];
    }
    return a;
}

Vec4 operator*(const RF &f, Vec4 a)
{
    for (auto &x : a) {
        x *= f;
    }
    return a;
}

Vec4 theta(const Vec4 &v, int var)
{
    Vec4 r;
    for (int k = 0; k < 4; ++k) {
        r[k] = theta(v[k], var);
    }
    return r;
}

// theta_i applied to sum_k v_k e_k, where theta_i e_k is given by rows of the connection
Vec4 act(const Vec4 &v, const std::array<Vec4, 4> &rows, int var)
{
    Vec4 r = theta(v, var);
    for (int k = 0; k < 4; ++k) {
        if (!v[k].is_zero()) {
            r = r + v[k] * rows[k];
        }
    }
    return r;
}

RFMatrix from_rows(const std::array<Vec4, 4> &rows)
{
    RFMatrix m;
    for (int i = 0; i < 4; ++i) {
        m[i] = rows[i];
    }
    return m;
}

RF coefficient(const ThetaOperator &op, int i, int j)
{
    auto it = op.terms.find({i, j});
    return it == op.terms.end() ? RF(0) : RF(it->second);
}

void require_support(const ThetaOperator &op, int max_total)
{
    for (const auto &[e, c] : op.terms) {
        if (e.first + e.second > max_total) {
            throw std::logic_error("derived_connection: operator order exceeds two");
        }
    }
}

} // namespace

std::string to_string(ConnectionSource s)
{
    return s == ConnectionSource::Printed ? "printed" : "picard-fuchs";
}

RFMatrix theta(const RFMatrix &m, int var)
{
    return map_entries(m, [var](const RF &x) { return theta(x, var); });
}

RFMatrix rf_matrix(const Mat4<Rational> &m)
{
    return map_entries(m, [](const Rational &x) { return RF(x); });
}

ConnectionPair gm_matrices(const ModelParams &p)
{
    ConnectionPair c;
    c.source = ConnectionSource::Printed;
    c.Delta1 = p.delta1();
    c.Delta2 = p.delta2();
    c.Disc = p.disc();
    const RF mu = p.mu;
    const RF nu = p.nu;
    const RF z1 = BiPolynomial::z1();
    const RF z2 = BiPolynomial::z2();
    const RF D1 = c.Delta1;
    const RF D2 = c.Delta2;
    const RF Disc = c.Disc;
    const RF one = 1;
    const RF two = 2;
    const RF half = Rational(1, 2);

    Vec4 row3{half * mu * (one - nu) * z1, half * (D1 - one), RF(0), half * D1};
    Vec4 g1r4{
        mu * (one - nu) * z1 * (two * (one - D1) - one) / Disc,
        mu * z1 * ((one - nu) * ((two - D1) * D2 - two) + nu * nu * (two * D1 * D2 - one)) / Disc,
        two * mu * (one - nu) * z1 * D2 / Disc,
        Rational(3) * mu * nu * nu * z1 * (one - (one - D1) * D2) / Disc,
    };
    Vec4 g2r3{
        two * nu * (one - nu) * z1 * z2 / D2,
        (one - two * D1) * z2 / D2,
        two * z2 / D2,
        (one - two * D1) * z2 / D2,
    };
    Vec4 g2r4{
        mu * (one - nu) * (one - D1) * z1 * (one - (one + D1) * D2) / (two * Disc),
        mu * z1 * ((one - nu) * (one - D2) - nu * nu * (one - D1) * (one - (one + D1) * D2)) / (two * Disc),
        -(mu * (one - nu) * z1 * D1 * D2 / Disc),
        (one - D1) * (-one + (one - D1) * (Rational(3) * D2 - one) - (one - D1 * D1) * D2) / (two * Disc),
    };
    c.G1 = from_rows({unit(1), unit(3), row3, g1r4});
    c.G2 = from_rows({unit(2), row3, g2r3, g2r4});
    return c;
}

ConnectionPair derived_connection(const ModelParams &p)
{
    ConnectionPair c;
    c.source = ConnectionSource::PicardFuchs;
    c.Delta1 = p.delta1();
    c.Delta2 = p.delta2();
    c.Disc = p.disc();

    PicardFuchsSystem pf = picard_fuchs(p);
    require_support(pf.L1, 2);
    require_support(pf.L2, 2);
    const Vec4 e0 = unit(0), e1 = unit(1), e2 = unit(2), e3 = unit(3);

    // theta1 theta2 X from L1, which contains no theta2^2 term
    if (!coefficient(pf.L1, 0, 2).is_zero()) {
        throw std::logic_error("derived_connection: L1 has a theta2^2 term");
    }
    RF c11 = coefficient(pf.L1, 1, 1);
    if (c11.is_zero()) {
        throw std::logic_error("derived_connection: L1 has no theta1 theta2 term");
    }
    Vec4 R = (RF(-1) / c11) * (coefficient(pf.L1, 2, 0) * e3 + coefficient(pf.L1, 1, 0) * e1 +
                               coefficient(pf.L1, 0, 1) * e2 + coefficient(pf.L1, 0, 0) * e0);

    // theta2^2 X from L2
    RF d02 = coefficient(pf.L2, 0, 2);
    Vec4 T = (RF(-1) / d02) * (coefficient(pf.L2, 1, 1) * R + coefficient(pf.L2, 2, 0) * e3 +
                               coefficient(pf.L2, 1, 0) * e1 + coefficient(pf.L2, 0, 1) * e2 +
                               coefficient(pf.L2, 0, 0) * e0);

    // U = theta1^3 X is fixed by theta2 theta1 (theta1 X) = theta1 theta2 (theta1 X), evaluated on theta2 X
    const Vec4 zero{RF(0), RF(0), RF(0), RF(0)};
    std::array<Vec4, 4> rows1{e1, e3, R, zero};
    Vec4 V0 = act(R, rows1, 1); // theta1 R without its U part
    std::array<Vec4, 4> rows2{e2, R, T, V0};
    Vec4 lhs = act(R, rows2, 2);
    Vec4 rhs = act(T, rows1, 1);
    RF pivot = T[3] - R[3] * R[3];
    if (pivot.is_zero()) {
        throw std::runtime_error("derived_connection: singular pivot");
    }
    Vec4 U = (RF(1) / pivot) * (lhs - rhs);
    Vec4 V = V0 + R[3] * U;

    c.G1 = from_rows({e1, e3, R, U});
    c.G2 = from_rows({e2, R, T, V});
    return c;
}

RFMatrix curvature(const ConnectionPair &c)
{
    return theta(c.G2, 1) - theta(c.G1, 2) + c.G2 * c.G1 - c.G1 * c.G2;
}

VerificationReport verify_flatness(const ModelParams &p, const ConnectionPair &c)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "flatness";
    const std::string tag = " (" + to_string(c.source) + ")";

    auto first_nonzero = [](const RFMatrix &m) -> std::optional<Discrepancy> {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (!m[i][j].is_zero()) {
                    return discrepancy("entry " + std::to_string(i + 1) + "," + std::to_string(j + 1),
                                       to_string(m[i][j]), "0");
                }
            }
        }
        return std::nullopt;
    };

    RFMatrix base = theta(c.G2, 1) - theta(c.G1, 2);
    RFMatrix f1 = base + c.G2 * c.G1 - c.G1 * c.G2;
    auto d1 = first_nonzero(f1);
    Check main = exact_check("theta1 G2 - theta2 G1 + G2 G1 - G1 G2 = 0" + tag, !d1, d1);
    if (d1) {
        RFMatrix f2 = base + c.G1 * c.G2 - c.G2 * c.G1;
        auto d2 = first_nonzero(f2);
        main.note = d2 ? "fails under both commutator orders"
                       : "holds under the opposite order theta1 G2 - theta2 G1 + G1 G2 - G2 G1 = 0";
    }
    rep.add(main);

    bool rows_ok = true;
    const std::array<std::array<int, 4>, 3> shape{{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    for (int k = 0; k < 4; ++k) {
        rows_ok = rows_ok && rf_equal(c.G1[0][k], RF(shape[0][k])) && rf_equal(c.G2[0][k], RF(shape[1][k])) &&
                  rf_equal(c.G1[1][k], RF(shape[2][k])) && rf_equal(c.G1[2][k], c.G2[1][k]);
    }
    rep.add(exact_check("definitional rows of G1, G2" + tag, rows_ok));
    return rep;
}

std::vector<Check> compare_connections(const ConnectionPair &a, const ConnectionPair &b)
{
    std::vector<Check> out;
    for (int m = 1; m <= 2; ++m) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const RF &x = a.G(m)[i][j];
                const RF &y = b.G(m)[i][j];
                bool ok = rf_equal(x, y);
                std::string name = entry_name("G" + std::to_string(m), i, j) + " " + to_string(a.source) +
                                   " = " + to_string(b.source);
                out.push_back(exact_check(name, ok,
                                          ok ? std::nullopt
                                             : std::optional(discrepancy("exact", to_string(x), to_string(y)))));
            }
        }
    }
    return out;
}

Mat4<BiSeries> to_series(const RFMatrix &m, int K)
{
    return map_entries(m, [K](const RF &x) { return x.to_series(K); });
}

VerificationReport verify_period_system(const ModelParams &p, const ConnectionPair &c, const PeriodSystem &ps)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "period-connection";
    const int K = ps.K;
    const Mat4<BiSeries> G[2] = {to_series(c.G1, K), to_series(c.G2, K)};
    const std::pair<std::string, LogSeries> sols[3] = {
        {"X0", ps.holomorphic()}, {"X1", ps.log_period(1)}, {"X2", ps.log_period(2)}};
    for (const auto &[label, x] : sols) {
        LogSeries t1 = theta(x, 1);
        std::array<LogSeries, 4> pi{x, t1, theta(x, 2), theta(t1, 1)};
        for (int i = 1; i <= 2; ++i) {
            Check chk;
            chk.name = "theta" + std::to_string(i) + " Pi = G" + std::to_string(i) + " Pi for " + label + " (" +
                       to_string(c.source) + ")";
            chk.status = Status::Pass;
            chk.max_order_checked = K;
            for (int row = 0; row < 4 && chk.status == Status::Pass; ++row) {
                LogSeries lhs = theta(pi[row], i);
                LogSeries rhs = G[i - 1][row][0] * pi[0];
                for (int k = 1; k < 4; ++k) {
                    rhs += G[i - 1][row][k] * pi[k];
                }
                for (int comp = 0; comp < 3; ++comp) {
                    auto mm = first_mismatch(lhs.component(comp), rhs.component(comp), K, K);
                    if (mm) {
                        chk.status = Status::Fail;
                        Discrepancy d = discrepancy(*mm);
                        d.monomial = "row " + std::to_string(row + 1) + (comp ? " log z" + std::to_string(comp) : "") +
                                     " z^(" + d.monomial + ")";
                        chk.first_discrepancy = d;
                        break;
                    }
                }
            }
            rep.add(chk);
        }
    }
    return rep;
}

} // namespace k3gm
