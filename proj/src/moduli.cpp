#include "k3gm/moduli.hpp"

#include <stdexcept>

namespace k3gm {

namespace {

SeriesMatrix scale(const BiSeries &f, const SeriesMatrix &m)
{
    return map_entries(m, [&f](const BiSeries &x) { return f * x; });
}

SeriesMatrix theta(const SeriesMatrix &m, int var)
{
    return map_entries(m, [var](const BiSeries &x) { return theta(x, var); });
}

Series2 inverse2(const Series2 &m)
{
    BiSeries idet = inv(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    return {{{m[1][1] * idet, -(m[0][1] * idet)}, {-(m[1][0] * idet), m[0][0] * idet}}};
}

std::string cell(int i, int j)
{
    return "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

Check matrix_check(const std::string &name, const SeriesMatrix &lhs, const SeriesMatrix &rhs, int K)
{
    Check c;
    c.name = name;
    c.status = Status::Pass;
    c.max_order_checked = K;
    for (int i = 0; i < 4 && c.status == Status::Pass; ++i) {
        for (int j = 0; j < 4 && c.status == Status::Pass; ++j) {
            if (auto mm = first_mismatch(lhs[i][j], rhs[i][j], K, K)) {
                c.status = Status::Fail;
                Discrepancy d = discrepancy(*mm);
                d.monomial = "entry " + cell(i, j) + " q^(" + d.monomial + ")";
                c.first_discrepancy = d;
            }
        }
    }
    return c;
}

// effective comparison order, never beyond what the operands know
int reach(int K, const BiSeries &a, const BiSeries &b)
{
    return std::min({K, a.order1(), a.order2(), b.order1(), b.order2()});
}

Check series_check(const std::string &name, const BiSeries &lhs, const BiSeries &rhs, int K)
{
    int k = reach(K, lhs, rhs);
    Check c = compare_series(name, lhs, rhs, k, k);
    c.max_order_checked = k;
    return c;
}

// Derivative along the flat direction a in q-coordinates under a convention.
// "t": d/dt_a = q_a d/dq_a.  "tau": tau1 = t1, tau2 = t1 + t2.
BiSeries flat_derivative(const BiSeries &f, int a, const std::string &conv)
{
    if (conv == "t" || a == 2) {
        return theta(f, a);
    }
    return theta(f, 1) - theta(f, 2);
}

const char *const kConventions[2] = {"t", "tau"};

// Combines per-convention results: pass if any convention passes, recording which.
Check by_convention(const std::string &name, const std::array<Check, 2> &per)
{
    Check c;
    c.name = name;
    c.status = Status::Fail;
    c.max_order_checked = per[0].max_order_checked;
    std::string passing;
    std::string failing;
    for (int k = 0; k < 2; ++k) {
        std::string &bucket = per[k].status == Status::Pass ? passing : failing;
        bucket += (bucket.empty() ? "" : ",") + std::string(kConventions[k]);
    }
    if (!passing.empty()) {
        c.status = Status::Pass;
        c.convention = passing;
        c.max_order_checked = per[per[0].status == Status::Pass ? 0 : 1].max_order_checked;
    } else {
        c.first_discrepancy = per[0].first_discrepancy;
    }
    c.note = "passes under: " + (passing.empty() ? std::string("none") : passing) +
             "; fails under: " + (failing.empty() ? std::string("none") : failing);
    if (!failing.empty() && !passing.empty()) {
        for (int k = 0; k < 2; ++k) {
            if (per[k].status == Status::Fail && per[k].first_discrepancy) {
                *c.note += " (first discrepancy under " + std::string(kConventions[k]) + " at " +
                           per[k].first_discrepancy->monomial + ")";
            }
        }
    }
    return c;
}

} // namespace

BiSeries MirrorMap::D(const BiSeries &f, int a) const
{
    return J[a - 1][0] * theta(f, 1) + J[a - 1][1] * theta(f, 2);
}

BiSeries MirrorMap::to_q(const BiSeries &f) const
{
    return substitute(f, z_of_q[0], z_of_q[1]);
}

MirrorMap mirror_map(const PeriodSystem &ps)
{
    MirrorMap mm;
    const int K = ps.K;
    mm.K = K;
    BiSeries iX0 = inv(ps.X0);
    std::array<BiSeries, 2> f{ps.Shat1 * iX0, ps.Shat2 * iX0};
    std::array<BiSeries, 2> mono{BiSeries::monomial(1, 0, 1, K, K), BiSeries::monomial(0, 1, 1, K, K)};
    for (int a = 0; a < 2; ++a) {
        mm.q_of_z[a] = mono[a] * exp(f[a]);
    }

    // z_a = q_a exp(-f_a(z)); every pass fixes at least one more total degree
    std::array<BiSeries, 2> z = mono;
    bool stable = false;
    for (int it = 0; it <= 2 * K + 2 && !stable; ++it) {
        std::array<BiSeries, 2> next;
        for (int a = 0; a < 2; ++a) {
            next[a] = mono[a] * exp(-substitute(f[a], z[0], z[1]));
        }
        stable = equal_to_order(next[0], z[0]) && equal_to_order(next[1], z[1]);
        z = next;
    }
    if (!stable) {
        throw std::runtime_error("mirror_map: fixed-point iteration did not stabilize");
    }
    mm.z_of_q = z;

    Series2 M;
    for (int i = 0; i < 2; ++i) {
        for (int a = 0; a < 2; ++a) {
            M[i][a] = theta(f[a], i + 1);
            if (i == a) {
                M[i][a] += BiSeries::constant(1, K, K);
            }
        }
    }
    mm.J = inverse2(M);
    return mm;
}

Mat4<Rational> phi_matrix(const ModelParams &p)
{
    Mat4<Rational> m;
    for (auto &row : m) {
        row.fill(0);
    }
    m[0][3] = m[3][0] = -1;
    m[1][1] = p.C(1, 1);
    m[1][2] = m[2][1] = p.C(1, 2);
    m[2][2] = p.C(2, 2);
    return m;
}

SeriesMatrix to_series(const Mat4<Rational> &m, int K)
{
    return map_entries(m, [K](const Rational &x) { return BiSeries::constant(x, K, K); });
}

SeriesMatrix series_inverse(const SeriesMatrix &m)
{
    int K1 = kExact;
    int K2 = kExact;
    for (const auto &row : m) {
        for (const auto &x : row) {
            K1 = std::min(K1, x.order1());
            K2 = std::min(K2, x.order2());
        }
    }
    std::array<std::array<BiSeries, 8>, 4> a;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            a[i][j] = m[i][j].truncate(K1, K2);
            a[i][j + 4] = BiSeries::constant(i == j ? 1 : 0, K1, K2);
        }
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && a[piv][col].at(0, 0) == 0) {
            ++piv;
        }
        if (piv == 4) {
            throw std::domain_error("series_inverse: matrix is not invertible at the origin");
        }
        std::swap(a[piv], a[col]);
        BiSeries ip = inv(a[col][col]);
        for (auto &x : a[col]) {
            x = x * ip;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || a[r][col].is_zero()) {
                continue;
            }
            BiSeries f = a[r][col];
            for (int j = 0; j < 8; ++j) {
                a[r][j] -= f * a[col][j];
            }
        }
    }
    SeriesMatrix r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r[i][j] = a[i][j + 4];
        }
    }
    return r;
}

FrameMatrix build_frame(const ModelParams &p, const PeriodSystem &ps, const MirrorMap &mm, const PairingData &pd)
{
    const int K = ps.K;
    FrameMatrix fm;
    fm.K = K;
    SeriesMatrix Q = to_series(pd.Q, K);
    const BiSeries zero(K, K);

    BiSeries s0 = inv(ps.X0);
    std::array<BiSeries, 2> sa{mm.D(s0, 1), mm.D(s0, 2)};
    Series2 sai;
    for (int a = 0; a < 2; ++a) {
        for (int i = 0; i < 2; ++i) {
            sai[a][i] = s0 * mm.J[a][i];
        }
    }
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            BiSeries s = zero;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    s += sai[a][i] * sai[b][j] * Q[i + 1][j + 1];
                }
            }
            fm.Calg[a][b] = s;
        }
    }

    BiSeries s33 = inv(s0 * Q[1][1]);
    std::array<std::array<BiSeries, 4>, 2> rows{{{sa[0], sai[0][0], sai[0][1], zero},
                                                 {sa[1], sai[1][0], sai[1][1], zero}}};
    std::array<std::array<BiSeries, 4>, 2> v;
    for (int a = 0; a < 2; ++a) {
        for (int l = 0; l < 4; ++l) {
            BiSeries s = zero;
            for (int k = 0; k < 4; ++k) {
                s += rows[a][k] * Q[k][l];
            }
            v[a][l] = s;
        }
    }
    // rows a of S Q S^T against the last row vanish
    Series2 lin{{{v[0][1], v[0][2]}, {v[1][1], v[1][2]}}};
    Series2 linv = inverse2(lin);
    std::array<BiSeries, 2> rhs{-(v[0][3] * s33), -(v[1][3] * s33)};
    BiSeries s31 = linv[0][0] * rhs[0] + linv[0][1] * rhs[1];
    BiSeries s32 = linv[1][0] * rhs[0] + linv[1][1] * rhs[1];
    std::array<BiSeries, 4> r4{zero, s31, s32, s33};
    BiSeries rest = zero;
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            rest += r4[k] * Q[k][l] * r4[l];
        }
    }
    BiSeries s30 = -(rest * inv(Rational(2) * Q[3][0] * s33));

    fm.S_z = {{{s0, zero, zero, zero},
               {sa[0], sai[0][0], sai[0][1], zero},
               {sa[1], sai[1][0], sai[1][1], zero},
               {s30, s31, s32, s33}}};
    fm.S = map_entries(fm.S_z, [&mm](const BiSeries &x) { return mm.to_q(x); });

    BiSeries den = sai[1][0] * Q[1][1] + sai[1][1] * Q[1][2];
    BiSeries num = BiSeries::constant(p.C(1, 2), K, K) - sai[0][1] * (sai[1][0] * Q[1][2] + sai[1][1] * Q[2][2]);
    fm.s11_from_constraint = mm.to_q(num * inv(den));
    return fm;
}

std::array<SeriesMatrix, 2> transformed_connection(const FrameMatrix &fm, const ConnectionPair &c,
                                                   const MirrorMap &mm)
{
    const int K = fm.K;
    const SeriesMatrix &S = fm.S_z;
    SeriesMatrix Si = series_inverse(S);
    std::array<SeriesMatrix, 2> conj{S * to_series(c.G1, K) * Si, S * to_series(c.G2, K) * Si};
    std::array<SeriesMatrix, 2> dS{theta(S, 1) * Si, theta(S, 2) * Si};
    std::array<SeriesMatrix, 2> out;
    for (int a = 0; a < 2; ++a) {
        SeriesMatrix A = scale(mm.J[a][0], conj[0] + dS[0]) + scale(mm.J[a][1], conj[1] + dS[1]);
        out[a] = map_entries(A, [&mm](const BiSeries &x) { return mm.to_q(x); });
    }
    return out;
}

VerificationReport verify_factorization(const ModelParams &p, const PeriodSystem &ps, const MirrorMap &mm,
                                        const FormSet &forms, int K)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "factorization";
    rep.add(exact_check("modular level matches the model", forms.level == p.N,
                        forms.level == p.N ? std::nullopt
                                           : std::optional(discrepancy("level", std::to_string(forms.level),
                                                                       std::to_string(p.N)))));
    BiSeries lhs = mm.to_q(ps.X0);
    BiSeries rhs = lift(forms.A, 1, 0, K) * lift(forms.A, 1, 1, K);
    rep.add(series_check("X0(z(q)) = A(q1) A(q1 q2)", lhs, rhs, K));
    return rep;
}

VerificationReport verify_inverse_mirror(const ModelParams &p, const MirrorMap &mm, const FormSet &forms, int K)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "inverse-mirror";
    const int Ki = mm.K;
    QSeries alpha = alpha_series(forms);
    BiSeries a1 = lift(alpha, 1, 0, Ki);
    BiSeries a2 = lift(alpha, 1, 1, Ki);
    BiSeries one = BiSeries::constant(1, Ki, Ki);
    Rational idN = Rational(1, p.d_N);

    BiSeries z1 = idN * (a1 + a2 - Rational(2) * a1 * a2);
    rep.add(series_check("z1 = (alpha1 + alpha2 - 2 alpha1 alpha2)/d_N", mm.z_of_q[0], z1, K));

    // both sides of the z2 display are divisible by q1^2; dividing costs two orders in q1
    BiSeries num = (idN * idN) * a1 * a2 * (one - a1) * (one - a2);
    BiSeries u = divide_monomial(z1, 1, 0);
    BiSeries z2 = divide_monomial(num, 2, 0) * inv(u * u);
    rep.add(series_check("z2 = alpha1 alpha2 (1-alpha1)(1-alpha2)/(d_N^2 z1^2)", mm.z_of_q[1], z2, K));

    QSeries z1_at_0 = restrict_z2_zero(mm.z_of_q[0]);
    int k = std::min(K, z1_at_0.qmax());
    rep.add(compare_q("z1 = alpha1/d_N at alpha2 = 0", z1_at_0, idN * alpha, k));

    BiSeries q1 = BiSeries::monomial(1, 0, 1, Ki, Ki);
    BiSeries q2 = BiSeries::monomial(0, 1, 1, Ki, Ki);
    rep.add(series_check("q(z(q)) = q (q1)", substitute(mm.q_of_z[0], mm.z_of_q[0], mm.z_of_q[1]), q1, K));
    rep.add(series_check("q(z(q)) = q (q2)", substitute(mm.q_of_z[1], mm.z_of_q[0], mm.z_of_q[1]), q2, K));
    rep.add(series_check("z(q(z)) = z (z1)", substitute(mm.z_of_q[0], mm.q_of_z[0], mm.q_of_z[1]), q1, K));
    rep.add(series_check("z(q(z)) = z (z2)", substitute(mm.z_of_q[1], mm.q_of_z[0], mm.q_of_z[1]), q2, K));
    return rep;
}

VerificationReport verify_frame_identities(const ModelParams &p, const FrameMatrix &fm, const PairingData &pd,
                                           const FormSet &forms, int K)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "frame";
    const int Kf = fm.K;
    SeriesMatrix Q = to_series(pd.Q, Kf);

    Check pair = matrix_check("S Q S^T = Phi", fm.S_z * Q * transpose(fm.S_z), to_series(phi_matrix(p), Kf),
                              std::min(K, Kf));
    pair.convention = "s_{a,i} = s0 d(log z_i)/dt_a (row a, column i)";
    rep.add(pair);

    // closed forms in the modular variables p1 = q1, p2 = q1 q2
    const int r = forms.r;
    QSeries Ar = pow(forms.A, r);
    QSeries cf = Rational(-1, 2 * r) * (forms.E + (Rational(2) * forms.Cr - Ar) * inv(pow(forms.A, r - 2)));
    QSeries dlogA = theta(forms.A) * inv(forms.A);
    rep.add(compare_q("-(1/2r)(E + (2C^r - A^r)/A^(r-2)) = -d log A", cf, -dlogA, forms.A.qmax() - 1));

    BiSeries log_s0 = log(fm.s0());
    for (int a = 1; a <= 2; ++a) {
        BiSeries closed = lift(cf, 1, a == 1 ? 0 : 1, Kf);
        std::array<Check, 2> per;
        for (int k = 0; k < 2; ++k) {
            per[k] = series_check("", flat_derivative(log_s0, a, kConventions[k]), closed, K);
        }
        rep.add(by_convention("s" + std::to_string(a) + "/s0 = -(1/2r)(E + (2C^r - A^r)/A^(r-2)) at tau" +
                                  std::to_string(a),
                              per));
    }

    {
        QSeries alpha = alpha_series(forms);
        BiSeries a1 = lift(alpha, 1, 0, Kf);
        BiSeries a2 = lift(alpha, 1, 1, Kf);
        BiSeries one = BiSeries::constant(1, Kf, Kf);
        BiSeries num = divide_monomial(a1 * (one - a1) * (one - Rational(2) * a2), 1, 0);
        BiSeries den = divide_monomial(a1 * (one - a2) + a2 * (one - a1), 1, 0);
        BiSeries ratioA = lift(forms.A, 1, 0, Kf) * inv(lift(forms.A, 1, 1, Kf));
        BiSeries closed = num * inv(den) * ratioA;
        // s0 d(log z1)/d tau1 with d/d tau1 = d/dt1 - d/dt2
        std::array<BiSeries, 2> entry{fm.s(1, 1), fm.s(1, 1) - fm.s(2, 1)};
        std::array<Check, 2> per;
        for (int k = 0; k < 2; ++k) {
            per[k] = series_check("", entry[k], closed, K);
        }
        rep.add(by_convention("s11 = alpha1(1-alpha1)(1-2 alpha2)/(alpha1(1-alpha2) + alpha2(1-alpha1)) A(tau1)/A(tau2)",
                              per));
    }

    rep.add(series_check("s11 recomputed from C^alg_12 = s_{1,i} s_{2,j} Y_ij", fm.s11_from_constraint, fm.s(1, 1),
                         K));

    // printed closed expressions for the last row, evaluated in z
    {
        const SeriesMatrix &S = fm.S_z;
        const BiSeries &s0 = S[0][0];
        BiSeries is0 = inv(s0);
        Series2 sai{{{S[1][1], S[1][2]}, {S[2][1], S[2][2]}}};
        Series2 Y{{{Q[1][1], Q[1][2]}, {Q[2][1], Q[2][2]}}};
        Series2 si = inverse2(sai);
        Series2 Yi = inverse2(Y);
        BiSeries iY11 = inv(Q[1][1]);
        const BiSeries Y24 = Q[1][3], Y34 = Q[2][3], Y44 = Q[3][3];
        const BiSeries &Y11 = Q[1][1], &Y12 = Q[1][2], &Y22 = Q[2][2];

        auto s3i = [&](int i, bool transposed, int sign) {
            BiSeries s(Kf, Kf);
            for (int a = 0; a < 2; ++a) {
                for (int j = 0; j < 2; ++j) {
                    s += (transposed ? si[j][a] : si[a][j]) * Yi[j][i] * S[a + 1][0];
                }
            }
            return is0 * s + Rational(sign) * is0 * (Yi[i][0] * Y24 + Yi[i][1] * Y34) * iY11;
        };
        std::string works;
        bool printed_ok = false;
        std::optional<Discrepancy> first;
        for (int sign : {1, -1}) {
            for (bool tr : {false, true}) {
                bool ok = true;
                for (int i = 0; i < 2; ++i) {
                    auto mm1 = first_mismatch(s3i(i, tr, sign), S[3][i + 1], K, K);
                    if (mm1) {
                        ok = false;
                        if (sign == 1 && !first) {
                            first = discrepancy(*mm1);
                            first->monomial = "s_{3," + std::to_string(i + 1) + "} z^(" + first->monomial + ")";
                        }
                    }
                }
                if (ok) {
                    printed_ok = printed_ok || sign == 1;
                    works += (works.empty() ? "" : "; ") + std::string(tr ? "s^{-1} index order (j,a)" : "s^{-1} index order (a,j)") +
                             (sign == 1 ? "" : " with Y24, Y34 sign-reversed");
                }
            }
        }
        Check c = exact_check("printed s_{3,i} expression", printed_ok, printed_ok ? std::nullopt : first);
        c.max_order_checked = std::min(K, Kf);
        c.note = "variants that hold: " + (works.empty() ? std::string("none") : works);
        rep.add(c);

        Series2 Ci = inverse2(fm.Calg);
        BiSeries quad(Kf, Kf);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                quad += Ci[a][b] * S[a + 1][0] * S[b + 1][0];
            }
        }
        BiSeries denom = inv(Rational(2) * s0 * Y11 * Y11 * (Y11 * Y22 - Y12 * Y12));
        std::string s30works;
        std::optional<Discrepancy> s30first;
        bool s30ok = false;
        for (int mask = 0; mask < 16; ++mask) {
            Rational e1 = mask & 1 ? -1 : 1, e24 = mask & 2 ? -1 : 1, e34 = mask & 4 ? -1 : 1,
                     e44 = mask & 8 ? -1 : 1;
            BiSeries y24 = e24 * Y24, y34 = e34 * Y34, y44 = e44 * Y44;
            BiSeries val = e1 * Rational(1, 2) * is0 * quad +
                           (Y22 * (y24 * y24 + Y11 * y44) - Y12 * Y12 * y44 - Rational(2) * Y12 * y24 * y34) * denom;
            auto mm1 = first_mismatch(val, S[3][0], K, K);
            if (!mm1) {
                s30ok = s30ok || mask == 0;
                s30works += (s30works.empty() ? "" : "; ") + std::string("sign mask ") + std::to_string(mask);
            } else if (mask == 0) {
                s30first = discrepancy(*mm1);
                s30first->monomial = "s_{3,0} z^(" + s30first->monomial + ")";
            }
        }
        Check c0 = exact_check("printed s_{3,0} expression", s30ok, s30first);
        c0.max_order_checked = std::min(K, Kf);
        c0.note = "sign variants of (first term, Y24, Y34, Y44) that hold: " +
                  (s30works.empty() ? std::string("none") : s30works);
        rep.add(c0);
    }
    return rep;
}

VerificationReport verify_modular_vector_field(const ModelParams &p, const FrameMatrix &fm, const MirrorMap &mm,
                                               const std::array<SeriesMatrix, 2> &A, int K)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "modular-vector-field";
    const int Kf = fm.K;
    for (int a = 1; a <= 2; ++a) {
        Mat4<Rational> target;
        for (auto &row : target) {
            row.fill(0);
        }
        target[0][a] = 1;
        target[1][3] = p.C(1, a);
        target[2][3] = p.C(2, a);
        rep.add(matrix_check("A_R" + std::to_string(a) + " = constant sparse form with C^alg_{b" +
                                 std::to_string(a) + "}",
                             A[a - 1], to_series(target, Kf), std::min(K, Kf)));
    }
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            rep.add(series_check("C^alg_" + std::to_string(a + 1) + std::to_string(b + 1) + " = " +
                                     std::to_string(p.C(a + 1, b + 1)),
                                 fm.Calg[a][b], BiSeries::constant(p.C(a + 1, b + 1), Kf, Kf), K));
        }
    }
    for (int a = 1; a <= 2; ++a) {
        bool ok = true;
        for (int b = 0; b < 2 && ok; ++b) {
            for (int c = 0; c < 2 && ok; ++c) {
                ok = equal_to_order(mm.D(fm.Calg[b][c], a), BiSeries(Kf, Kf), K, K);
            }
        }
        Check c = exact_check("R_" + std::to_string(a) + " C^alg = 0", ok);
        c.max_order_checked = std::min(K, Kf);
        rep.add(c);
    }
    return rep;
}

} // namespace k3gm
