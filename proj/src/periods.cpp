#include "k3gm/periods.hpp"

#include <stdexcept>

namespace k3gm {

namespace {

using ThetaPoly = std::map<Exponent, Rational>;

ThetaPoly tmul(const ThetaPoly &a, const ThetaPoly &b)
{
    ThetaPoly r;
    for (const auto &[ea, va] : a) {
        for (const auto &[eb, vb] : b) {
            r[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
        }
    }
    return r;
}

// a1 theta1 + a2 theta2 + a0
ThetaPoly lin(const Rational &a1, const Rational &a2, const Rational &a0)
{
    return {{{1, 0}, a1}, {{0, 1}, a2}, {{0, 0}, a0}};
}

// P(theta) - z^(a,b) * Q(theta)
ThetaOperator two_term(const ThetaPoly &P, int a, int b, const Rational &scale, const ThetaPoly &Q)
{
    ThetaOperator op;
    for (const auto &[e, v] : P) {
        op.terms[e] += BiPolynomial(v);
    }
    for (const auto &[e, v] : Q) {
        op.terms[e] -= BiPolynomial::monomial(a, b, scale * v);
    }
    for (auto it = op.terms.begin(); it != op.terms.end();) {
        it = it->second.is_zero() ? op.terms.erase(it) : std::next(it);
    }
    return op;
}

BiSeries theta_power(const BiSeries &x, int i, int j)
{
    BiSeries y = x;
    for (int k = 0; k < i; ++k) {
        y = theta(y, 1);
    }
    for (int k = 0; k < j; ++k) {
        y = theta(y, 2);
    }
    return y;
}

LogSeries theta_power(const LogSeries &x, int i, int j)
{
    LogSeries y = x;
    for (int k = 0; k < i; ++k) {
        y = theta(y, 1);
    }
    for (int k = 0; k < j; ++k) {
        y = theta(y, 2);
    }
    return y;
}

Rational ipow(long b, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

} // namespace

BiSeries ThetaOperator::apply(const BiSeries &x) const
{
    BiSeries r(x.order1(), x.order2());
    for (const auto &[e, c] : terms) {
        r += c.to_series(kExact, kExact) * theta_power(x, e.first, e.second);
    }
    return r;
}

LogSeries ThetaOperator::apply(const LogSeries &x) const
{
    LogSeries r(BiSeries(x.c0.order1(), x.c0.order2()));
    for (const auto &[e, c] : terms) {
        r += c.to_series(kExact, kExact) * theta_power(x, e.first, e.second);
    }
    return r;
}

Rational ThetaOperator::coeff_of_image(const BiSeries &s, int n, int m) const
{
    Rational r = 0;
    for (const auto &[e, c] : terms) {
        for (const auto &[shift, v] : c.terms()) {
            int i = n - shift.first;
            int j = m - shift.second;
            if (i < 0 || j < 0) {
                continue;
            }
            const Rational &x = s.at(i, j);
            if (x != 0) {
                r += v * ipow(i, e.first) * ipow(j, e.second) * x;
            }
        }
    }
    return r;
}

Rational ThetaOperator::diagonal(int n, int m) const
{
    Rational r = 0;
    for (const auto &[e, c] : terms) {
        r += c.constant_term() * ipow(n, e.first) * ipow(m, e.second);
    }
    return r;
}

PicardFuchsSystem picard_fuchs(const ModelParams &p)
{
    PicardFuchsSystem s;
    // theta1 (theta1 - 2 theta2) - mu z1 (nu theta1 + nu - 1)(nu theta1 + 1)
    s.L1 = two_term(tmul(lin(1, 0, 0), lin(1, -2, 0)), 1, 0, p.mu, tmul(lin(p.nu, 0, p.nu - 1), lin(p.nu, 0, 1)));
    // theta2^2 - z2 (theta1 - 2 theta2)(theta1 - 2 theta2 - 1)
    s.L2 = two_term(tmul(lin(0, 1, 0), lin(0, 1, 0)), 0, 1, 1, tmul(lin(1, -2, 0), lin(1, -2, -1)));
    return s;
}

BiSeries holomorphic_period(const ModelParams &p, int K)
{
    if (K < 0) {
        throw std::invalid_argument("holomorphic_period: K must be non-negative");
    }
    BiSeries x(K, K);
    for (int n = 0; n <= K; ++n) {
        if ((p.d * n) % 2 != 0 || (p.w1 * n) % 2 != 0 || (p.w2 * n) % 2 != 0) {
            throw std::logic_error("holomorphic_period: non-integral factorial argument");
        }
        Integer top = factorial(p.d * n / 2);
        Integer w = factorial(p.w1 * n / 2) * factorial(p.w2 * n / 2);
        for (int m = 0; 2 * m <= n && m <= K; ++m) {
            Integer mf = factorial(m);
            Integer den = w * mf * mf * factorial(n - 2 * m);
            Rational v(top, den);
            v.canonicalize();
            x.set(n, m, v);
        }
    }
    return x;
}

LogSeries PeriodSystem::log_period(int a) const
{
    if (a != 1 && a != 2) {
        throw std::invalid_argument("log period index must be 1 or 2");
    }
    BiSeries zero(K, K);
    return a == 1 ? LogSeries(Shat1, X0, zero) : LogSeries(Shat2, zero, X0);
}

PeriodSystem frobenius_log_periods(const ModelParams &p, int K)
{
    if (K < 2) {
        throw std::invalid_argument("frobenius_log_periods: K must be at least 2");
    }
    PicardFuchsSystem pf = picard_fuchs(p);
    const ThetaOperator *ops[2] = {&pf.L1, &pf.L2};
    PeriodSystem ps;
    ps.K = K;
    ps.X0 = holomorphic_period(p, K);
    BiSeries zero(K, K);
    for (int a = 1; a <= 2; ++a) {
        LogSeries seed = a == 1 ? LogSeries(zero, ps.X0, zero) : LogSeries(zero, zero, ps.X0);
        BiSeries source[2];
        for (int k = 0; k < 2; ++k) {
            LogSeries img = ops[k]->apply(seed);
            if (!img.c1.is_zero() || !img.c2.is_zero()) {
                throw std::logic_error("Picard-Fuchs operator does not annihilate the holomorphic period");
            }
            source[k] = img.c0;
        }
        BiSeries s(K, K);
        for (int n = 0; n <= K; ++n) {
            for (int m = 0; m <= K; ++m) {
                if (n == 0 && m == 0) {
                    continue;
                }
                // the operator whose degree-preserving part is invertible here
                int k = m > 0 ? 1 : 0;
                Rational diag = ops[k]->diagonal(n, m);
                if (diag == 0) {
                    k = 1 - k;
                    diag = ops[k]->diagonal(n, m);
                }
                if (diag == 0) {
                    throw std::runtime_error("Frobenius recursion singular at degree (" + std::to_string(n) + "," +
                                             std::to_string(m) + ")");
                }
                Rational res = source[k].at(n, m) + ops[k]->coeff_of_image(s, n, m);
                s.set(n, m, -res / diag);
            }
        }
        for (int k = 0; k < 2; ++k) {
            if (!(ops[k]->apply(s) + source[k]).is_zero()) {
                throw std::runtime_error("Frobenius solution is not annihilated by both operators");
            }
        }
        (a == 1 ? ps.Shat1 : ps.Shat2) = s;
    }
    return ps;
}

VerificationReport verify_picard_fuchs(const ModelParams &p, const PeriodSystem &ps)
{
    VerificationReport rep;
    rep.model = p.name;
    rep.suite = "picard-fuchs";
    PicardFuchsSystem pf = picard_fuchs(p);
    const std::pair<std::string, LogSeries> sols[3] = {
        {"X0", ps.holomorphic()}, {"X1", ps.log_period(1)}, {"X2", ps.log_period(2)}};
    BiSeries zero(ps.K, ps.K);
    for (const auto &[label, x] : sols) {
        for (int k = 1; k <= 2; ++k) {
            LogSeries img = (k == 1 ? pf.L1 : pf.L2).apply(x);
            Check c = compare_series("L" + std::to_string(k) + " " + label + " = 0", img.c0, zero);
            for (const BiSeries *part : {&img.c1, &img.c2}) {
                if (c.status == Status::Pass) {
                    Check d = compare_series("", *part, zero);
                    if (d.status == Status::Fail) {
                        c.status = Status::Fail;
                        c.first_discrepancy = d.first_discrepancy;
                        c.note = "in a logarithmic component";
                    }
                }
            }
            rep.add(c);
        }
    }
    rep.add(exact_check("X0(0) = 1", ps.X0.at(0, 0) == 1));
    rep.add(exact_check("Shat(0) = 0", ps.Shat1.at(0, 0) == 0 && ps.Shat2.at(0, 0) == 0));
    // on functions of z1 alone the theta1^2 coefficient of L1 is 1 - d_N z1
    BiPolynomial lead = at_z2_zero(pf.L1.terms.at({2, 0}));
    BiPolynomial expect = BiPolynomial(1) - BiPolynomial::monomial(1, 0, p.d_N);
    rep.add(exact_check("L1 at z2 = 0 has discriminant 1 - d_N z1", lead == expect));
    rep.add(exact_check("mu nu^2 = d_N", p.mu * p.nu * p.nu == p.d_N));
    return rep;
}

} // namespace k3gm
