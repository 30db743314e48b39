#include "k3gm/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3gm {

namespace {

EtaQuotient normalized(Rational offset, const QSeries &w)
{
    int v = w.valuation();
    if (v > w.qmax()) {
        throw std::domain_error("eta quotient vanishes to truncation order");
    }
    EtaQuotient r;
    r.offset = offset + v;
    r.scale = w.coeff(v);
    r.unit = shift(w, -v) * Rational(1 / r.scale);
    return r;
}

std::optional<Rational> rational_root(const Rational &x, long n)
{
    if (x <= 0 && n % 2 == 0) {
        return std::nullopt;
    }
    Integer num;
    Integer den;
    Integer xn = x.get_num();
    bool neg = xn < 0;
    if (neg) {
        xn = -xn;
    }
    if (mpz_root(num.get_mpz_t(), xn.get_mpz_t(), n) == 0 ||
        mpz_root(den.get_mpz_t(), x.get_den().get_mpz_t(), n) == 0) {
        return std::nullopt;
    }
    Rational r(neg ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
}

} // namespace

EtaQuotient eta_expansion(int scale, int qmax)
{
    if (scale <= 0 || qmax < 0) {
        throw std::invalid_argument("eta_expansion: scale must be positive and qmax non-negative");
    }
    std::vector<Rational> p(qmax + 1);
    p[0] = 1;
    for (int n = 1; scale * n <= qmax; ++n) {
        int s = scale * n;
        for (int e = qmax; e >= s; --e) {
            p[e] -= p[e - s];
        }
    }
    EtaQuotient r;
    r.offset = Rational(scale, 24);
    r.offset.canonicalize();
    r.unit = QSeries(0, std::move(p));
    return r;
}

EtaQuotient operator*(const EtaQuotient &a, const EtaQuotient &b)
{
    return {a.offset + b.offset, a.scale * b.scale, a.unit * b.unit};
}

EtaQuotient operator/(const EtaQuotient &a, const EtaQuotient &b)
{
    return {a.offset - b.offset, a.scale / b.scale, a.unit / b.unit};
}

EtaQuotient operator*(const Rational &s, EtaQuotient a)
{
    if (s == 0) {
        throw std::domain_error("eta quotient: zero scale");
    }
    a.scale *= s;
    return a;
}

EtaQuotient operator+(const EtaQuotient &a, const EtaQuotient &b)
{
    Rational d = b.offset - a.offset;
    if (d.get_den() != 1) {
        throw std::domain_error("eta quotient sum: offsets differ by a non-integer");
    }
    const EtaQuotient &lo = d >= 0 ? a : b;
    const EtaQuotient &hi = d >= 0 ? b : a;
    int k = static_cast<int>(Rational(abs(d)).get_num().get_si());
    QSeries w = lo.unit * lo.scale + shift(hi.unit, k) * hi.scale;
    return normalized(lo.offset, w);
}

EtaQuotient pow(const EtaQuotient &a, long n)
{
    Rational s = 1;
    for (long i = 0; i < std::abs(n); ++i) {
        s *= a.scale;
    }
    if (n < 0) {
        s = 1 / s;
    }
    return {a.offset * n, s, pow(a.unit, n)};
}

EtaQuotient nth_root(const EtaQuotient &a, long n)
{
    auto s = rational_root(a.scale, n);
    if (!s) {
        throw std::domain_error("eta quotient root: scale is not a rational n-th power");
    }
    Rational off = a.offset / n;
    off.canonicalize();
    return {off, *s, nth_root(a.unit, n)};
}

QSeries finalize(const EtaQuotient &a)
{
    if (a.offset.get_den() != 1) {
        throw std::domain_error("eta quotient has non-integral q-exponent " + to_string(a.offset));
    }
    return shift(a.unit, static_cast<int>(a.offset.get_num().get_si())) * a.scale;
}

QSeries eisenstein(int k, int qmax)
{
    long c;
    switch (k) {
    case 2:
        c = -24;
        break;
    case 4:
        c = 240;
        break;
    case 6:
        c = -504;
        break;
    default:
        throw std::invalid_argument("eisenstein: unsupported weight " + std::to_string(k));
    }
    std::vector<Rational> v(qmax + 1);
    v[0] = 1;
    for (int n = 1; n <= qmax; ++n) {
        Integer sigma = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) {
                Integer p;
                mpz_ui_pow_ui(p.get_mpz_t(), d, k - 1);
                sigma += p;
            }
        }
        v[n] = Rational(sigma * c);
    }
    return QSeries(0, std::move(v));
}

int level_root_exponent(int N)
{
    switch (N) {
    case 1:
        return 6;
    case 2:
        return 4;
    case 3:
        return 3;
    }
    throw std::invalid_argument("unsupported level " + std::to_string(N));
}

int level_constant(int N)
{
    switch (N) {
    case 1:
        return 432;
    case 2:
        return 64;
    case 3:
        return 27;
    }
    throw std::invalid_argument("unsupported level " + std::to_string(N));
}

FormSet build_forms(int N, int qmax)
{
    if (qmax < 1) {
        throw std::invalid_argument("build_forms: qmax must be at least 1");
    }
    FormSet f;
    f.level = N;
    f.r = level_root_exponent(N);
    f.d_N = level_constant(N);
    if (N == 1) {
        QSeries e4 = eisenstein(4, qmax);
        QSeries e6 = eisenstein(6, qmax);
        f.A = nth_root(e4, 4);
        QSeries e4_32 = pow(f.A, 6);
        QSeries b6 = (e4_32 + e6) * Rational(1, 2);
        f.Cr = (e4_32 - e6) * Rational(1, 2);
        f.B = nth_root(b6, 6);
    } else if (N == 2) {
        EtaQuotient e1 = eta_expansion(1, qmax);
        EtaQuotient e2 = eta_expansion(2, qmax);
        EtaQuotient a = nth_root(pow(e1, 24) + Rational(64) * pow(e2, 24), 4) / (pow(e1, 2) * pow(e2, 2));
        f.A = finalize(a);
        f.B = finalize(pow(e1, 4) / pow(e2, 2));
        f.Cr = finalize(Rational(64) * pow(e2, 16) / pow(e1, 8));
    } else if (N == 3) {
        EtaQuotient e1 = eta_expansion(1, qmax);
        EtaQuotient e3 = eta_expansion(3, qmax);
        EtaQuotient a = nth_root(pow(e1, 12) + Rational(27) * pow(e3, 12), 3) / (e1 * e3);
        f.A = finalize(a);
        f.B = finalize(pow(e1, 3) / e3);
        f.Cr = finalize(Rational(27) * pow(e3, 9) / pow(e1, 3));
    } else {
        throw std::invalid_argument("build_forms: level must be 1, 2 or 3");
    }
    QSeries brcr = pow(f.B, f.r) * f.Cr;
    f.E = theta(brcr) / brcr;
    f.A = f.A.truncate(qmax);
    f.B = f.B.truncate(qmax);
    f.Cr = f.Cr.truncate(qmax);
    f.E = f.E.truncate(qmax);
    return f;
}

QSeries hauptmodul_j(const FormSet &f)
{
    QSeries ar = pow(f.A, f.r);
    QSeries den = f.Cr * (ar - f.Cr);
    int v = den.valuation();
    if (v > den.qmax()) {
        throw std::domain_error("hauptmodul_j: denominator vanishes to truncation order");
    }
    return pow(f.A, 2 * f.r) * inv(den) * Rational(f.d_N);
}

QSeries alpha_series(const FormSet &f)
{
    return f.Cr / pow(f.A, f.r);
}

QSeries klein_j(int qmax)
{
    // eta^24 = q prod (1-q^n)^24, so E4^3/eta^24 = q^-1 E4^3 / prod(...)^24
    QSeries e4 = eisenstein(4, qmax + 1);
    EtaQuotient eta = eta_expansion(1, qmax + 1);
    QSeries d24 = pow(eta.unit, 24);
    return shift(pow(e4, 3) / d24, -1);
}

std::optional<Mismatch> first_mismatch(const QSeries &a, const QSeries &b, int upto)
{
    int hi = std::min({upto, a.qmax(), b.qmax()});
    int lo = -std::max(a.pole_order(), b.pole_order());
    for (int e = lo; e <= hi; ++e) {
        Rational x = a.coeff(e);
        Rational y = b.coeff(e);
        if (x != y) {
            return Mismatch{{e, 0}, x, y};
        }
    }
    return std::nullopt;
}

Check compare_q(const std::string &name, const QSeries &lhs, const QSeries &rhs, int upto)
{
    Check c;
    c.name = name;
    c.max_order_checked = std::min({upto, lhs.qmax(), rhs.qmax()});
    if (auto m = first_mismatch(lhs, rhs, upto)) {
        c.status = Status::Fail;
        c.first_discrepancy = Discrepancy{"q^" + std::to_string(m->monomial.first), to_string(m->lhs),
                                          to_string(m->rhs)};
    } else {
        c.status = Status::Pass;
    }
    return c;
}

VerificationReport verify_ramanujan_ring(const FormSet &f)
{
    VerificationReport rep;
    rep.model = "N=" + std::to_string(f.level);
    rep.suite = "ramanujan";
    const int upto = f.A.qmax() - 1;
    const Rational k(1, 2 * f.r);
    QSeries a2 = f.A * f.A;
    QSeries br = pow(f.B, f.r);
    // dA = A (E + (C^r - B^r)/A^(r-2)) / 2r
    QSeries rhs_a = f.A * (f.E + (f.Cr - br) * pow(f.A, 2 - f.r)) * k;
    rep.add(compare_q("dA = A(E + (C^r - B^r)/A^(r-2))/2r", theta(f.A), rhs_a, upto));
    rep.add(compare_q("dB = B(E - A^2)/2r", theta(f.B), f.B * (f.E - a2) * k, upto));
    Check dc = compare_q("dC = C(E + A^2)/2r", theta(f.Cr), f.Cr * (f.E + a2) * Rational(1, 2), upto);
    dc.convention = "checked as d(C^r) = C^r (E + A^2)/2";
    rep.add(dc);
    rep.add(compare_q("dE = (E^2 - A^4)/2r", theta(f.E), (f.E * f.E - a2 * a2) * k, upto));
    rep.add(compare_q("A^r = B^r + C^r", pow(f.A, f.r), br + f.Cr, f.A.qmax()));
    rep.add(exact_check("A(0) = B(0) = E(0) = 1", f.A.coeff(0) == 1 && f.B.coeff(0) == 1 && f.E.coeff(0) == 1));
    rep.add(exact_check("C^r(0) = 0", f.Cr.coeff(0) == 0, Discrepancy{"q^0", to_string(f.Cr.coeff(0)), "0"}));
    if (f.level == 1) {
        rep.add(compare_q("E = E2", f.E, eisenstein(2, f.E.qmax()), f.E.qmax()));
    }
    QSeries alpha = alpha_series(f);
    rep.add(compare_q("d alpha = alpha (1 - alpha) A^2", theta(alpha),
                      alpha * (QSeries::constant(1, alpha.qmax()) - alpha) * a2, upto));
    return rep;
}

VerificationReport verify_jfunction(const FormSet &f)
{
    VerificationReport rep;
    rep.model = "N=" + std::to_string(f.level);
    rep.suite = "jfunction";
    QSeries j = hauptmodul_j(f);
    Check pole = exact_check("j has a simple pole with residue 1", j.pole_order() == 1 && j.coeff(-1) == 1,
                             Discrepancy{"q^-1", to_string(j.pole_order() > 0 ? j.coeff(-1) : Rational(0)), "1"});
    rep.add(pole);
    if (f.level == 1) {
        rep.add(compare_q("j = E4^3/eta^24", j, klein_j(j.qmax()), j.qmax()));
        rep.add(compare_q("j = q^-1 + 744 + 196884 q", j.truncate(1), QSeries(1, {1, 744, 196884}), 1));
    }
    QSeries alpha = alpha_series(f);
    QSeries one = QSeries::constant(1, alpha.qmax());
    QSeries rhs = alpha * (one - alpha) * Rational(1, f.d_N);
    QSeries jinv = inv(j);
    rep.add(compare_q("1/j = alpha(1 - alpha)/d_N", jinv, rhs, f.A.qmax()));
    return rep;
}

} // namespace k3gm
