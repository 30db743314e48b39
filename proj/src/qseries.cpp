#include "k3gm/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3gm {

QSeries::QSeries(int pole_order, std::vector<Rational> coeffs) : pole_(pole_order), c_(std::move(coeffs))
{
    if (pole_ < 0) {
        throw std::invalid_argument("QSeries: negative pole order");
    }
    if (c_.empty() || static_cast<int>(c_.size()) < pole_ + 1) {
        throw std::invalid_argument("QSeries: coefficient list shorter than pole_order + 1");
    }
    qmax_ = static_cast<int>(c_.size()) - pole_ - 1;
    strip();
}

void QSeries::strip()
{
    int lead = 0;
    while (lead < pole_ && c_[lead] == 0) {
        ++lead;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        pole_ -= lead;
    }
}

QSeries QSeries::zero(int qmax)
{
    if (qmax < 0) {
        throw std::invalid_argument("QSeries: negative qmax");
    }
    return QSeries(0, std::vector<Rational>(qmax + 1));
}

QSeries QSeries::constant(const Rational &c, int qmax)
{
    QSeries s = zero(qmax);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::monomial(int e, const Rational &c, int qmax)
{
    if (e > qmax) {
        return zero(qmax);
    }
    int pole = std::max(0, -e);
    std::vector<Rational> v(pole + qmax + 1);
    v[e + pole] = c;
    return QSeries(pole, std::move(v));
}

Rational QSeries::coeff(int e) const
{
    if (e > qmax_) {
        throw std::out_of_range("QSeries: coefficient beyond truncation order requested");
    }
    if (e < -pole_) {
        return 0;
    }
    return c_[e + pole_];
}

int QSeries::valuation() const
{
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] != 0) {
            return i - pole_;
        }
    }
    return qmax_ + 1;
}

bool QSeries::is_zero() const
{
    return valuation() > qmax_;
}

QSeries QSeries::truncate(int qmax) const
{
    if (qmax >= qmax_) {
        return *this;
    }
    if (qmax < -pole_) {
        throw std::invalid_argument("QSeries: truncation below the principal part");
    }
    return QSeries(pole_, std::vector<Rational>(c_.begin(), c_.begin() + pole_ + qmax + 1));
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto &x : r.c_) {
        x = -x;
    }
    return r;
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    int qm = std::min(qmax_, o.qmax_);
    int pole = std::max(pole_, o.pole_);
    std::vector<Rational> v(pole + qm + 1);
    for (int e = -pole; e <= qm; ++e) {
        v[e + pole] = coeff(e) + o.coeff(e);
    }
    *this = QSeries(pole, std::move(v));
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    return *this += -o;
}

QSeries &QSeries::operator*=(const Rational &s)
{
    for (auto &x : c_) {
        x *= s;
    }
    strip();
    return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    int va = a.valuation();
    int vb = b.valuation();
    // exact precision of a Cauchy product of q^va(...) and q^vb(...)
    int qm = std::min(a.qmax() + vb, b.qmax() + va);
    int lo = va + vb;
    if (va > a.qmax() || vb > b.qmax() || qm < lo) {
        return QSeries::zero(std::max(qm, 0));
    }
    int pole = std::max(0, -lo);
    std::vector<Rational> v(pole + std::max(qm, 0) + 1);
    for (int i = va; i <= a.qmax() && i + vb <= qm; ++i) {
        const Rational x = a.coeff(i);
        if (x == 0) {
            continue;
        }
        for (int j = vb; i + j <= qm; ++j) {
            v[i + j + pole] += x * b.coeff(j);
        }
    }
    return QSeries(pole, std::move(v));
}

QSeries inv(const QSeries &a)
{
    int v = a.valuation();
    if (v > a.qmax()) {
        throw std::domain_error("QSeries inverse: series is zero to its truncation order");
    }
    int prec = a.qmax() - v;
    std::vector<Rational> u(prec + 1);
    for (int i = 0; i <= prec; ++i) {
        u[i] = a.coeff(v + i);
    }
    std::vector<Rational> w(prec + 1);
    Rational c0inv = 1 / u[0];
    w[0] = c0inv;
    for (int n = 1; n <= prec; ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) {
            if (u[k] != 0) {
                s += u[k] * w[n - k];
            }
        }
        w[n] = -s * c0inv;
    }
    return shift(QSeries(0, std::move(w)), -v);
}

QSeries operator/(const QSeries &a, const QSeries &b)
{
    return a * inv(b);
}

QSeries pow(const QSeries &a, long n)
{
    if (n < 0) {
        return pow(inv(a), -n);
    }
    QSeries result = QSeries::constant(1, a.qmax());
    QSeries base = a;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

QSeries nth_root(const QSeries &a, long n)
{
    if (n <= 0) {
        throw std::invalid_argument("nth_root: exponent must be positive");
    }
    if (a.valuation() != 0 || a.coeff(0) != 1) {
        throw std::domain_error("nth_root: constant term must be 1");
    }
    const int target = a.qmax();
    const Rational inv_n(1, n);
    std::vector<Rational> y{Rational(1)};
    int prec = 0;
    while (prec < target) {
        // y is exact through q^prec; one step doubles that
        prec = std::min(2 * prec + 1, target);
        y.resize(prec + 1);
        QSeries ys(0, y);
        QSeries step = (a.truncate(prec) * pow(ys, 1 - n) - ys) * inv_n;
        y = (ys + step).coeffs();
    }
    return QSeries(0, std::move(y));
}

QSeries theta(const QSeries &a)
{
    std::vector<Rational> v = a.coeffs();
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        v[i] *= (i - a.pole_order());
    }
    return QSeries(a.pole_order(), std::move(v));
}

QSeries shift(const QSeries &a, int k)
{
    int qm = a.qmax() + k;
    int lo = std::min(-a.pole_order() + k, 0);
    int pole = -lo;
    if (qm < lo) {
        throw std::invalid_argument("QSeries shift: nothing left");
    }
    std::vector<Rational> v(pole + qm + 1);
    for (int e = -a.pole_order(); e <= a.qmax(); ++e) {
        v[e + k + pole] = a.coeff(e);
    }
    return QSeries(pole, std::move(v));
}

QSeries dilate(const QSeries &a, int k)
{
    if (k <= 0) {
        throw std::invalid_argument("QSeries dilate: factor must be positive");
    }
    int pole = a.pole_order() * k;
    int qm = (a.qmax() + 1) * k - 1;
    std::vector<Rational> v(pole + qm + 1);
    for (int e = -a.pole_order(); e <= a.qmax(); ++e) {
        v[e * k + pole] = a.coeff(e);
    }
    return QSeries(pole, std::move(v));
}

} // namespace k3gm
