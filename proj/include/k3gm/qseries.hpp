#pragma once

#include "k3gm/rational.hpp"

#include <vector>

namespace k3gm {

// Truncated Laurent series sum_{e=-pole_order}^{qmax} c_e q^e.
class QSeries {
public:
    QSeries() = default;
    QSeries(int pole_order, std::vector<Rational> coeffs);

    static QSeries zero(int qmax);
    static QSeries constant(const Rational &c, int qmax);
    static QSeries monomial(int e, const Rational &c, int qmax);

    int pole_order() const { return pole_; }
    int qmax() const { return qmax_; }
    const std::vector<Rational> &coeffs() const { return c_; }

    // Coefficient of q^e; zero below the stored range, throws above qmax.
    Rational coeff(int e) const;
    // Smallest exponent with nonzero coefficient, qmax+1 for the zero series.
    int valuation() const;
    bool is_zero() const;

    QSeries truncate(int qmax) const;

    QSeries operator-() const;
    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const Rational &s);

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational &s) { return a *= s; }
    friend QSeries operator*(const Rational &s, QSeries a) { return a *= s; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);

private:
    void strip();

    int pole_ = 0;
    int qmax_ = 0;
    std::vector<Rational> c_{Rational(0)};
};

QSeries inv(const QSeries &a);
QSeries operator/(const QSeries &a, const QSeries &b);
QSeries pow(const QSeries &a, long n);
// Requires valuation 0 and constant term 1. Newton iteration with doubling precision.
QSeries nth_root(const QSeries &a, long n);
// q d/dq
QSeries theta(const QSeries &a);
// Multiplies by q^k.
QSeries shift(const QSeries &a, int k);
// f(q^k)
QSeries dilate(const QSeries &a, int k);

} // namespace k3gm
