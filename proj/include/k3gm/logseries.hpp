#pragma once

#include "k3gm/biseries.hpp"

namespace k3gm {

// c0 + c1 L1 + c2 L2 with L_a = log z_a.
struct LogSeries {
    BiSeries c0;
    BiSeries c1;
    BiSeries c2;

    LogSeries() = default;
    explicit LogSeries(BiSeries a) : c0(std::move(a)), c1(c0.order1(), c0.order2()), c2(c0.order1(), c0.order2()) {}
    LogSeries(BiSeries a, BiSeries b, BiSeries c) : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

    const BiSeries &component(int k) const { return k == 0 ? c0 : (k == 1 ? c1 : c2); }

    LogSeries &operator+=(const LogSeries &o);
    LogSeries &operator-=(const LogSeries &o);
    friend LogSeries operator+(LogSeries a, const LogSeries &b) { return a += b; }
    friend LogSeries operator-(LogSeries a, const LogSeries &b) { return a -= b; }
    friend LogSeries operator*(const BiSeries &f, const LogSeries &x);
    friend LogSeries operator*(const Rational &s, const LogSeries &x);
};

// theta_a(c L_b) = theta_a(c) L_b + delta_ab c
LogSeries theta(const LogSeries &x, int var);

} // namespace k3gm
