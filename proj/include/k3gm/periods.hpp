#pragma once

#include "k3gm/bipoly.hpp"
#include "k3gm/logseries.hpp"
#include "k3gm/model.hpp"
#include "k3gm/report.hpp"

#include <map>
#include <utility>

namespace k3gm {

// sum over (i,j) of coefficient(z) * theta1^i theta2^j, coefficients on the left
struct ThetaOperator {
    std::map<Exponent, BiPolynomial> terms;

    BiSeries apply(const BiSeries &x) const;
    LogSeries apply(const LogSeries &x) const;
    // Coefficient of z^(n,m) in (this)(s), read off from coefficients of s.
    Rational coeff_of_image(const BiSeries &s, int n, int m) const;
    // The part of the operator that preserves degree, evaluated on z^(n,m).
    Rational diagonal(int n, int m) const;
};

struct PicardFuchsSystem {
    ThetaOperator L1;
    ThetaOperator L2;
};

PicardFuchsSystem picard_fuchs(const ModelParams &p);

BiSeries holomorphic_period(const ModelParams &p, int K);

// X^a = X0 log z_a + Shat^a; the 2 pi i of the transcendental normalization is absorbed into Shat.
struct PeriodSystem {
    int K = 0;
    BiSeries X0;
    BiSeries Shat1;
    BiSeries Shat2;

    const BiSeries &shat(int a) const { return a == 1 ? Shat1 : Shat2; }
    LogSeries log_period(int a) const;
    LogSeries holomorphic() const { return LogSeries(X0); }
};

PeriodSystem frobenius_log_periods(const ModelParams &p, int K);

// Annihilation of X0 and both log periods, plus the z2 = 0 reduction of L1.
VerificationReport verify_picard_fuchs(const ModelParams &p, const PeriodSystem &ps);

} // namespace k3gm
