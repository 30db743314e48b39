#pragma once

#include "k3gm/qseries.hpp"
#include "k3gm/report.hpp"

#include <optional>

namespace k3gm {

// scale * q^offset * unit, unit with constant term 1.
struct EtaQuotient {
    Rational offset;
    Rational scale = 1;
    QSeries unit;
};

EtaQuotient eta_expansion(int scale, int qmax);
EtaQuotient operator*(const EtaQuotient &a, const EtaQuotient &b);
EtaQuotient operator/(const EtaQuotient &a, const EtaQuotient &b);
EtaQuotient operator*(const Rational &s, EtaQuotient a);
// Offsets must differ by an integer.
EtaQuotient operator+(const EtaQuotient &a, const EtaQuotient &b);
EtaQuotient pow(const EtaQuotient &a, long n);
// Requires the scale to be an n-th power of a rational.
EtaQuotient nth_root(const EtaQuotient &a, long n);
// Throws if the offset is not an integer.
QSeries finalize(const EtaQuotient &a);

QSeries eisenstein(int k, int qmax);

// Weight-one forms for Gamma_0(N). C itself has a fractional q-power, so only C^r is held.
struct FormSet {
    int level = 0;
    int r = 0;
    int d_N = 0;
    QSeries A;
    QSeries B;
    QSeries Cr;
    QSeries E;
};

int level_root_exponent(int N);
int level_constant(int N);

FormSet build_forms(int N, int qmax);
QSeries hauptmodul_j(const FormSet &f);
QSeries alpha_series(const FormSet &f);
// E4^3 / eta^24, independent of the form set.
QSeries klein_j(int qmax);

std::optional<Mismatch> first_mismatch(const QSeries &a, const QSeries &b, int upto);
Check compare_q(const std::string &name, const QSeries &lhs, const QSeries &rhs, int upto);

VerificationReport verify_ramanujan_ring(const FormSet &f);
VerificationReport verify_jfunction(const FormSet &f);

} // namespace k3gm
