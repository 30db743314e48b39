#pragma once

#include "k3gm/bipoly.hpp"
#include "k3gm/matrix.hpp"
#include "k3gm/model.hpp"
#include "k3gm/periods.hpp"
#include "k3gm/report.hpp"

#include <string>
#include <vector>

namespace k3gm {

using RF = BiRationalFunction;
using RFMatrix = Mat4<RF>;

enum class ConnectionSource {
    Printed,     // transcribed display, kept for auditing
    PicardFuchs, // reduced from the Picard-Fuchs system
};

std::string to_string(ConnectionSource s);

// theta_i w^T = G_i w^T in the basis (w1, theta1 w1, theta2 w1, theta1^2 w1).
struct ConnectionPair {
    RFMatrix G1;
    RFMatrix G2;
    BiPolynomial Delta1;
    BiPolynomial Delta2;
    BiPolynomial Disc;
    ConnectionSource source = ConnectionSource::PicardFuchs;

    const RFMatrix &G(int i) const { return i == 1 ? G1 : G2; }
};

RFMatrix theta(const RFMatrix &m, int var);
RFMatrix rf_matrix(const Mat4<Rational> &m);

ConnectionPair gm_matrices(const ModelParams &p);
ConnectionPair derived_connection(const ModelParams &p);

// theta1 G2 - theta2 G1 + G2 G1 - G1 G2
RFMatrix curvature(const ConnectionPair &c);

VerificationReport verify_flatness(const ModelParams &p, const ConnectionPair &c);
// One check per entry of G1 and G2.
std::vector<Check> compare_connections(const ConnectionPair &a, const ConnectionPair &b);
VerificationReport verify_period_system(const ModelParams &p, const ConnectionPair &c, const PeriodSystem &ps);

Mat4<BiSeries> to_series(const RFMatrix &m, int K);

} // namespace k3gm
