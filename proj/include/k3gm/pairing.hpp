#pragma once

#include "k3gm/connection.hpp"

namespace k3gm {

enum class PairingSource { Printed, Derived };

std::string to_string(PairingSource s);

struct PairingData {
    RF Y11;
    RF Y12;
    RF Y22;
    RF Y44;
    RFMatrix Q;
    PairingSource source = PairingSource::Printed;
};

// Couplings and Q exactly as displayed, normalization c = C_HL.
PairingData yukawa(const ModelParams &p);
// Q obtained from Q14 = -Y11 by transporting with the connection.
PairingData derived_pairing(const ModelParams &p, const ConnectionPair &c);

// The two algebraic relations and the two theta-multiplier displays.
VerificationReport verify_yukawa(const ModelParams &p, const PairingData &pd);
// theta_i Q = G_i Q + Q G_i^T for i = 1, 2 and symmetry of Q.
VerificationReport verify_pairing(const ModelParams &p, const ConnectionPair &c, const PairingData &pd);

} // namespace k3gm
