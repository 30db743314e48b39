#pragma once

#include "k3gm/matrix.hpp"
#include "k3gm/model.hpp"
#include "k3gm/report.hpp"

#include <array>
#include <string>

namespace k3gm {

using ConstMatrix = Mat4<Rational>;

ConstMatrix identity_matrix();
ConstMatrix unit_matrix(int i, int j); // 1-based
std::string to_string(const ConstMatrix &m);

struct GroupParams {
    Rational h0 = 1;
    Rational h1 = 0;
    Rational h2 = 0;
    Rational h3 = 0;
};

// g1..g4; g3 is exp(h1 g3) including its (4,1) entry. Requires h0 != 0 and h3 != 0.
std::array<ConstMatrix, 4> group_generators(const ModelParams &p, const GroupParams &h);
// g3 exactly as displayed, without the (4,1) entry.
ConstMatrix printed_g3(const ModelParams &p, const Rational &h1);
// Derivatives at the identity of the one-parameter families of group_generators, computed exactly.
std::array<ConstMatrix, 4> group_tangents(const ModelParams &p);

std::array<ConstMatrix, 4> lie_generators(const ModelParams &p);
std::array<ConstMatrix, 2> modular_matrices(const ModelParams &p);
ConstMatrix conjugator(const ModelParams &p);
ConstMatrix phi_const(const ModelParams &p);

struct LieBasis {
    ConstMatrix J1;
    ConstMatrix J2;
    ConstMatrix J1m;
    ConstMatrix J2m;
    ConstMatrix J1p;
    ConstMatrix J2p;

    std::array<ConstMatrix, 6> all() const { return {J1, J2, J1m, J2m, J1p, J2p}; }
    static std::array<std::string, 6> names() { return {"J1", "J2", "J1-", "J2-", "J1+", "J2+"}; }
};

LieBasis build_sl2sl2(const ModelParams &p);
// diag(1,1,-1,-1), diag(1,-1,1,-1), e31+e42, e21+e43, e13+e24, e12+e34
LieBasis printed_targets();

int rank(const std::vector<ConstMatrix> &ms);

VerificationReport verify_commutators(const LieBasis &b);
// Generator-level statements: pairing conditions, tangents, targets, model independence.
VerificationReport verify_lie(const ModelParams &p);
// Audit of the displayed group elements.
VerificationReport verify_group_displays(const ModelParams &p);

} // namespace k3gm
