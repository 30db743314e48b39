#pragma once

#include "k3gm/modular.hpp"
#include "k3gm/pairing.hpp"

#include <array>

namespace k3gm {

using SeriesMatrix = Mat4<BiSeries>;
using Series2 = std::array<std::array<BiSeries, 2>, 2>;

// q_a = z_a exp(Shat^a / X0) and its compositional inverse.
struct MirrorMap {
    int K = 0;
    std::array<BiSeries, 2> q_of_z;
    std::array<BiSeries, 2> z_of_q;
    // J[a][i] = d log z_i / d t_a as series in z.
    Series2 J;

    // d/dt_a on series in z.
    BiSeries D(const BiSeries &f, int a) const;
    // Pulls a series in z back to (q1, q2).
    BiSeries to_q(const BiSeries &f) const;
};

MirrorMap mirror_map(const PeriodSystem &ps);

// Lower block-triangular S with S Q S^T = Phi; entries held both in z and in q.
struct FrameMatrix {
    int K = 0;
    SeriesMatrix S_z;
    SeriesMatrix S;
    // s_{1,1} recomputed from C^alg_12 = s_{1,i} s_{2,j} Y_ij, in q.
    BiSeries s11_from_constraint;
    // C^alg_ab = s_{a,i} s_{b,j} Y_ij, in z.
    Series2 Calg;

    const BiSeries &s0() const { return S[0][0]; }
    const BiSeries &s(int a) const { return S[a][0]; }
    const BiSeries &s(int a, int i) const { return S[a][i]; }
};

Mat4<Rational> phi_matrix(const ModelParams &p);
SeriesMatrix to_series(const Mat4<Rational> &m, int K);
SeriesMatrix series_inverse(const SeriesMatrix &m);

FrameMatrix build_frame(const ModelParams &p, const PeriodSystem &ps, const MirrorMap &mm, const PairingData &pd);

// A_{R_a} = sum_i J_ai S G_i S^-1 + (d_a S) S^-1, as series in q.
std::array<SeriesMatrix, 2> transformed_connection(const FrameMatrix &fm, const ConnectionPair &c,
                                                   const MirrorMap &mm);

VerificationReport verify_factorization(const ModelParams &p, const PeriodSystem &ps, const MirrorMap &mm,
                                        const FormSet &forms, int K);
VerificationReport verify_inverse_mirror(const ModelParams &p, const MirrorMap &mm, const FormSet &forms, int K);
VerificationReport verify_frame_identities(const ModelParams &p, const FrameMatrix &fm, const PairingData &pd,
                                           const FormSet &forms, int K);
VerificationReport verify_modular_vector_field(const ModelParams &p, const FrameMatrix &fm, const MirrorMap &mm,
                                               const std::array<SeriesMatrix, 2> &A, int K);

} // namespace k3gm
