#pragma once

#include <array>
#include <cmath>
#include <string>

#include "matrix.hpp"
#include "rindler.hpp"
#include "spin_model.hpp"

namespace qtele {

// Bell projectors in the index order psi-, Phi-, Phi+, psi+ with
// psi+- = (|01> +- |10>)/sqrt 2 and Phi+- = (|00> +- |11>)/sqrt 2.
inline std::array<mat4, 4> bell_projectors() {
    const double inv = 1.0 / std::sqrt(2.0);
    std::array<vec4, 4> b;
    b[0][2] = inv;
    b[0][1] = -inv;
    b[1][3] = inv;
    b[1][0] = -inv;
    b[2][3] = inv;
    b[2][0] = inv;
    b[3][2] = inv;
    b[3][1] = inv;
    std::array<mat4, 4> e;
    for (int i = 0; i < 4; ++i) e[i] = outer(b[i], b[i]);
    return e;
}

// Joint Bell-measurement probabilities p[i][j] = Tr[E^i rho_th] Tr[E^j rho_th]
// from the two independently measured copies of the resource state.
struct channel_probs_t {
    std::array<std::array<double, 4>, 4> p{};
};

inline channel_probs_t channel_probs(const model_params& m) {
    const mat4 rho = thermal_state(m);
    const std::array<mat4, 4> e = bell_projectors();
    std::array<double, 4> q{};
    for (int i = 0; i < 4; ++i) {
        q[i] = trace(e[i] * rho).real();
        if (q[i] < -1e-12 || q[i] > 1 + 1e-12)
            throw ParamError("Bell probability out of range: " + std::to_string(q[i]));
    }
    channel_probs_t cp;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) cp.p[i][j] = q[i] * q[j];
    return cp;
}

// Pauli twirl rho_out = sum_ij p_ij (s_i x s_j) rho (s_i x s_j), with the
// correction index aligned to the Bell index in the order (0, x, y, z).
// Zero-skipping multiplies keep the X pattern of an X input exactly zero.
inline mat4 apply_channel(const model_params& m, const mat4& rho_in) {
    const channel_probs_t cp = channel_probs(m);
    const std::array<mat2, 4> s = {pauli_i(), pauli_x(), pauli_y(), pauli_z()};
    mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double pij = cp.p[i][j];
            if (pij == 0.0) continue;
            const mat4 sij = kron(s[i], s[j]);
            out += pij * (sij * rho_in * sij);
        }
    return out;
}

// Closed-form output matrix. With Qd, Qf, SR the thermal weights and
// c2 = cos^2(theta/2), s2 = sin^2(theta/2):
//   rho11 = Qd^2 c2 sin^2 r + Qd Qf (c2 cos^2 r + s2)
//   rho22 = Qd^2 c2 cos^2 r + Qd Qf c2 sin^2 r + Qf^2 s2
//   rho33 = Qd^2 s2 + Qd Qf c2 sin^2 r + Qf^2 c2 cos^2 r
//   rho44 = Qf^2 c2 sin^2 r + Qd Qf (s2 + c2 cos^2 r)
//   rho23 = (1/2) sin(theta) cos(r) e^{-i phi} cos^2(alpha) SR^2
// X-shaped with exact zeros elsewhere.
inline mat4 output_density_closed(const model_params& m, const input_params& p) {
    const thermal_weights w = weights(m);
    const double ca = std::cos(m.alpha());
    const double c2 = std::cos(p.theta / 2) * std::cos(p.theta / 2);
    const double s2 = std::sin(p.theta / 2) * std::sin(p.theta / 2);
    const double cr2 = std::cos(p.r) * std::cos(p.r);
    const double sr2 = std::sin(p.r) * std::sin(p.r);
    const double dd = w.Qd * w.Qd, ff = w.Qf * w.Qf, df = w.Qd * w.Qf;
    mat4 rho;
    rho(0, 0) = dd * c2 * sr2 + df * (c2 * cr2 + s2);
    rho(1, 1) = dd * c2 * cr2 + df * c2 * sr2 + ff * s2;
    rho(2, 2) = dd * s2 + df * c2 * sr2 + ff * c2 * cr2;
    rho(3, 3) = ff * c2 * sr2 + df * (s2 + c2 * cr2);
    rho(1, 2) = 0.5 * std::sin(p.theta) * std::cos(p.r) *
                std::exp(cplx(0, -p.phi)) * (ca * ca) * (w.SR * w.SR);
    rho(2, 1) = std::conj(rho(1, 2));
    return rho;
}

// C_out = max(cos^2(alpha) cos(r) sin(theta) SR^2 - 2 sqrt(rho11 rho44), 0).
inline double output_concurrence(const model_params& m, const input_params& p) {
    const thermal_weights w = weights(m);
    const double ca = std::cos(m.alpha());
    const double c2 = std::cos(p.theta / 2) * std::cos(p.theta / 2);
    const double s2 = std::sin(p.theta / 2) * std::sin(p.theta / 2);
    const double cr2 = std::cos(p.r) * std::cos(p.r);
    const double sr2 = std::sin(p.r) * std::sin(p.r);
    const double dd = w.Qd * w.Qd, ff = w.Qf * w.Qf, df = w.Qd * w.Qf;
    const double r11 = dd * c2 * sr2 + df * (c2 * cr2 + s2);
    const double r44 = ff * c2 * sr2 + df * (s2 + c2 * cr2);
    const double cross = ca * ca * std::cos(p.r) * std::sin(p.theta) * (w.SR * w.SR);
    return std::max(cross - 2 * std::sqrt(r11 * r44), 0.0);
}

}  // namespace qtele
