#pragma once

#include <cmath>
#include <string>

#include "eig.hpp"
#include "matrix.hpp"

namespace qtele {

// Two-qubit Heisenberg XXX chain with a z-axis Dzyaloshinskii-Moriya term,
// H = J/2 [sx sx + sy sy + sz sz + D (sx sy - sy sx)], at temperature T
// (k = 1 units).
struct model_params {
    double J = 1.0;
    double D = 0.0;
    double T = 1.0;

    model_params() = default;
    model_params(double J_, double D_, double T_) : J(J_), D(D_), T(T_) {
        if (!std::isfinite(J) || !std::isfinite(D) || !std::isfinite(T))
            throw ParamError("model parameters must be finite");
        if (!(T > 0)) throw ParamError("T must be > 0, got " + std::to_string(T));
    }

    double beta() const { return 1.0 / T; }
    double delta() const { return 2.0 * J * std::sqrt(1.0 + D * D); }
    double alpha() const { return std::atan(D); }
    double partition() const {
        return 2.0 * std::exp(-beta() * J / 2) *
               (1.0 + std::exp(beta() * J) * std::cosh(beta() * delta() / 2));
    }
};

// The three weights every thermal closed form reduces to:
//   Qd = exp(bJ) cosh(b d/2) / (1 + exp(bJ) cosh(b d/2))   central diagonal
//   Qf = 1 / (1 + exp(bJ) cosh(b d/2))                     corner diagonal
//   SR = exp(bJ) sinh(b d/2) / (1 + exp(bJ) cosh(b d/2))   central off-diagonal
// Evaluated through softplus/log1p so that beta*delta up to ~3000 stays
// finite; Qd + Qf = 1 and |SR| <= Qd hold to machine precision.
struct thermal_weights {
    double Qd, Qf, SR;
};

inline thermal_weights weights(const model_params& mp) {
    const double K = mp.beta() * mp.J;
    const double L = mp.beta() * mp.delta() / 2;
    const double aL = std::abs(L);
    // a = log(exp(K) cosh(L)), b = log(exp(K) |sinh(L)|)
    const double a = K + aL - std::log(2.0) + std::log1p(std::exp(-2 * aL));
    const double sp = a > 0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a));
    thermal_weights w;
    w.Qd = 1.0 / (1.0 + std::exp(-a));
    w.Qf = std::exp(-sp);
    if (L == 0) {
        w.SR = 0.0;
    } else {
        const double b = K + aL - std::log(2.0) + std::log1p(-std::exp(-2 * aL));
        w.SR = (L > 0 ? 1.0 : -1.0) * std::exp(b - sp);
    }
    return w;
}

// H in the product basis {|11>, |10>, |01>, |00>}, built from the literal
// Pauli-Kronecker expression.
inline mat4 hamiltonian(const model_params& mp) {
    const mat4 sxsx = kron(pauli_x(), pauli_x());
    const mat4 sysy = kron(pauli_y(), pauli_y());
    const mat4 szsz = kron(pauli_z(), pauli_z());
    const mat4 dm = kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x());
    return (mp.J / 2) * (sxsx + sysy + szsz + mp.D * dm);
}

// Analytic spectrum: |00> and |11> at J/2, and (|01> +- e^{i alpha}|10>)/sqrt(2)
// at +-J sqrt(1+D^2) - J/2, i.e. +-delta/2 - J/2 with delta signed like J.
struct eigensystem {
    std::array<double, 4> energies;  // order: |00>, |11>, plus, minus
    std::array<vec4, 4> states;
};

inline eigensystem spectrum(const model_params& mp) {
    eigensystem es;
    const double half = mp.J / 2;
    const double gap = mp.delta() / 2;
    es.energies = {half, half, gap - half, -gap - half};
    const cplx phase = std::exp(cplx(0, mp.alpha()));
    const double inv = 1.0 / std::sqrt(2.0);
    es.states[0][3] = 1.0;  // |00>
    es.states[1][0] = 1.0;  // |11>
    es.states[2][2] = inv;
    es.states[2][1] = phase * inv;  // (|01> + e^{ia}|10>)/sqrt 2
    es.states[3][2] = inv;
    es.states[3][1] = -phase * inv;
    return es;
}

// Thermal state exp(-H/T)/Z in closed form. X-shaped: the zero entries are
// exact zeros, which the downstream block eigensolver relies on.
inline mat4 thermal_state(const model_params& mp) {
    const thermal_weights w = weights(mp);
    const cplx phase = std::exp(cplx(0, mp.alpha()));
    mat4 rho;
    rho(0, 0) = w.Qf / 2;
    rho(3, 3) = w.Qf / 2;
    rho(1, 1) = w.Qd / 2;
    rho(2, 2) = w.Qd / 2;
    rho(1, 2) = -phase * (w.SR / 2);
    rho(2, 1) = std::conj(rho(1, 2));
    return rho;
}

// Thermal-state concurrence, Eq-level closed form: C = max(|SR| - Qf, 0).
inline double thermal_concurrence(const model_params& mp) {
    const thermal_weights w = weights(mp);
    return std::max(std::abs(w.SR) - w.Qf, 0.0);
}

}  // namespace qtele
