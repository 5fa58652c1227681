#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "matrix.hpp"

namespace qtele {

// Input-state parameters: the Bloch angles of the state to teleport and the
// acceleration parameter r of the observer's Rindler wedge.
struct input_params {
    double theta = 0.0;
    double phi = 0.0;
    double r = 0.0;

    input_params() = default;
    input_params(double theta_, double phi_, double r_)
        : theta(theta_), phi(phi_), r(r_) {
        if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(r))
            throw ParamError("input parameters must be finite");
        if (theta < 0 || theta > std::numbers::pi)
            throw ParamError("theta must be in [0, pi], got " + std::to_string(theta));
        if (phi < 0 || phi > 2 * std::numbers::pi)
            throw ParamError("phi must be in [0, 2*pi], got " + std::to_string(phi));
        if (r < 0 || r > std::numbers::pi / 4)
            throw ParamError("r must be in [0, pi/4], got " + std::to_string(r));
    }
};

// cos r = (e^{-2 pi omega c / a} + 1)^{-1/2}; r runs from 0 (no acceleration)
// to pi/4 (infinite acceleration).
inline double r_from_acceleration(double omega, double a, double c) {
    if (!(omega > 0)) throw ParamError("omega must be > 0");
    if (!(a > 0)) throw ParamError("a must be > 0");
    if (!(c > 0)) throw ParamError("c must be > 0");
    const double e = std::exp(-2 * std::numbers::pi * omega * c / a);
    return std::acos(1.0 / std::sqrt(e + 1.0));
}

// Three-mode pure state over (partner qubit, region-I mode, region-II mode):
// cos(t/2)|1>(cos r|0>|0> + sin r|1>|1>) + e^{i phi} sin(t/2)|0>|1>|0>.
// Component index is 4*i1 + 2*i2 + i3 with single-mode index 0 meaning |1>.
inline vec8 input_state(const input_params& p) {
    vec8 v;
    const double ch = std::cos(p.theta / 2), sh = std::sin(p.theta / 2);
    v[3] = ch * std::cos(p.r);                     // |1>|0>|0>
    v[0] = ch * std::sin(p.r);                     // |1>|1>|1>
    v[5] = std::exp(cplx(0, p.phi)) * sh;          // |0>|1>|0>
    return v;
}

// Reduce a three-mode pure state to the first two modes.
inline mat4 trace_out_third(const vec8& v) {
    mat4 rho;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    cplx acc = 0;
                    for (int k = 0; k < 2; ++k)
                        acc += v[4 * a + 2 * b + k] * std::conj(v[4 * c + 2 * d + k]);
                    rho(2 * a + b, 2 * c + d) = acc;
                }
    return rho;
}

// Reduced two-qubit input density matrix in closed form; X-shaped with exact
// zeros off the pattern.
inline mat4 input_density(const input_params& p) {
    const double c2 = std::cos(p.theta / 2) * std::cos(p.theta / 2);
    const double s2 = std::sin(p.theta / 2) * std::sin(p.theta / 2);
    const double cr = std::cos(p.r), sr = std::sin(p.r);
    mat4 rho;
    rho(0, 0) = c2 * sr * sr;
    rho(1, 1) = c2 * cr * cr;
    rho(2, 2) = s2;
    rho(1, 2) = 0.5 * std::sin(p.theta) * cr * std::exp(cplx(0, -p.phi));
    rho(2, 1) = std::conj(rho(1, 2));
    return rho;
}

// C_in = sin(theta) cos(r).
inline double input_concurrence(const input_params& p) {
    return std::sin(p.theta) * std::cos(p.r);
}

}  // namespace qtele
