#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eig.hpp"
#include "matrix.hpp"
#include "quadrature.hpp"
#include "rindler.hpp"
#include "spin_model.hpp"
#include "teleport.hpp"

namespace qtele {

// Maximum average fidelity achievable with classical communication alone.
inline constexpr double classical_threshold = 2.0 / 3.0;

// Wootters concurrence C = max(0, l1 - l2 - l3 - l4) where the l_i are the
// descending square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
// Computed as the singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)):
// that matrix times its adjoint is similar to the product above, and the
// one-sided SVD keeps the small l_i at absolute accuracy instead of the
// square-root-of-noise floor an eigenvalue clamp would give.
inline double wootters_concurrence(const mat4& rho) {
    const mat4 yy = kron(pauli_y(), pauli_y());
    const mat4 s = psd_sqrt(rho);
    const mat4 c = s * yy * conj(s);
    const std::array<double, 4> l = singular_values(c);
    const double v = l[0] - l[1] - l[2] - l[3];
    return std::clamp(v, 0.0, 1.0);
}

// Uhlmann fidelity F = {Tr sqrt(sqrt(a) b sqrt(a))}^2, evaluated as the
// squared trace norm of sqrt(a) sqrt(b): (sqrt(b) sqrt(a))^dag (sqrt(b)
// sqrt(a)) = sqrt(a) b sqrt(a), so the singular-value sum is the same trace.
inline double uhlmann_fidelity(const mat4& a, const mat4& b) {
    const mat4 prod = psd_sqrt(a) * psd_sqrt(b);
    const std::array<double, 4> sv = singular_values(prod);
    double t = 0;
    for (double x : sv) t += x;
    return std::clamp(t * t, 0.0, 1.0);
}

inline double teleport_fidelity(const model_params& m, const input_params& p) {
    return uhlmann_fidelity(input_density(p), output_density_closed(m, p));
}

struct quadrature_spec {
    int n_theta = 64;
    int n_phi = 64;

    quadrature_spec() = default;
    quadrature_spec(int n_theta_, int n_phi_) : n_theta(n_theta_), n_phi(n_phi_) {
        if (n_theta < 16 || n_phi < 16)
            throw ParamError("quadrature node counts must be >= 16");
    }
};

// Average of the Uhlmann teleportation fidelity over the input Bloch sphere,
// (1/4pi) int F sin(theta) dtheta dphi: Gauss-Legendre in theta with the
// sin(theta) weight folded into the integrand, uniform nodes in phi (the
// integrand is smooth and 2pi-periodic, so these converge spectrally).
// Serial fixed-order compensated summation keeps the result bit-stable.
inline double average_fidelity_quadrature(const model_params& m, double r,
                                          const quadrature_spec& q = {}) {
    const gl_rule gt = gauss_legendre(q.n_theta, 0.0, std::numbers::pi);
    const double wphi = 2 * std::numbers::pi / q.n_phi;
    kahan_sum acc;
    for (int i = 0; i < q.n_theta; ++i) {
        const double theta = gt.x[i];
        for (int j = 0; j < q.n_phi; ++j) {
            const double phi = wphi * j;
            const input_params p(theta, phi, r);
            acc.add(gt.w[i] * wphi * std::sin(theta) * teleport_fidelity(m, p));
        }
    }
    return acc.value() / (4 * std::numbers::pi);
}

// The paper's non-inertial closed form, regrouped through the thermal
// weights: with R2 = Qd^2 + SR^2, R0 = Qd^2 - SR^2,
//   F_A = [ (15 + 11 D^2 + 4(2 + D^2) cos 2r) R2
//         + (7 + 11 D^2 + 4 D^2 cos 2r) R0
//         + 2 (1 + D^2) cos 4r Qd^2
//         + 8 (1 + D^2) (2 + cos 2r) sin^2 r Qd Qf
//         + 16 (1 + D^2) cos^2 r Qf^2 ] / (48 (1 + D^2)).
// Identical term by term to the published expression (R2 and R0 absorb
// e^{2bJ} cosh(b delta) and e^{2bJ} over the squared partition factor) but
// finite at beta up to ~1e3 where the literal exponentials overflow.
inline double average_fidelity_closed(const model_params& m, double r) {
    if (!(r >= 0 && r <= std::numbers::pi / 4))
        throw ParamError("r must be in [0, pi/4], got " + std::to_string(r));
    const thermal_weights w = weights(m);
    const double D2 = m.D * m.D;
    const double c2r = std::cos(2 * r), c4r = std::cos(4 * r);
    const double s2 = std::sin(r) * std::sin(r), c2 = std::cos(r) * std::cos(r);
    const double R2 = w.Qd * w.Qd + w.SR * w.SR;
    const double R0 = w.Qd * w.Qd - w.SR * w.SR;
    const double num = (15 + 11 * D2 + 4 * (2 + D2) * c2r) * R2 +
                       (7 + 11 * D2 + 4 * D2 * c2r) * R0 +
                       2 * (1 + D2) * c4r * (w.Qd * w.Qd) +
                       8 * (1 + D2) * (2 + c2r) * s2 * (w.Qd * w.Qf) +
                       16 * (1 + D2) * c2 * (w.Qf * w.Qf);
    return num / (48 * (1 + D2));
}

// Inertial closed form, same weight grouping:
//   F_A1 = [ (3 + 2 D^2) R2 + (1 + 2 D^2) R0 + 2 (1 + D^2) Qf^2 ]
//          / (6 (1 + D^2)).
inline double average_fidelity_inertial(const model_params& m) {
    const thermal_weights w = weights(m);
    const double D2 = m.D * m.D;
    const double R2 = w.Qd * w.Qd + w.SR * w.SR;
    const double R0 = w.Qd * w.Qd - w.SR * w.SR;
    return ((3 + 2 * D2) * R2 + (1 + 2 * D2) * R0 + 2 * (1 + D2) * (w.Qf * w.Qf)) /
           (6 * (1 + D2));
}

// Temperature at which the inertial average fidelity crosses the classical
// threshold 2/3, bracketed to the requested width by bisection. A coarse scan
// first locates a sign change inside [t_lo, t_hi].
struct crossing_report {
    bool found = false;
    double lo = 0, hi = 0;
};

inline crossing_report classical_crossing(double J, double D, double t_lo,
                                          double t_hi, double width = 1e-6) {
    const auto g = [&](double T) {
        return average_fidelity_inertial(model_params(J, D, T)) - classical_threshold;
    };
    crossing_report rep;
    const int scan = 64;
    double a = t_lo, ga = g(a);
    for (int k = 1; k <= scan; ++k) {
        const double b = t_lo + (t_hi - t_lo) * (double(k) / scan);
        const double gb = g(b);
        if ((ga <= 0) != (gb <= 0)) {
            rep.found = true;
            double lo = a, hi = b;
            while (hi - lo > width) {
                const double mid = (lo + hi) / 2;
                if ((g(mid) <= 0) == (ga <= 0))
                    lo = mid;
                else
                    hi = mid;
            }
            rep.lo = lo;
            rep.hi = hi;
            return rep;
        }
        a = b;
        ga = gb;
    }
    return rep;
}

}  // namespace qtele
