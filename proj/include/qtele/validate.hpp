#pragma once

#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "measures.hpp"
#include "sweep.hpp"

namespace qtele {

// Override points for the closed forms under test; the negative-control tests
// inject perturbed versions here and expect the battery to fail.
struct battery_hooks {
    std::function<mat4(const model_params&)> thermal_closed;
    std::function<mat4(const model_params&, const input_params&)> output_closed;
    std::function<double(const model_params&, double)> fa_closed;
};

namespace detail {

struct worst_point {
    double dev = 0;
    std::string where = "-";
    void update(double d, const std::string& w) {
        if (d > dev) {
            dev = d;
            where = w;
        }
    }
};

inline std::string where_jdt(const model_params& m) {
    return "J=" + format_g(m.J, 6) + " D=" + format_g(m.D, 6) +
           " T=" + format_g(m.T, 6);
}

inline std::string where_angles(const input_params& p) {
    return "theta=" + format_g(p.theta, 6) + " phi=" + format_g(p.phi, 6) +
           " r=" + format_g(p.r, 6);
}

struct battery_report {
    std::ostream& os;
    int failures = 0;
    int checks = 0;

    void row(const std::string& name, const worst_point& w, double tol) {
        ++checks;
        const bool ok = w.dev <= tol;
        if (!ok) ++failures;
        os << std::left << std::setw(26) << name << "max " << std::setw(12)
           << format_g(w.dev, 3) << " at " << std::setw(42) << w.where << " tol "
           << std::setw(8) << format_g(tol, 3) << (ok ? "PASS" : "FAIL") << '\n';
    }
    void info(const std::string& name, const worst_point& w, const std::string& note) {
        os << std::left << std::setw(26) << name << "max " << std::setw(12)
           << format_g(w.dev, 3) << " at " << std::setw(42) << w.where << ' ' << note
           << '\n';
    }
};

}  // namespace detail

// Oracle cross-check battery: every closed form in the library against an
// independent numerical route, plus the limit cases that are analytically
// forced. Returns 0 when every toleranced check passes, 1 otherwise.
inline int run_battery(std::ostream& os, const battery_hooks& hooks = {},
                       const quadrature_spec& qs = {}) {
    using detail::worst_point;
    const double pi = std::numbers::pi;
    const std::vector<double> Js = {-2, -1, -0.5, 0.5, 1, 2};
    const std::vector<double> Ds = {0, 0.5, 1, 2, 4};
    const std::vector<double> Ts = {0.05, 0.1, 0.5, 1, 5, 100};
    const std::vector<double> thetas = {0, pi / 6, pi / 4, pi / 2, 3 * pi / 4, pi};
    const std::vector<double> phis = {0, pi / 3, pi};
    const std::vector<double> rs = {0, 0.2, 0.5, pi / 4};

    const auto thermal_closed = [&](const model_params& m) {
        return hooks.thermal_closed ? hooks.thermal_closed(m) : thermal_state(m);
    };
    const auto output_closed = [&](const model_params& m, const input_params& p) {
        return hooks.output_closed ? hooks.output_closed(m, p)
                                   : output_density_closed(m, p);
    };
    const auto fa_closed = [&](const model_params& m, double r) {
        return hooks.fa_closed ? hooks.fa_closed(m, r)
                               : average_fidelity_closed(m, r);
    };

    detail::battery_report rep{os};
    os << "qtele validate\n";

    worst_point w_gibbs, w_z, w_spec;
    for (double J : Js)
        for (double D : Ds)
            for (double T : Ts) {
                const model_params m(J, D, T);
                const std::string at = detail::where_jdt(m);
                const mat4 H = hamiltonian(m);
                const double emin = hermitian_eig(H).values[0];
                mat4 shifted = H;
                for (int i = 0; i < 4; ++i) shifted(i, i) -= emin;
                const mat4 expm = matrix_exp_hermitian((-m.beta()) * shifted);
                const double tr = trace(expm).real();
                const mat4 oracle = (1.0 / tr) * expm;
                w_gibbs.update(max_abs_diff(thermal_closed(m), oracle), at);
                const double zc = m.partition();
                const double zo = tr * std::exp(-m.beta() * emin);
                if (std::isfinite(zc) && std::isfinite(zo))
                    w_z.update(std::abs(zc - zo) / zo, at);
                const eigensystem es = spectrum(m);
                for (int k = 0; k < 4; ++k) {
                    const vec4 hv = H * es.states[k];
                    for (int i = 0; i < 4; ++i)
                        w_spec.update(
                            std::abs(hv[i] - es.energies[k] * es.states[k][i]), at);
                }
            }
    rep.row("gibbs-oracle", w_gibbs, 1e-10);
    rep.row("partition-function", w_z, 1e-10);
    rep.row("spectrum-residual", w_spec, 1e-12);

    worst_point w_red, w_cin;
    for (double theta : thetas)
        for (double phi : phis)
            for (double r : rs) {
                const input_params p(theta, phi, r);
                const std::string at = detail::where_angles(p);
                const vec8 psi = input_state(p);
                mat4 red = trace_out_third(psi);
                w_red.update(max_abs_diff(red, input_density(p)), at);
                w_cin.update(std::abs(wootters_concurrence(input_density(p)) -
                                      std::sin(theta) * std::cos(r)),
                             at);
            }
    rep.row("input-reduction", w_red, 1e-12);
    rep.row("input-concurrence", w_cin, 1e-10);

    worst_point w_chan, w_three;
    for (double J : Js)
        for (double D : Ds)
            for (double T : Ts) {
                const model_params m(J, D, T);
                for (double theta : thetas)
                    for (double phi : phis)
                        for (double r : rs) {
                            const input_params p(theta, phi, r);
                            const std::string at =
                                detail::where_jdt(m) + " " + detail::where_angles(p);
                            const mat4 closed = output_closed(m, p);
                            const mat4 prop = apply_channel(m, input_density(p));
                            w_chan.update(max_abs_diff(closed, prop), at);
                            const double c_formula = output_concurrence(m, p);
                            const double c_x =
                                2 * std::max(0.0, std::abs(closed(1, 2)) -
                                                      std::sqrt(closed(0, 0).real() *
                                                                closed(3, 3).real()));
                            const double c_w = wootters_concurrence(closed);
                            const double d = std::max(
                                {std::abs(c_formula - c_x), std::abs(c_formula - c_w),
                                 std::abs(c_x - c_w)});
                            w_three.update(d, at);
                        }
            }
    rep.row("channel-oracle", w_chan, 1e-10);
    rep.row("concurrence-three-way", w_three, 1e-10);

    worst_point w_r0;
    for (double J : Js)
        for (double D : Ds)
            for (double T : Ts) {
                const model_params m(J, D, T);
                w_r0.update(std::abs(fa_closed(m, 0.0) - average_fidelity_inertial(m)),
                            detail::where_jdt(m));
            }
    rep.row("fa-inertial-reduction", w_r0, 1e-12);

    worst_point w_dep, w_pure;
    w_dep.update(std::abs(fa_closed(model_params(1, 0, 1e6), 0.0) - 0.25),
                 "J=1 D=0 T=1e+06 r=0");
    rep.row("fa-limit-depolarizing", w_dep, 1e-5);
    w_pure.update(std::abs(fa_closed(model_params(1, 0, 0.01), 0.0) - 1.0),
                  "J=1 D=0 T=0.01 r=0");
    rep.row("fa-limit-pure", w_pure, 1e-6);

    worst_point w_quad;
    for (double J : Js)
        for (double D : Ds)
            for (double T : Ts) {
                const model_params m(J, D, T);
                for (double r : rs) {
                    const double dev = std::abs(
                        fa_closed(m, r) - average_fidelity_quadrature(m, r, qs));
                    w_quad.update(dev,
                                  detail::where_jdt(m) + " r=" + format_g(r, 6));
                }
            }
    rep.info("fa-closed-vs-quadrature", w_quad,
             "informational (quadrature authoritative)");

    const crossing_report cr = classical_crossing(1, 0, 0.01, 2);
    ++rep.checks;
    if (cr.found) {
        os << std::left << std::setw(26) << "classical-crossing"
           << "threshold 2/3 crossed at T in [" << format_g(cr.lo, 8) << ", "
           << format_g(cr.hi, 8) << "] for J=1 D=0"
           << "  PASS\n";
    } else {
        ++rep.failures;
        os << std::left << std::setw(26) << "classical-crossing"
           << "no crossing found in T range (0.01, 2] for J=1 D=0  FAIL\n";
    }

    if (rep.failures == 0)
        os << "overall PASS (" << rep.checks << " checks)\n";
    else
        os << "overall FAIL (" << rep.failures << " of " << rep.checks
           << " checks failed)\n";
    return rep.failures == 0 ? 0 : 1;
}

}  // namespace qtele
