#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "measures.hpp"

namespace qtele {

inline constexpr std::array<const char*, 6> param_names = {"J", "D", "T",
                                                           "theta", "phi", "r"};

struct fixed_params {
    double J = 1.0;
    double D = 0.0;
    double T = 0.1;
    double theta = std::numbers::pi / 4;
    double phi = 0.0;
    double r = 0.0;
};

inline double& param_by_name(fixed_params& f, std::string_view n) {
    if (n == "J") return f.J;
    if (n == "D") return f.D;
    if (n == "T") return f.T;
    if (n == "theta") return f.theta;
    if (n == "phi") return f.phi;
    if (n == "r") return f.r;
    throw ParamError("unknown parameter: " + std::string(n));
}

inline double param_by_name(const fixed_params& f, std::string_view n) {
    return param_by_name(const_cast<fixed_params&>(f), n);
}

// Per-parameter domain; the message names the offending parameter so the CLI
// can surface it verbatim.
inline void check_domain(std::string_view name, double v) {
    const std::string label(name);
    if (!std::isfinite(v)) throw ParamError(label + " must be finite");
    if (name == "T" && !(v > 0))
        throw ParamError("T must be > 0, got " + std::to_string(v));
    if (name == "theta" && (v < 0 || v > std::numbers::pi))
        throw ParamError("theta must be in [0, pi], got " + std::to_string(v));
    if (name == "phi" && (v < 0 || v > 2 * std::numbers::pi))
        throw ParamError("phi must be in [0, 2*pi], got " + std::to_string(v));
    if (name == "r" && (v < 0 || v > std::numbers::pi / 4))
        throw ParamError("r must be in [0, pi/4], got " + std::to_string(v));
}

struct axis_spec {
    std::string name;
    double lo = 0, hi = 1;
    int count = 2;

    double at(int i) const {
        if (i <= 0) return lo;
        if (i >= count - 1) return hi;
        return lo + (hi - lo) * (double(i) / (count - 1));
    }
};

struct sweep_spec {
    std::string quantity;  // cin, cout, fidelity, fa, fa1
    axis_spec x, y;
    fixed_params fixed;
};

inline const std::vector<std::string>& quantity_names() {
    static const std::vector<std::string> q = {"cin", "cout", "fidelity", "fa", "fa1"};
    return q;
}

// Parameters a quantity actually reads; everything else is omitted from the
// CSV header.
inline std::vector<std::string> consumed_params(const std::string& q) {
    if (q == "cin") return {"theta", "phi", "r"};
    if (q == "fa") return {"J", "D", "T", "r"};
    if (q == "fa1") return {"J", "D", "T"};
    return {"J", "D", "T", "theta", "phi", "r"};
}

inline double eval_quantity(const std::string& q, const fixed_params& v) {
    if (q == "cin") return input_concurrence(input_params(v.theta, v.phi, v.r));
    const model_params m(v.J, v.D, v.T);
    if (q == "fa1") return average_fidelity_inertial(m);
    if (q == "fa") {
        check_domain("r", v.r);
        return average_fidelity_closed(m, v.r);
    }
    const input_params p(v.theta, v.phi, v.r);
    if (q == "cout") return output_concurrence(m, p);
    if (q == "fidelity") return teleport_fidelity(m, p);
    throw ParamError("unknown quantity: " + q);
}

inline void validate_spec(const sweep_spec& s) {
    bool known = false;
    for (const std::string& q : quantity_names()) known = known || q == s.quantity;
    if (!known) throw ParamError("unknown quantity: " + s.quantity);
    for (const axis_spec* ax : {&s.x, &s.y}) {
        param_by_name(s.fixed, ax->name);  // name check
        if (ax->count < 2 || ax->count > 2001)
            throw ParamError("axis count must be in [2, 2001], got " +
                             std::to_string(ax->count));
        if (!(ax->lo <= ax->hi))
            throw ParamError("axis " + ax->name + " has lo > hi");
        check_domain(ax->name, ax->lo);
        check_domain(ax->name, ax->hi);
    }
    if (s.x.name == s.y.name)
        throw ParamError("x and y axes must differ, both are " + s.x.name);
    for (const char* name : param_names) {
        if (name == s.x.name || name == s.y.name) continue;
        check_domain(name, param_by_name(s.fixed, name));
    }
}

// Preset sweeps behind the seven reference surfaces. Axis ranges not fixed by
// the source figures are documented choices: r in [0, pi/4], T in [0.01, 2],
// theta in [0, pi], D in [0, 5].
inline sweep_spec figure_preset(const std::string& id, int grid) {
    const double pi = std::numbers::pi;
    sweep_spec s;
    s.x.count = s.y.count = grid;
    auto axis = [&](axis_spec& ax, const char* name, double lo, double hi) {
        ax.name = name;
        ax.lo = lo;
        ax.hi = hi;
    };
    if (id == "fig1") {
        s.quantity = "cin";
        axis(s.x, "theta", 0, pi);
        axis(s.y, "r", 0, pi / 4);
    } else if (id == "fig2") {
        s.quantity = "cout";
        axis(s.x, "theta", 0, pi);
        axis(s.y, "r", 0, pi / 4);
        s.fixed.J = 1;
        s.fixed.D = 0;
        s.fixed.T = 0.1;
    } else if (id == "fig3") {
        s.quantity = "cout";
        axis(s.x, "T", 0.01, 2);
        axis(s.y, "r", 0, pi / 4);
        s.fixed.J = 1;
        s.fixed.D = 0;
        s.fixed.theta = pi / 4;
    } else if (id == "fig4") {
        s.quantity = "cout";
        axis(s.x, "r", 0, pi / 4);
        axis(s.y, "D", 0, 5);
        s.fixed.J = -1;
        s.fixed.T = 0.1;
        s.fixed.theta = pi / 4;
    } else if (id == "fig5") {
        s.quantity = "fa";
        axis(s.x, "r", 0, pi / 4);
        axis(s.y, "T", 0.01, 2);
        s.fixed.J = 1;
        s.fixed.D = 0;
    } else if (id == "fig6") {
        s.quantity = "fa";
        axis(s.x, "r", 0, pi / 4);
        axis(s.y, "D", 0, 5);
        s.fixed.J = 1;
        s.fixed.T = 0.1;
    } else if (id == "fig7") {
        s.quantity = "fa";
        axis(s.x, "r", 0, pi / 4);
        axis(s.y, "D", 0, 5);
        s.fixed.J = -1;
        s.fixed.T = 0.1;
    } else {
        throw ParamError("unknown figure: " + id);
    }
    return s;
}

inline std::string format_g(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

// CSV contract: one comment header naming the quantity and the consumed fixed
// parameters, an x,y,value column header, then rows with y as the slow index
// and 17-significant-digit floats. Serial evaluation in row order makes the
// bytes reproducible.
inline void write_sweep_csv(const sweep_spec& s, std::ostream& os) {
    validate_spec(s);
    os << "# qtele " << s.quantity;
    for (const char* name : param_names) {
        if (name == s.x.name || name == s.y.name) continue;
        bool used = false;
        for (const std::string& c : consumed_params(s.quantity)) used = used || c == name;
        if (used)
            os << ' ' << name << '=' << format_g(param_by_name(s.fixed, name), 12);
    }
    os << "\nx,y,value\n";
    for (int j = 0; j < s.y.count; ++j)
        for (int i = 0; i < s.x.count; ++i) {
            fixed_params v = s.fixed;
            param_by_name(v, s.x.name) = s.x.at(i);
            param_by_name(v, s.y.name) = s.y.at(j);
            os << format_g(s.x.at(i), 17) << ',' << format_g(s.y.at(j), 17) << ','
               << format_g(eval_quantity(s.quantity, v), 17) << '\n';
        }
}

}  // namespace qtele
