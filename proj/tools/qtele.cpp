#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <qtele/qtele.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

bool is_angle(const std::string& name) {
    return name == "theta" || name == "phi" || name == "r";
}

double to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

void apply_deg(qtele::fixed_params& v) {
    v.theta = to_radians(v.theta);
    v.phi = to_radians(v.phi);
    v.r = to_radians(v.r);
}

qtele::axis_spec parse_axis(const std::string& s, bool deg) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4)
        throw qtele::ParamError("axis must be name:lo:hi:count, got " + s);
    qtele::axis_spec ax;
    ax.name = parts[0];
    try {
        size_t used = 0;
        ax.lo = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        ax.hi = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        ax.count = std::stoi(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    } catch (const std::exception&) {
        throw qtele::ParamError("bad numeric field in axis spec " + s);
    }
    if (deg && is_angle(ax.name)) {
        ax.lo = to_radians(ax.lo);
        ax.hi = to_radians(ax.hi);
    }
    return ax;
}

struct eval_cli {
    qtele::fixed_params v;
    std::string quantity;
    bool deg = false;
};

struct sweep_cli {
    qtele::fixed_params v;
    std::string quantity, figure, x, y, out;
    int grid = 101;
    bool deg = false;
    CLI::Option *opt_J = nullptr, *opt_D = nullptr, *opt_T = nullptr,
                *opt_theta = nullptr, *opt_phi = nullptr, *opt_r = nullptr,
                *opt_grid = nullptr, *opt_quantity = nullptr;
};

int run_eval(eval_cli& e) {
    if (e.deg) apply_deg(e.v);
    for (const char* name : qtele::param_names)
        qtele::check_domain(name, qtele::param_by_name(e.v, name));
    const double val = qtele::eval_quantity(e.quantity, e.v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", val);
    std::cout << buf << '\n';
    return exit_ok;
}

int run_sweep(sweep_cli& s) {
    qtele::sweep_spec spec;
    if (!s.figure.empty()) {
        if (*s.opt_quantity)
            throw qtele::ParamError("--quantity conflicts with --figure");
        if (!s.x.empty() || !s.y.empty())
            throw qtele::ParamError("--x/--y conflict with --figure");
        spec = qtele::figure_preset(s.figure, s.grid);
        if (s.deg) apply_deg(s.v);
        const std::pair<CLI::Option*, const char*> overrides[] = {
            {s.opt_J, "J"},         {s.opt_D, "D"},   {s.opt_T, "T"},
            {s.opt_theta, "theta"}, {s.opt_phi, "phi"}, {s.opt_r, "r"}};
        for (const auto& [opt, name] : overrides)
            if (*opt)
                qtele::param_by_name(spec.fixed, name) =
                    qtele::param_by_name(s.v, name);
    } else {
        if (s.x.empty() || s.y.empty())
            throw qtele::ParamError("sweep needs --figure or both --x and --y");
        if (!*s.opt_quantity)
            throw qtele::ParamError("sweep with --x/--y needs --quantity");
        if (*s.opt_grid)
            throw qtele::ParamError("--grid applies only to --figure presets");
        spec.quantity = s.quantity;
        spec.x = parse_axis(s.x, s.deg);
        spec.y = parse_axis(s.y, s.deg);
        if (s.deg) apply_deg(s.v);
        spec.fixed = s.v;
    }

    std::ostringstream body;
    qtele::write_sweep_csv(spec, body);

    if (s.out.empty()) {
        std::cout << body.str();
        if (!std::cout) return exit_io;
    } else {
        std::ofstream f(s.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << s.out << '\n';
            return exit_io;
        }
        f << body.str();
        f.close();
        if (!f) {
            std::cerr << "error: write failed for " << s.out << '\n';
            return exit_io;
        }
    }

    if (spec.quantity == "fa" || spec.quantity == "fa1") {
        const qtele::axis_spec* taxis = nullptr;
        if (spec.x.name == "T") taxis = &spec.x;
        if (spec.y.name == "T") taxis = &spec.y;
        if (taxis) {
            const qtele::crossing_report cr = qtele::classical_crossing(
                spec.fixed.J, spec.fixed.D, taxis->lo, taxis->hi);
            if (cr.found)
                std::cerr << "note: threshold 2/3 crossed at T in ["
                          << qtele::format_g(cr.lo, 8) << ", "
                          << qtele::format_g(cr.hi, 8) << "]\n";
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit thermal-state teleportation calculator"};
    app.require_subcommand(1);

    eval_cli e;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity at a point");
    eval->add_option("--J", e.v.J, "spin coupling");
    eval->add_option("--D", e.v.D, "DM interaction strength");
    eval->add_option("--T", e.v.T, "temperature");
    eval->add_option("--theta", e.v.theta, "input amplitude angle");
    eval->add_option("--phi", e.v.phi, "input phase angle");
    eval->add_option("--r", e.v.r, "acceleration parameter");
    eval->add_option("--quantity", e.quantity, "cin|cout|fidelity|fa|fa1")
        ->required()
        ->check(CLI::IsMember(qtele::quantity_names()));
    eval->add_flag("--deg", e.deg, "angles given in degrees");

    sweep_cli s;
    CLI::App* sweep = app.add_subcommand("sweep", "write a 2-D sweep as CSV");
    s.opt_J = sweep->add_option("--J", s.v.J, "spin coupling");
    s.opt_D = sweep->add_option("--D", s.v.D, "DM interaction strength");
    s.opt_T = sweep->add_option("--T", s.v.T, "temperature");
    s.opt_theta = sweep->add_option("--theta", s.v.theta, "input amplitude angle");
    s.opt_phi = sweep->add_option("--phi", s.v.phi, "input phase angle");
    s.opt_r = sweep->add_option("--r", s.v.r, "acceleration parameter");
    s.opt_quantity =
        sweep->add_option("--quantity", s.quantity, "cin|cout|fidelity|fa|fa1")
            ->check(CLI::IsMember(qtele::quantity_names()));
    sweep->add_option("--figure", s.figure, "preset surface fig1..fig7");
    s.opt_grid = sweep->add_option("--grid", s.grid, "preset grid points per axis")
                     ->check(CLI::Range(2, 2001));
    sweep->add_option("--x", s.x, "x axis as name:lo:hi:count");
    sweep->add_option("--y", s.y, "y axis as name:lo:hi:count");
    sweep->add_option("--out", s.out, "output CSV path (default stdout)");
    sweep->add_flag("--deg", s.deg, "angles given in degrees");

    int quad_theta = 64, quad_phi = 64;
    CLI::App* validate =
        app.add_subcommand("validate", "run the oracle cross-check battery");
    validate->add_option("--quad-theta", quad_theta, "theta quadrature nodes");
    validate->add_option("--quad-phi", quad_phi, "phi quadrature nodes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& h) {
        return app.exit(h);
    } catch (const CLI::ParseError& p) {
        app.exit(p);
        return exit_usage;
    }

    try {
        if (eval->parsed()) return run_eval(e);
        if (sweep->parsed()) return run_sweep(s);
        if (validate->parsed())
            return qtele::run_battery(std::cout, {},
                                      qtele::quadrature_spec(quad_theta, quad_phi));
    } catch (const qtele::ParamError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
