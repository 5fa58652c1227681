#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include <qtele/validate.hpp>

using namespace qtele;

namespace {

std::string line_of(const std::string& text, const std::string& key) {
    const std::size_t pos = text.find(key);
    if (pos == std::string::npos) return {};
    const std::size_t end = text.find('\n', pos);
    return text.substr(pos, end - pos);
}

}  // namespace

TEST_CASE("battery flags deliberately broken closed forms") {
    battery_hooks hooks;
    hooks.thermal_closed = [](const model_params& m) {
        mat4 rho = thermal_state(m);
        rho(0, 0) += 1e-6;
        return rho;
    };
    hooks.output_closed = [](const model_params& m, const input_params& p) {
        mat4 rho = output_density_closed(m, p);
        rho(1, 1) += 1e-8;  // diagonal bump keeps the state PSD
        return rho;
    };
    hooks.fa_closed = [](const model_params& m, double r) {
        return average_fidelity_closed(m, r) + 1e-4;
    };

    std::ostringstream os;
    const int rc = run_battery(os, hooks, quadrature_spec(16, 16));
    const std::string out = os.str();

    CHECK(rc == 1);
    CHECK(line_of(out, "gibbs-oracle").find("FAIL") != std::string::npos);
    CHECK(line_of(out, "channel-oracle").find("FAIL") != std::string::npos);
    CHECK(line_of(out, "fa-inertial-reduction").find("FAIL") != std::string::npos);
    CHECK(line_of(out, "fa-limit-depolarizing").find("FAIL") != std::string::npos);

    CHECK(line_of(out, "spectrum-residual").find("PASS") != std::string::npos);
    CHECK(line_of(out, "input-reduction").find("PASS") != std::string::npos);
    CHECK(out.find("quadrature authoritative") != std::string::npos);
    CHECK(out.find("overall FAIL") != std::string::npos);
}
