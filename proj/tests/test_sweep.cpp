#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <numbers>
#include <sstream>

#include <qtele/sweep.hpp>

using namespace qtele;
using Catch::Matchers::ContainsSubstring;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("axis endpoints are reproduced exactly") {
    const axis_spec ax{"T", 0.01, 2.0, 51};
    CHECK(ax.at(0) == 0.01);
    CHECK(ax.at(50) == 2.0);
    for (int i = 1; i < 51; ++i) CHECK(ax.at(i) > ax.at(i - 1));
}

TEST_CASE("sweep validation rejects malformed requests") {
    sweep_spec good;
    good.quantity = "cout";
    good.x = {"theta", 0, pi, 11};
    good.y = {"r", 0, pi / 4, 11};
    CHECK_NOTHROW(validate_spec(good));

    sweep_spec s = good;
    s.quantity = "entropy";
    CHECK_THROWS_AS(validate_spec(s), ParamError);
    CHECK_THROWS_WITH(validate_spec(s), ContainsSubstring("entropy"));

    s = good;
    s.x.name = "Q";
    CHECK_THROWS_AS(validate_spec(s), ParamError);

    s = good;
    s.y.name = "theta";
    CHECK_THROWS_WITH(validate_spec(s), ContainsSubstring("theta"));

    s = good;
    s.x.count = 1;
    CHECK_THROWS_AS(validate_spec(s), ParamError);
    s.x.count = 2002;
    CHECK_THROWS_AS(validate_spec(s), ParamError);

    s = good;
    s.x.lo = 2;
    s.x.hi = 1;
    CHECK_THROWS_AS(validate_spec(s), ParamError);

    s = good;
    s.y.hi = 1.0;  // r above pi/4
    CHECK_THROWS_WITH(validate_spec(s), ContainsSubstring("r must be"));

    s = good;
    s.fixed.T = -1;
    CHECK_THROWS_WITH(validate_spec(s), ContainsSubstring("T must be"));
}

TEST_CASE("figure presets pin the documented scene parameters") {
    struct row {
        const char* id;
        const char* quantity;
        const char* x;
        const char* y;
        double J, D, T;
    };
    const row table[] = {
        {"fig1", "cin", "theta", "r", 1, 0, 0.1},
        {"fig2", "cout", "theta", "r", 1, 0, 0.1},
        {"fig3", "cout", "T", "r", 1, 0, 0.1},
        {"fig4", "cout", "r", "D", -1, 0, 0.1},
        {"fig5", "fa", "r", "T", 1, 0, 0.1},
        {"fig6", "fa", "r", "D", 1, 0, 0.1},
        {"fig7", "fa", "r", "D", -1, 0, 0.1},
    };
    for (const row& t : table) {
        CAPTURE(t.id);
        const sweep_spec s = figure_preset(t.id, 51);
        CHECK(s.quantity == t.quantity);
        CHECK(s.x.name == t.x);
        CHECK(s.y.name == t.y);
        CHECK(s.x.count == 51);
        CHECK(s.fixed.J == t.J);
        CHECK(s.fixed.D == t.D);
        CHECK(s.fixed.T == t.T);
        CHECK_NOTHROW(validate_spec(s));
    }
    CHECK(figure_preset("fig2", 51).fixed.theta == pi / 4);
    CHECK(figure_preset("fig3", 51).fixed.theta == pi / 4);
    CHECK(figure_preset("fig3", 51).x.lo == 0.01);
    CHECK(figure_preset("fig3", 51).x.hi == 2.0);
    CHECK(figure_preset("fig4", 51).y.hi == 5.0);
    CHECK(figure_preset("fig5", 51).x.hi == pi / 4);
    CHECK_THROWS_AS(figure_preset("fig8", 51), ParamError);
}

TEST_CASE("quantity dispatch matches direct library calls") {
    fixed_params v;
    v.J = -1;
    v.D = 1.5;
    v.T = 0.3;
    v.theta = 1.1;
    v.phi = 0.4;
    v.r = 0.25;
    const model_params m(v.J, v.D, v.T);
    const input_params p(v.theta, v.phi, v.r);
    CHECK(eval_quantity("cin", v) == input_concurrence(p));
    CHECK(eval_quantity("cout", v) == output_concurrence(m, p));
    CHECK(eval_quantity("fidelity", v) == teleport_fidelity(m, p));
    CHECK(eval_quantity("fa", v) == average_fidelity_closed(m, v.r));
    CHECK(eval_quantity("fa1", v) == average_fidelity_inertial(m));
    CHECK_THROWS_AS(eval_quantity("entropy", v), ParamError);
}

TEST_CASE("sweep serialization is byte-stable and matches the row contract") {
    sweep_spec s;
    s.quantity = "cin";
    s.x = {"theta", 0, 1.5, 3};
    s.y = {"r", 0, 0.5, 2};
    s.fixed.phi = 0.25;

    std::ostringstream first, second;
    write_sweep_csv(s, first);
    write_sweep_csv(s, second);
    CHECK(first.str() == second.str());

    std::string expected = "# qtele cin phi=0.25\nx,y,value\n";
    char buf[128];
    for (double r : {0.0, 0.5})
        for (double theta : {0.0, 0.75, 1.5}) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", theta, r,
                          std::sin(theta) * std::cos(r));
            expected += buf;
        }
    CHECK(first.str() == expected);
}

TEST_CASE("sweep header lists only parameters the quantity reads") {
    sweep_spec s;
    s.quantity = "cin";
    s.x = {"theta", 0, pi, 2};
    s.y = {"r", 0, 0.1, 2};
    std::ostringstream os;
    write_sweep_csv(s, os);
    const std::string header = os.str().substr(0, os.str().find('\n'));
    CHECK(header == "# qtele cin phi=0");

    sweep_spec f;
    f.quantity = "fa";
    f.x = {"r", 0, pi / 4, 2};
    f.y = {"T", 0.01, 2, 2};
    f.fixed.J = -1;
    std::ostringstream fs;
    write_sweep_csv(f, fs);
    const std::string fh = fs.str().substr(0, fs.str().find('\n'));
    CHECK(fh == "# qtele fa J=-1 D=0");
}
