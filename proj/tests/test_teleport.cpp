#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include <qtele/teleport.hpp>
#include <qtele/measures.hpp>

#include "helpers.hpp"

using namespace qtele;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("measurement projectors form an orthogonal rank-one resolution") {
    const std::array<mat4, 4> b = bell_projectors();
    mat4 sum = mat4::zero();
    for (int i = 0; i < 4; ++i) {
        CHECK(hermiticity_defect(b[i]) == 0.0);
        CHECK(std::abs(trace(b[i]).real() - 1.0) < 1e-15);
        CHECK(max_abs_diff(b[i] * b[i], b[i]) < 1e-15);
        sum += b[i];
        for (int j = 0; j < i; ++j) CHECK(max_abs(b[i] * b[j]) < 1e-15);
    }
    CHECK(max_abs_diff(sum, mat4::identity()) < 1e-15);
}

TEST_CASE("joint measurement probabilities in physical limits") {
    const channel_probs_t hot = channel_probs({1, 0, 1e6});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(hot.p[i][j] - 1.0 / 16) < 1e-5);

    const channel_probs_t cold = channel_probs({1, 0, 0.01});
    CHECK(std::abs(cold.p[0][0] - 1.0) < 1e-6);

    for (double J : {-2.0, 1.0})
        for (double D : {0.0, 2.0})
            for (double T : {0.05, 1.0}) {
                const channel_probs_t c = channel_probs({J, D, T});
                double total = 0;
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) total += c.p[i][j];
                CHECK(std::abs(total - 1.0) < 1e-12);
            }
}

TEST_CASE("channel limits on a random input") {
    const mat4 rho = testutil::random_density<4>();
    const mat4 scrambled = apply_channel({1, 0, 1e12}, rho);
    CHECK(max_abs_diff(scrambled, 0.25 * mat4::identity()) < 1e-9);

    const input_params p(pi / 2, 0, 0);
    const mat4 kept = apply_channel({1, 0, 0.01}, input_density(p));
    CHECK(max_abs_diff(kept, input_density(p)) < 1e-6);
}

TEST_CASE("closed output entries match the explicit channel") {
    for (double J : {-2.0, -0.5, 1.0, 2.0})
        for (double D : {0.0, 0.5, 2.0})
            for (double T : {0.05, 0.1, 1.0})
                for (double theta : {0.0, pi / 4, pi / 2, pi})
                    for (double r : {0.0, 0.3, pi / 4}) {
                        const model_params m{J, D, T};
                        const input_params p(theta, 0.6, r);
                        const mat4 closed = output_density_closed(m, p);
                        const mat4 channel = apply_channel(m, input_density(p));
                        CHECK(max_abs_diff(closed, channel) < 1e-10);
                        CHECK(std::abs(trace(closed).real() - 1.0) < 1e-12);
                    }
}

TEST_CASE("output keeps the cross structure with exact zeros") {
    const model_params m{1, 0.5, 0.1};
    const input_params p(pi / 3, 0.9, 0.25);
    const mat4 closed = output_density_closed(m, p);
    const mat4 channel = apply_channel(m, input_density(p));
    for (const auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}) {
        CHECK(std::abs(closed(i, j)) == 0.0);
        CHECK(std::abs(channel(i, j)) < 1e-16);
    }
}

TEST_CASE("output concurrence properties") {
    const model_params m{1, 0, 0.1};

    SECTION("agrees with the Wootters oracle") {
        for (double theta : {pi / 6, pi / 2, 3 * pi / 4})
            for (double r : {0.0, 0.3, pi / 4}) {
                const input_params p(theta, 0.2, r);
                CHECK(std::abs(output_concurrence(m, p) -
                               wootters_concurrence(output_density_closed(m, p))) <
                      1e-10);
            }
    }

    SECTION("reflection about theta = pi/2 is only approximate for r > 0") {
        const double gap = std::abs(output_concurrence(m, {pi / 4, 0, 0.5}) -
                                    output_concurrence(m, {3 * pi / 4, 0, 0.5}));
        CHECK(gap > 0);
        CHECK(gap < 1e-4);
        CHECK(std::abs(output_concurrence(m, {pi / 4, 0, 0}) -
                       output_concurrence(m, {3 * pi / 4, 0, 0})) < 1e-15);
    }

    SECTION("never increases with acceleration") {
        double prev = 2;
        for (int k = 0; k <= 40; ++k) {
            const double c = output_concurrence(m, {pi / 4, 0, k * pi / 160});
            CHECK(c <= prev + 1e-12);
            prev = c;
        }
    }

    SECTION("antiferromagnetic coupling benefits from the interaction term") {
        const model_params base{-1, 0, 0.1}, strong{-1, 2, 0.1};
        for (double r : {0.0, 0.3, 0.6})
            CHECK(output_concurrence(strong, {pi / 4, 0, r}) >
                  output_concurrence(base, {pi / 4, 0, r}));
    }

    SECTION("never exceeds the input concurrence") {
        for (double J : {-1.0, 1.0})
            for (double T : {0.05, 0.5})
                for (double theta : {pi / 4, pi / 2})
                    for (double r : {0.0, 0.3}) {
                        const input_params p(theta, 0, r);
                        CHECK(output_concurrence({J, 0, T}, p) <=
                              input_concurrence(p) + 1e-12);
                    }
    }
}
