#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace qtele {

// Compensated accumulator; keeps quadrature sums independent of magnitude
// ordering at machine precision.
struct kahan_sum {
    double s = 0, c = 0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

// Gauss-Legendre rule on [-1, 1]: Newton iteration on P_n from the three-term
// recurrence, Chebyshev-like initial guesses.
struct gl_rule {
    std::vector<double> x, w;
};

inline gl_rule gauss_legendre(int n) {
    if (n < 1) throw ParamError("node count must be >= 1, got " + std::to_string(n));
    gl_rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int k = 0; k < n; ++k) {
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[k] = x;
        r.w[k] = 2.0 / ((1 - x * x) * dp * dp);
    }
    return r;
}

// The same rule mapped to [a, b].
inline gl_rule gauss_legendre(int n, double a, double b) {
    gl_rule r = gauss_legendre(n);
    const double mid = (a + b) / 2, half = (b - a) / 2;
    for (int k = 0; k < n; ++k) {
        r.x[k] = mid + half * r.x[k];
        r.w[k] *= half;
    }
    return r;
}

}  // namespace qtele
