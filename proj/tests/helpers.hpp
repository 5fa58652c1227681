#pragma once

#include <random>

#include <qtele/eig.hpp>
#include <qtele/matrix.hpp>

namespace testutil {

using qtele::cplx;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240917);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

template <int N>
qtele::cmat<N> random_matrix() {
    qtele::cmat<N> m;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m(i, j) = cplx(uniform(-1, 1), uniform(-1, 1));
    return m;
}

template <int N>
qtele::cmat<N> random_hermitian() {
    const qtele::cmat<N> m = random_matrix<N>();
    return qtele::hermitize(m);
}

template <int N>
qtele::cmat<N> random_density() {
    const qtele::cmat<N> m = random_matrix<N>();
    qtele::cmat<N> rho = m * qtele::adjoint(m);
    return (1.0 / qtele::trace(rho).real()) * rho;
}

// Unitary from the spectral decomposition of a random Hermitian, exp(i H).
template <int N>
qtele::cmat<N> random_unitary() {
    const qtele::hermitian_eig_result<N> e = qtele::hermitian_eig(random_hermitian<N>());
    qtele::cmat<N> u;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            cplx acc = 0;
            for (int k = 0; k < N; ++k)
                acc += std::exp(cplx(0, e.values[k])) * e.vectors(i, k) *
                       std::conj(e.vectors(j, k));
            u(i, j) = acc;
        }
    return u;
}

}  // namespace testutil
