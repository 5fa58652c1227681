#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "matrix.hpp"

namespace qtele {

template <int N>
struct hermitian_eig_result {
    std::array<double, N> values;  // ascending
    cmat<N> vectors;               // columns are the matching eigenvectors
};

namespace detail {

constexpr double hermiticity_tol = 1e-10;
constexpr double psd_clamp = 1e-12;

// p*q - br^2 - bi^2 with fma-compensated products; keeps relative accuracy
// through the cancellation, so an exactly singular 2x2 block yields ~0
// instead of eps-scale noise.
inline double det2_herm(double p, double q, double br, double bi) {
    const double t1 = p * q, e1 = std::fma(p, q, -t1);
    const double t2 = br * br, e2 = std::fma(br, br, -t2);
    const double t3 = bi * bi, e3 = std::fma(bi, bi, -t3);
    return ((t1 - t2) - t3) + ((e1 - e2) - e3);
}

// Eigen-decomposition of the Hermitian 2x2 [[app, b], [conj(b), aqq]], b != 0.
// Eigenvalues use the trace/determinant branch without cancellation; the
// rotation gives exactly orthonormal eigenvectors.
struct herm2 {
    double lam_p, lam_q;  // pair with columns (c, -s*conj(u)) and (s*u, c)
    double c, s;
    cplx u;
};

inline herm2 solve2(double app, double aqq, cplx b) {
    herm2 r;
    const double mag = std::abs(b);
    r.u = b / mag;
    const double tau = (aqq - app) / (2 * mag);
    const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
    r.c = 1 / std::sqrt(1 + t * t);
    r.s = t * r.c;

    const double tr = app + aqq;
    const double disc = std::hypot(app - aqq, 2 * mag);
    const double det = det2_herm(app, aqq, b.real(), b.imag());
    const double big = 0.5 * (tr >= 0 ? tr + disc : tr - disc);
    const double small = (big == 0) ? 0.0 : det / big;
    // rotation convention puts lam_p = app - t*mag, so for tau >= 0 (t >= 0)
    // lam_p is the smaller eigenvalue
    if (tau >= 0) {
        r.lam_p = std::min(big, small);
        r.lam_q = std::max(big, small);
    } else {
        r.lam_p = std::max(big, small);
        r.lam_q = std::min(big, small);
    }
    return r;
}

struct union_find {
    std::array<int, 8> parent{};
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Cyclic complex Jacobi on an m x m Hermitian working copy held in a fixed
// N x N buffer (indices 0..m-1 used). Accumulates rotations into V.
template <int N>
void jacobi_sweeps(cmat<N>& A, cmat<N>& V, int m) {
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q) {
                const cplx apq = A(p, q);
                if (apq == cplx{}) continue;
                const double app = A(p, p).real(), aqq = A(q, q).real();
                const double mag = std::abs(apq);
                if (mag <= 1e-15 * std::sqrt(std::abs(app) * std::abs(aqq)) + 1e-300) {
                    A(p, q) = A(q, p) = 0.0;
                    continue;
                }
                rotated = true;
                const double tau = (aqq - app) / (2 * mag);
                const double t =
                    (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                const cplx u = apq / mag;

                for (int k = 0; k < m; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * std::conj(u) * akq;
                    A(k, q) = s * u * akp + c * akq;
                    A(p, k) = std::conj(A(k, p));
                    A(q, k) = std::conj(A(k, q));
                }
                A(p, p) = app - t * mag;
                A(q, q) = aqq + t * mag;
                A(p, q) = A(q, p) = 0.0;
                for (int k = 0; k < N; ++k) {
                    const cplx vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * std::conj(u) * vkq;
                    V(k, q) = s * u * vkp + c * vkq;
                }
            }
        if (!rotated) return;
    }
}

}  // namespace detail

// Hermitian eigendecomposition. The matrix is first split into the connected
// components of its exact nonzero off-diagonal pattern (the physics here is
// dominated by X-shaped matrices, whose 1x1 and 2x2 blocks then keep full
// relative accuracy); components of size 1 and 2 are solved in closed form,
// larger ones by cyclic complex Jacobi rotations.
template <int N>
hermitian_eig_result<N> hermitian_eig(const cmat<N>& m) {
    const double defect = hermiticity_defect(m);
    if (defect > detail::hermiticity_tol)
        throw NotHermitian("hermitian_eig: asymmetry " + std::to_string(defect));
    const cmat<N> h = hermitize(m);

    detail::union_find uf;
    uf.init(N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (h(i, j) != cplx{}) uf.unite(i, j);

    std::array<double, N> vals{};
    cmat<N> vecs;

    std::array<bool, N> done{};
    for (int root = 0; root < N; ++root) {
        std::array<int, N> idx{};
        int sz = 0;
        for (int i = 0; i < N; ++i)
            if (!done[i] && uf.find(i) == uf.find(root)) idx[sz++] = i;
        if (sz == 0) continue;
        for (int k = 0; k < sz; ++k) done[idx[k]] = true;

        if (sz == 1) {
            vals[idx[0]] = h(idx[0], idx[0]).real();
            vecs(idx[0], idx[0]) = 1.0;
        } else if (sz == 2) {
            const int p = idx[0], q = idx[1];
            const detail::herm2 r =
                detail::solve2(h(p, p).real(), h(q, q).real(), h(p, q));
            vals[p] = r.lam_p;
            vals[q] = r.lam_q;
            vecs(p, p) = r.c;
            vecs(q, p) = -r.s * std::conj(r.u);
            vecs(p, q) = r.s * r.u;
            vecs(q, q) = r.c;
        } else {
            cmat<N> sub, subv = cmat<N>::zero();
            for (int a = 0; a < sz; ++a) {
                subv(a, a) = 1.0;
                for (int b = 0; b < sz; ++b) sub(a, b) = h(idx[a], idx[b]);
            }
            detail::jacobi_sweeps(sub, subv, sz);
            for (int a = 0; a < sz; ++a) {
                vals[idx[a]] = sub(a, a).real();
                for (int b = 0; b < sz; ++b) vecs(idx[a], idx[b]) = subv(a, b);
            }
        }
    }

    // sort ascending, carrying columns
    std::array<int, N> order{};
    for (int i = 0; i < N; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return vals[a] < vals[b]; });
    hermitian_eig_result<N> out;
    for (int k = 0; k < N; ++k) {
        out.values[k] = vals[order[k]];
        for (int i = 0; i < N; ++i) out.vectors(i, k) = vecs(i, order[k]);
    }
    return out;
}

// PSD square root via the eigendecomposition; eigenvalues in [-1e-12, 0)
// clamp to zero, anything more negative is a hard error.
template <int N>
cmat<N> psd_sqrt(const cmat<N>& m) {
    const hermitian_eig_result<N> e = hermitian_eig(m);
    std::array<double, N> roots{};
    for (int k = 0; k < N; ++k) {
        double v = e.values[k];
        if (v < -detail::psd_clamp)
            throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(v));
        roots[k] = v <= 0 ? 0.0 : std::sqrt(v);
    }
    cmat<N> s;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            cplx acc = 0;
            for (int k = 0; k < N; ++k)
                acc += roots[k] * e.vectors(i, k) * std::conj(e.vectors(j, k));
            s(i, j) = acc;
        }
    return hermitize(s);
}

template <int N>
cmat<N> matrix_exp_hermitian(const cmat<N>& m) {
    const hermitian_eig_result<N> e = hermitian_eig(m);
    cmat<N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            cplx acc = 0;
            for (int k = 0; k < N; ++k)
                acc += std::exp(e.values[k]) * e.vectors(i, k) * std::conj(e.vectors(j, k));
            r(i, j) = acc;
        }
    return hermitize(r);
}

// Singular values by one-sided Jacobi: columns are rotated until pairwise
// orthogonal, then the norms are the singular values. Small values come out
// with absolute (not squared) accuracy, which the concurrence path needs.
template <int N>
std::array<double, N> singular_values(const cmat<N>& a) {
    cmat<N> b = a;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                double alpha = 0, beta = 0;
                cplx gamma = 0;
                for (int i = 0; i < N; ++i) {
                    alpha += std::norm(b(i, p));
                    beta += std::norm(b(i, q));
                    gamma += std::conj(b(i, p)) * b(i, q);
                }
                const double mag = std::abs(gamma);
                if (mag == 0.0 || mag <= 1e-15 * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double tau = (beta - alpha) / (2 * mag);
                const double t =
                    (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                const cplx u = gamma / mag;
                for (int i = 0; i < N; ++i) {
                    const cplx bip = b(i, p), biq = b(i, q);
                    b(i, p) = c * bip - s * std::conj(u) * biq;
                    b(i, q) = s * u * bip + c * biq;
                }
            }
        if (!rotated) break;
    }
    std::array<double, N> sv{};
    for (int j = 0; j < N; ++j) {
        double n2 = 0;
        for (int i = 0; i < N; ++i) n2 += std::norm(b(i, j));
        sv[j] = std::sqrt(n2);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

}  // namespace qtele
