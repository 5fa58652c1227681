#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qtele {

using cplx = std::complex<double>;

struct NotHermitian : std::runtime_error {
    explicit NotHermitian(const std::string& what) : std::runtime_error(what) {}
};
struct NotPSD : std::runtime_error {
    explicit NotPSD(const std::string& what) : std::runtime_error(what) {}
};
struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// Dense N x N complex matrix, row-major. N is 2 or 4 throughout this library.
template <int N>
struct cmat {
    std::array<cplx, N * N> a{};

    cplx& operator()(int i, int j) { return a[i * N + j]; }
    const cplx& operator()(int i, int j) const { return a[i * N + j]; }

    static cmat zero() { return cmat{}; }
    static cmat identity() {
        cmat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    cmat& operator+=(const cmat& o) {
        for (int k = 0; k < N * N; ++k) a[k] += o.a[k];
        return *this;
    }
    cmat& operator-=(const cmat& o) {
        for (int k = 0; k < N * N; ++k) a[k] -= o.a[k];
        return *this;
    }
    cmat& operator*=(cplx s) {
        for (int k = 0; k < N * N; ++k) a[k] *= s;
        return *this;
    }
    friend cmat operator+(cmat x, const cmat& y) { return x += y; }
    friend cmat operator-(cmat x, const cmat& y) { return x -= y; }
    friend cmat operator*(cmat x, cplx s) { return x *= s; }
    friend cmat operator*(cplx s, cmat x) { return x *= s; }

    friend cmat operator*(const cmat& x, const cmat& y) {
        cmat r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const cplx xik = x(i, k);
                if (xik == cplx{}) continue;
                for (int j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
};

template <int N>
struct cvec {
    std::array<cplx, N> v{};
    cplx& operator[](int i) { return v[i]; }
    const cplx& operator[](int i) const { return v[i]; }

    double norm() const {
        double s = 0;
        for (const cplx& z : v) s += std::norm(z);
        return std::sqrt(s);
    }
};

template <int N>
cvec<N> operator*(const cmat<N>& m, const cvec<N>& v) {
    cvec<N> r;
    for (int i = 0; i < N; ++i) {
        cplx acc = 0;
        for (int j = 0; j < N; ++j) acc += m(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

using mat2 = cmat<2>;
using mat4 = cmat<4>;
using vec4 = cvec<4>;
using vec8 = cvec<8>;

template <int N>
cmat<N> adjoint(const cmat<N>& m) {
    cmat<N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

template <int N>
cmat<N> transpose(const cmat<N>& m) {
    cmat<N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = m(j, i);
    return r;
}

template <int N>
cmat<N> conj(const cmat<N>& m) {
    cmat<N> r;
    for (int k = 0; k < N * N; ++k) r.a[k] = std::conj(m.a[k]);
    return r;
}

template <int N>
cplx trace(const cmat<N>& m) {
    cplx t = 0;
    for (int i = 0; i < N; ++i) t += m(i, i);
    return t;
}

template <int N>
double max_abs(const cmat<N>& m) {
    double r = 0;
    for (const cplx& z : m.a) r = std::max(r, std::abs(z));
    return r;
}

template <int N>
double max_abs_diff(const cmat<N>& x, const cmat<N>& y) {
    double r = 0;
    for (int k = 0; k < N * N; ++k) r = std::max(r, std::abs(x.a[k] - y.a[k]));
    return r;
}

// Largest |m(i,j) - conj(m(j,i))| over all entries.
template <int N>
double hermiticity_defect(const cmat<N>& m) {
    double r = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
    return r;
}

template <int N>
cmat<N> hermitize(const cmat<N>& m) {
    cmat<N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return r;
}

// Outer product |u><v|.
template <int N>
cmat<N> outer(const cvec<N>& u, const cvec<N>& v) {
    cmat<N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = u[i] * std::conj(v[j]);
    return r;
}

// Kronecker product of two one-qubit matrices in the fixed basis
// {|11>, |10>, |01>, |00>}; single-qubit index 0 is |1>, index 1 is |0>,
// so the row-major product indexing reproduces that ordering.
inline mat4 kron(const mat2& x, const mat2& y) {
    mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = x(i, j) * y(k, l);
    return r;
}

inline mat2 pauli_i() { return mat2::identity(); }
inline mat2 pauli_x() {
    mat2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}
inline mat2 pauli_y() {
    mat2 m;
    m(0, 1) = cplx(0, -1);
    m(1, 0) = cplx(0, 1);
    return m;
}
inline mat2 pauli_z() {
    mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

}  // namespace qtele
