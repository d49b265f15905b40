#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "qlsim/errors.hpp"

namespace qlsim {

using cxd = std::complex<double>;

inline bool finite(const cxd& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense complex N x N matrix, row major. N is 2, 4 or 8 for operators on
/// 1..3 qubits and 3 for GKS matrices. Small enough that everything is done
/// by the definition.
template <int N>
struct CMat {
    static_assert(N == 2 || N == 3 || N == 4 || N == 8);

    std::array<cxd, N * N> e{};

    cxd& operator()(int i, int j) { return e[i * N + j]; }
    const cxd& operator()(int i, int j) const { return e[i * N + j]; }

    static CMat zero() { return CMat{}; }
    static CMat identity() {
        CMat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat dagger() const {
        CMat m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
        return m;
    }

    cxd trace() const {
        cxd t = 0.0;
        for (int i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    CMat operator+(const CMat& o) const {
        CMat m;
        for (int k = 0; k < N * N; ++k) m.e[k] = e[k] + o.e[k];
        return m;
    }
    CMat operator-(const CMat& o) const {
        CMat m;
        for (int k = 0; k < N * N; ++k) m.e[k] = e[k] - o.e[k];
        return m;
    }
    CMat operator-() const {
        CMat m;
        for (int k = 0; k < N * N; ++k) m.e[k] = -e[k];
        return m;
    }
    CMat operator*(const CMat& o) const {
        CMat m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                cxd s = 0.0;
                for (int k = 0; k < N; ++k) s += (*this)(i, k) * o(k, j);
                m(i, j) = s;
            }
        return m;
    }
    CMat operator*(const cxd& s) const {
        CMat m;
        for (int k = 0; k < N * N; ++k) m.e[k] = e[k] * s;
        return m;
    }
    friend CMat operator*(const cxd& s, const CMat& m) { return m * s; }

    /// Largest |entry| of the matrix.
    double max_abs() const {
        double r = 0.0;
        for (const auto& z : e) r = std::max(r, std::abs(z));
        return r;
    }
    /// Largest entrywise |difference| against another matrix.
    double max_abs_diff(const CMat& o) const { return (*this - o).max_abs(); }

    bool is_hermitian(double tol) const {
        return max_abs_diff(dagger()) <= tol;
    }
    bool is_unitary(double tol) const {
        return (dagger() * *this).max_abs_diff(identity()) <= tol;
    }
};

using CMat2 = CMat<2>;
using CMat3 = CMat<3>;
using CMat4 = CMat<4>;
using CMat8 = CMat<8>;

/// Complex N-vector (kets of 1..3 qubits).
template <int N>
struct CVec {
    std::array<cxd, N> e{};

    cxd& operator[](int i) { return e[i]; }
    const cxd& operator[](int i) const { return e[i]; }

    double norm() const {
        double s = 0.0;
        for (const auto& z : e) s += std::norm(z);
        return std::sqrt(s);
    }
    cxd dot(const CVec& o) const {  // <this|o>
        cxd s = 0.0;
        for (int i = 0; i < N; ++i) s += std::conj(e[i]) * o.e[i];
        return s;
    }
    /// |this><this|
    CMat<N> outer() const {
        CMat<N> m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = e[i] * std::conj(e[j]);
        return m;
    }
};

using CVec2 = CVec<2>;
using CVec4 = CVec<4>;

/// Kronecker product; first factor owns the high-order basis index, so a
/// 2-qubit basis state is |a>|b> -> index a*2 + b.
template <int M, int N>
CMat<M * N> tensor(const CMat<M>& a, const CMat<N>& b) {
    static_assert(M * N <= 8, "tensor result exceeds the 3-qubit kernel");
    CMat<M * N> m;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l)
                    m(i * N + k, j * N + l) = a(i, j) * b(k, l);
    return m;
}

template <int M, int N>
CVec<M * N> tensor(const CVec<M>& a, const CVec<N>& b) {
    static_assert(M * N <= 8);
    CVec<M * N> v;
    for (int i = 0; i < M; ++i)
        for (int k = 0; k < N; ++k) v[i * N + k] = a[i] * b[k];
    return v;
}

/// Trace out the first tensor factor, keeping the trailing K-dimensional one.
template <int K, int N>
CMat<K> partial_trace_first(const CMat<N>& m) {
    static_assert(N % K == 0 && N > K);
    constexpr int D = N / K;  // dimension traced out
    CMat<K> out;
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
            cxd s = 0.0;
            for (int d = 0; d < D; ++d) s += m(d * K + i, d * K + j);
            out(i, j) = s;
        }
    return out;
}

/// Real 3-vector (Bloch coordinates, Hamiltonian coefficients, axes).
struct Vec3 {
    std::array<double, 3> e{};

    double& operator[](int i) { return e[i]; }
    const double& operator[](int i) const { return e[i]; }

    Vec3 operator+(const Vec3& o) const {
        return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
    }
    Vec3 operator-(const Vec3& o) const {
        return {{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
    }
    Vec3 operator*(double s) const { return {{e[0] * s, e[1] * s, e[2] * s}}; }
    double norm() const {
        return std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    }
    double max_abs_diff(const Vec3& o) const {
        return std::max({std::abs(e[0] - o.e[0]), std::abs(e[1] - o.e[1]),
                         std::abs(e[2] - o.e[2])});
    }
};

/// Real 3x3 matrix, row major.
struct Mat3 {
    std::array<double, 9> e{};

    double& operator()(int i, int j) { return e[i * 3 + j]; }
    const double& operator()(int i, int j) const { return e[i * 3 + j]; }

    static Mat3 zero() { return Mat3{}; }
    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    Mat3 transpose() const {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = (*this)(j, i);
        return m;
    }
    Mat3 operator+(const Mat3& o) const {
        Mat3 m;
        for (int k = 0; k < 9; ++k) m.e[k] = e[k] + o.e[k];
        return m;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 m;
        for (int k = 0; k < 9; ++k) m.e[k] = e[k] - o.e[k];
        return m;
    }
    Mat3 operator*(double s) const {
        Mat3 m;
        for (int k = 0; k < 9; ++k) m.e[k] = e[k] * s;
        return m;
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                m(i, j) = s;
            }
        return m;
    }
    Vec3 operator*(const Vec3& v) const {
        Vec3 r;
        for (int i = 0; i < 3; ++i)
            r[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] +
                   (*this)(i, 2) * v[2];
        return r;
    }

    double det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    double trace() const { return e[0] + e[4] + e[8]; }
    double max_abs() const {
        double r = 0.0;
        for (double x : e) r = std::max(r, std::abs(x));
        return r;
    }
    double max_abs_diff(const Mat3& o) const { return (*this - o).max_abs(); }

    bool is_rotation(double tol) const {
        return (transpose() * *this).max_abs_diff(identity()) <= tol &&
               std::abs(det() - 1.0) <= tol;
    }
};

/// Eigenvalues of a Hermitian 2x2, ascending. Closed form (quadratic).
inline std::array<double, 2> hermitian_eigenvalues(const CMat2& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double m = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return {m - r, m + r};
}

/// Eigenvalues of a Hermitian 3x3, ascending. Cyclic complex Jacobi sweeps;
/// unlike the analytic Cardano roots these keep absolute accuracy at machine
/// epsilon near degenerate pairs, which the rank tests rely on.
inline std::array<double, 3> hermitian_eigenvalues(const CMat3& a) {
    CMat3 h = a;
    const double scale = std::max(h.max_abs(), 1.0);
    for (int sweep = 0; sweep < 30; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) off += std::abs(h(p, q));
        if (off <= 1e-18 * scale) break;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                const double mag = std::abs(h(p, q));
                if (mag == 0.0) continue;
                const cxd phase = h(p, q) / mag;
                const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * mag);
                const double t =
                    tau == 0.0 ? 1.0
                               : std::copysign(1.0, tau) /
                                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                CMat3 j = CMat3::identity();
                j(p, p) = c;
                j(p, q) = s * phase;
                j(q, p) = -s * std::conj(phase);
                j(q, q) = c;
                h = j.dagger() * h * j;
            }
    }
    std::array<double, 3> w = {h(0, 0).real(), h(1, 1).real(), h(2, 2).real()};
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace qlsim
