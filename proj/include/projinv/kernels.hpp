// Scalar-generic formula kernels: 3x3 determinants, the projective action,
// Jacobian multipliers, the frame normalization system, and the closed-form
// invariantized Jacobian. Instantiated with double on the main path and with
// the exact rational type for the drift-free oracle mode.
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "projinv/errors.hpp"

namespace projinv::kernels {

template <class T>
using Mat3 = std::array<T, 9>;  // row-major; rows a, b, c

template <class T>
using PointT = std::pair<T, T>;

template <class T>
using ConfigView = std::span<const PointT<T>>;

template <class T>
Mat3<T> identity3() {
    return {T(1), T(0), T(0), T(0), T(1), T(0), T(0), T(0), T(1)};
}

template <class T>
Mat3<T> matmul(const Mat3<T>& a, const Mat3<T>& b) {
    Mat3<T> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T acc = a[3 * i] * b[j];
            acc += a[3 * i + 1] * b[3 + j];
            acc += a[3 * i + 2] * b[6 + j];
            r[3 * i + j] = acc;
        }
    return r;
}

template <class T>
T det3(const Mat3<T>& m) {
    T r = m[0] * (m[4] * m[8] - m[5] * m[7]);
    r -= m[1] * (m[3] * m[8] - m[5] * m[6]);
    r += m[2] * (m[3] * m[7] - m[4] * m[6]);
    return r;
}

/// Transposed cofactor matrix; equals det(m) * m^{-1}, i.e. the inverse up to
/// scale, which is all a projective representative needs.
template <class T>
Mat3<T> adjugate3(const Mat3<T>& m) {
    Mat3<T> r{};
    r[0] = m[4] * m[8] - m[5] * m[7];
    r[1] = m[2] * m[7] - m[1] * m[8];
    r[2] = m[1] * m[5] - m[2] * m[4];
    r[3] = m[5] * m[6] - m[3] * m[8];
    r[4] = m[0] * m[8] - m[2] * m[6];
    r[5] = m[2] * m[3] - m[0] * m[5];
    r[6] = m[3] * m[7] - m[4] * m[6];
    r[7] = m[1] * m[6] - m[0] * m[7];
    r[8] = m[0] * m[4] - m[1] * m[3];
    return r;
}

/// Denominator s = c1*x + c2*y + c3 of the projective fraction.
template <class T>
T denom(const Mat3<T>& g, const PointT<T>& p) {
    T s = g[6] * p.first;
    s += g[7] * p.second;
    s += g[8];
    return s;
}

/// ((a1 x + a2 y + a3)/s, (b1 x + b2 y + b3)/s); caller checks s.
template <class T>
PointT<T> apply_point(const Mat3<T>& g, const PointT<T>& p) {
    T s = denom(g, p);
    T u = g[0] * p.first + g[1] * p.second + g[2];
    T v = g[3] * p.first + g[4] * p.second + g[5];
    return {T(u / s), T(v / s)};
}

/// det of [[xi,xj,xk],[yi,yj,yk],[1,1,1]].
template <class T>
T delta3(const PointT<T>& pi, const PointT<T>& pj, const PointT<T>& pk) {
    T r = pi.first * (pj.second - pk.second);
    r -= pj.first * (pi.second - pk.second);
    r += pk.first * (pi.second - pj.second);
    return r;
}

/// delta over 1-based configuration indices, matching the written formulas.
template <class T>
T delta_cfg(ConfigView<T> pts, int i, int j, int k) {
    return delta3(pts[std::size_t(i - 1)], pts[std::size_t(j - 1)], pts[std::size_t(k - 1)]);
}

/// Per-point Jacobian det(g)/s^3 of the planar projective map.
template <class T>
T jacobian_point(const Mat3<T>& g, const PointT<T>& p) {
    T s = denom(g, p);
    T s3 = s * s * s;
    return det3(g) / s3;
}

template <class T>
T pow_int(T base, long e) {
    if (e < 0) {
        base = T(1) / base;
        e = -e;
    }
    T r = T(1);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Cross-section targets: p1 -> (0,-1), p2 -> (1,1), p3 -> (1,0), p4 -> (0,0).
template <class T>
std::array<PointT<T>, 4> section_targets() {
    return {PointT<T>{T(0), T(-1)}, PointT<T>{T(1), T(1)}, PointT<T>{T(1), T(0)},
            PointT<T>{T(0), T(0)}};
}

/// Assemble the 8x8 normalization system in unknowns (a1,a2,a3,b1,b2,b3,c1,c2)
/// with c3 = 1: each correspondence (x,y) -> (X,Y) clears denominators into
///   a1 x + a2 y + a3 - X c1 x - X c2 y = X
///   b1 x + b2 y + b3 - Y c1 x - Y c2 y = Y
template <class T>
void frame_system(ConfigView<T> pts, std::array<std::array<T, 8>, 8>& A, std::array<T, 8>& rhs) {
    auto targets = section_targets<T>();
    for (std::size_t k = 0; k < 4; ++k) {
        const T& x = pts[k].first;
        const T& y = pts[k].second;
        const T& X = targets[k].first;
        const T& Y = targets[k].second;
        A[2 * k] = {x, y, T(1), T(0), T(0), T(0), T(-X * x), T(-X * y)};
        A[2 * k + 1] = {T(0), T(0), T(0), x, y, T(1), T(-Y * x), T(-Y * y)};
        rhs[2 * k] = X;
        rhs[2 * k + 1] = Y;
    }
}

/// Gaussian elimination with partial pivoting. A pivot at or below
/// tol * (largest pivot magnitude seen) counts as rank deficiency;
/// pass tol = 0 for exact scalars.
template <class T, std::size_t N>
std::array<T, N> solve_linear(std::array<std::array<T, N>, N> A, std::array<T, N> b, const T& tol) {
    using std::abs;
    T max_piv = T(0);
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        T best = abs(A[col][col]);
        for (std::size_t r = col + 1; r < N; ++r) {
            T cand = abs(A[r][col]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (best > max_piv) max_piv = best;
        if (best == T(0)) throw SingularSystem();
        if (tol != T(0)) {
            T gate = tol * max_piv;
            if (best <= gate) throw SingularSystem();
        }
        if (piv != col) {
            std::swap(A[piv], A[col]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < N; ++r) {
            if (A[r][col] == T(0)) continue;
            T f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < N; ++c) A[r][c] = A[r][c] - f * A[col][c];
            b[r] = b[r] - f * b[col];
        }
    }
    std::array<T, N> x{};
    for (std::size_t ri = N; ri-- > 0;) {
        T acc = b[ri];
        for (std::size_t c = ri + 1; c < N; ++c) acc -= A[ri][c] * x[c];
        x[ri] = T(acc / A[ri][ri]);
    }
    return x;
}

/// Right moving frame in the c3 = 1 gauge via the linear solve.
template <class T>
Mat3<T> solve_frame_matrix(ConfigView<T> pts, const T& tol) {
    std::array<std::array<T, 8>, 8> A{};
    std::array<T, 8> rhs{};
    frame_system(pts, A, rhs);
    std::array<T, 8> s = solve_linear(A, rhs, tol);
    return Mat3<T>{s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], T(1)};
}

/// Product of the four base determinants delta_123 delta_124 delta_134 delta_234.
template <class T>
T base_delta_product(ConfigView<T> pts) {
    T r = delta_cfg(pts, 1, 2, 3);
    r = r * delta_cfg(pts, 1, 2, 4);
    r = r * delta_cfg(pts, 1, 3, 4);
    r = r * delta_cfg(pts, 2, 3, 4);
    return r;
}

/// Mixed combination delta_123 delta_234 delta_14i + delta_124 delta_134 delta_23i.
template <class T>
T mixed_sum(ConfigView<T> pts, int i) {
    T a = delta_cfg(pts, 1, 2, 3) * delta_cfg(pts, 2, 3, 4);
    a = a * delta_cfg(pts, 1, 4, i);
    T b = delta_cfg(pts, 1, 2, 4) * delta_cfg(pts, 1, 3, 4);
    b = b * delta_cfg(pts, 2, 3, i);
    return a + b;
}

/// Closed-form invariantized Jacobian: D^(2n-9) * prod_i mixed_i^(-3), where
/// D is the base delta product; for n = 4 this reduces to D^(-1). The overall
/// sign follows the positive-product convention and differs from the direct
/// route by (-1)^(n-4).
template <class T>
T invariantized_jacobian_closed(ConfigView<T> pts) {
    long n = static_cast<long>(pts.size());
    T r = pow_int(base_delta_product(pts), 2 * n - 9);
    for (int i = 5; i <= n; ++i) {
        T m = mixed_sum(pts, i);
        r = r / (m * m * m);
    }
    return r;
}

/// Per-point invariantized multipliers iota(det(g)/s_i^3) in closed form.
template <class T>
std::vector<T> per_point_invariantized(ConfigView<T> pts) {
    T d123 = delta_cfg(pts, 1, 2, 3);
    T d124 = delta_cfg(pts, 1, 2, 4);
    T d134 = delta_cfg(pts, 1, 3, 4);
    T d234 = delta_cfg(pts, 2, 3, 4);
    std::vector<T> out;
    out.reserve(pts.size());
    out.push_back(T(-(d234 * d234) / (d123 * d124 * d134)));
    out.push_back(T((d134 * d134) / (d123 * d124 * d234)));
    out.push_back(T((d124 * d124) / (d123 * d234 * d134)));
    out.push_back(T(-(d123 * d123) / (d124 * d134 * d234)));
    T D = d123 * d124;
    D = D * d134;
    D = D * d234;
    for (int i = 5; i <= static_cast<int>(pts.size()); ++i) {
        T m = mixed_sum(pts, i);
        out.push_back(T(-(D * D) / (m * m * m)));
    }
    return out;
}

/// Fundamental absolute invariants for point i > 4:
///   I1_i = d134 d124 d23i / (d234 d123 d14i),  I2_i = d234 d14i / (d124 d34i).
template <class T>
std::pair<T, T> fundamental_pair(ConfigView<T> pts, int i) {
    T n1 = delta_cfg(pts, 1, 3, 4) * delta_cfg(pts, 1, 2, 4);
    n1 = n1 * delta_cfg(pts, 2, 3, i);
    T d1 = delta_cfg(pts, 2, 3, 4) * delta_cfg(pts, 1, 2, 3);
    d1 = d1 * delta_cfg(pts, 1, 4, i);
    T n2 = delta_cfg(pts, 2, 3, 4) * delta_cfg(pts, 1, 4, i);
    T d2 = delta_cfg(pts, 1, 2, 4) * delta_cfg(pts, 3, 4, i);
    return {T(n1 / d1), T(n2 / d2)};
}

}  // namespace projinv::kernels
