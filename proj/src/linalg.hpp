#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "error.hpp"

namespace freefall {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Ten3 = std::array<Mat4, 4>; // [i][j][k]

constexpr Mat4 minkowski_eta() {
    Mat4 m{};
    m[0][0] = 1.0;
    m[1][1] = -1.0;
    m[2][2] = -1.0;
    m[3][3] = -1.0;
    return m;
}

inline Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

inline double det4(Mat4 a) {
    // Gaussian elimination with partial pivoting.
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

inline Mat4 inverse4(Mat4 a) {
    Mat4 inv = identity4();
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0)
            throw Error(errc::singular, "singular 4x4 matrix");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
        }
        double d = a[col][col];
        for (int c = 0; c < 4; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            double f = a[r][col];
            if (f == 0.0) continue;
            for (int c = 0; c < 4; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

inline Mat4 matmul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            double aik = a[i][k];
            if (aik == 0.0) continue;
            for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

inline double max_abs(const Vec4& v) {
    double w = 0.0;
    for (double x : v) w = std::max(w, std::fabs(x));
    return w;
}

inline double max_abs(const Mat4& m) {
    double w = 0.0;
    for (const auto& row : m)
        for (double v : row) w = std::max(w, std::fabs(v));
    return w;
}

inline double max_abs(const Ten3& t) {
    double w = 0.0;
    for (const auto& m : t) w = std::max(w, max_abs(m));
    return w;
}

} // namespace freefall
