#pragma once

#include <array>
#include <cstddef>

namespace k3gm {

template <class T, std::size_t N>
using Mat = std::array<std::array<T, N>, N>;

template <class T>
using Mat4 = Mat<T, 4>;

template <class T, std::size_t N>
Mat<T, N> operator*(const Mat<T, N> &a, const Mat<T, N> &b)
{
    Mat<T, N> c;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            T s = a[i][0] * b[0][j];
            for (std::size_t k = 1; k < N; ++k) {
                s += a[i][k] * b[k][j];
            }
            c[i][j] = s;
        }
    }
    return c;
}

template <class T, std::size_t N>
Mat<T, N> operator+(Mat<T, N> a, const Mat<T, N> &b)
{
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            a[i][j] += b[i][j];
        }
    }
    return a;
}

template <class T, std::size_t N>
Mat<T, N> operator-(Mat<T, N> a, const Mat<T, N> &b)
{
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            a[i][j] -= b[i][j];
        }
    }
    return a;
}

template <class T, std::size_t N>
Mat<T, N> transpose(const Mat<T, N> &a)
{
    Mat<T, N> t;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            t[i][j] = a[j][i];
        }
    }
    return t;
}

template <class T, std::size_t N, class F>
auto map_entries(const Mat<T, N> &a, F f)
{
    using U = decltype(f(a[0][0]));
    Mat<U, N> r;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            r[i][j] = f(a[i][j]);
        }
    }
    return r;
}

template <class T, std::size_t N>
Mat<T, N> commutator(const Mat<T, N> &a, const Mat<T, N> &b)
{
    return a * b - b * a;
}

} // namespace k3gm
