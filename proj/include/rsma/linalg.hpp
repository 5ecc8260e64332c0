// SPDX-License-Identifier: Apache-2.0
//
// rsma-lms: closed-form and Monte-Carlo analysis of secure rate-splitting
// multiple access over shadowed-Rician land-mobile-satellite downlinks
// Copyright (C) 2026 The rsma-lms authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RSMA_LINALG_HPP
#define RSMA_LINALG_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rsma {

using cplx = std::complex<double>;

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const T> data() const { return data_; }
    std::span<T> data() { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using CMatrix = Matrix<cplx>;
using RMatrix = Matrix<double>;

/// Vectors at least this long are reduced with Neumaier compensated summation.
inline constexpr std::size_t compensated_threshold = 1024;

namespace detail {

struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x)
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace detail

/// a^T b^* = sum_n a[n] conj(b[n]).
inline cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot_conj: length mismatch");
    if (a.size() >= compensated_threshold) {
        detail::Neumaier re, im;
        for (std::size_t n = 0; n < a.size(); ++n) {
            const cplx p = a[n] * std::conj(b[n]);
            re.add(p.real());
            im.add(p.imag());
        }
        return {re.value(), im.value()};
    }
    cplx acc{};
    for (std::size_t n = 0; n < a.size(); ++n) acc += a[n] * std::conj(b[n]);
    return acc;
}

inline double norm_sq(std::span<const cplx> a)
{
    if (a.size() >= compensated_threshold) {
        detail::Neumaier acc;
        for (const auto& x : a) acc.add(std::norm(x));
        return acc.value();
    }
    double acc = 0.0;
    for (const auto& x : a) acc += std::norm(x);
    return acc;
}

/// Gram matrix of the rows: gram(k, i) = h_k^T h_i^*.
inline CMatrix gram(const CMatrix& h)
{
    const std::size_t K = h.rows();
    CMatrix g(K, K);
    for (std::size_t k = 0; k < K; ++k) {
        g(k, k) = norm_sq(h.row(k));
        for (std::size_t i = k + 1; i < K; ++i) {
            g(k, i) = dot_conj(h.row(k), h.row(i));
            g(i, k) = std::conj(g(k, i));
        }
    }
    return g;
}

}  // namespace rsma

#endif  // RSMA_LINALG_HPP
