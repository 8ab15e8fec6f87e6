// Copyright 2026 The qfilt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

#include "qfilt/errors.hpp"

namespace qfilt {

using cdouble = std::complex<double>;
using cvector = std::vector<cdouble>;

/// Small dense complex matrix, row-major. Only the operations the library
/// needs (products, adjoint, max-difference); not a linear-algebra package.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cdouble{0.0, 0.0}) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix adjoint() const {
        CMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    cvector apply(const cvector& v) const {
        if (v.size() != cols_) throw ValidationError("matrix-vector size mismatch");
        cvector out(rows_, cdouble{0.0, 0.0});
        for (std::size_t i = 0; i < rows_; ++i) {
            cdouble acc{0.0, 0.0};
            const cdouble* row = data_.data() + i * cols_;
            for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
            out[i] = acc;
        }
        return out;
    }

    CMatrix operator*(const CMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw ValidationError("matrix-matrix size mismatch");
        CMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const cdouble a = (*this)(i, k);
                if (a == cdouble{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        }
        return out;
    }

    cvector column(std::size_t j) const {
        cvector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    cvector data_;
};

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("matrix shapes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline double max_abs_diff(const cvector& a, const cvector& b) {
    if (a.size() != b.size()) throw ValidationError("vector sizes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace qfilt
