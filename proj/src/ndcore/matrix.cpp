#include "airgen/ndcore/matrix.hpp"

#include <cmath>
#include <string>

#include "airgen/errors.hpp"

namespace airgen::ndcore {

namespace {

[[noreturn]] void shape_fail(const char* op, const Matrix& a, const Matrix& b) {
    throw ShapeError(std::string(op) + ": incompatible shapes " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("Matrix: dimensions must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
    if (rows == 0 || cols == 0 || data_.size() != rows * cols) {
        throw ShapeError("Matrix: " + std::to_string(data_.size()) +
                         " values do not fill " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool Matrix::all_finite() const noexcept {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* __restrict__ src = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = src[j];
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) shape_fail("matmul", a, b);
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    Matrix out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        double* __restrict__ dst = out.row(i);
        const double* __restrict__ ai = a.row(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* __restrict__ bp = b.row(p);
            for (std::size_t j = 0; j < n; ++j) dst[j] += aip * bp[j];
        }
    }
    return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) shape_fail("matmul_nt", a, b);
    const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
    Matrix out(m, n);
    // 2x2 register blocking keeps two rows of a and two rows of b live.
    std::size_t i = 0;
    for (; i + 1 < m; i += 2) {
        const double* __restrict__ a0 = a.row(i);
        const double* __restrict__ a1 = a.row(i + 1);
        double* __restrict__ d0 = out.row(i);
        double* __restrict__ d1 = out.row(i + 1);
        std::size_t j = 0;
        for (; j + 1 < n; j += 2) {
            const double* __restrict__ b0 = b.row(j);
            const double* __restrict__ b1 = b.row(j + 1);
            double s00 = 0.0, s01 = 0.0, s10 = 0.0, s11 = 0.0;
            for (std::size_t p = 0; p < k; ++p) {
                s00 += a0[p] * b0[p];
                s01 += a0[p] * b1[p];
                s10 += a1[p] * b0[p];
                s11 += a1[p] * b1[p];
            }
            d0[j] = s00;
            d0[j + 1] = s01;
            d1[j] = s10;
            d1[j + 1] = s11;
        }
        for (; j < n; ++j) {
            const double* __restrict__ bj = b.row(j);
            double s0 = 0.0, s1 = 0.0;
            for (std::size_t p = 0; p < k; ++p) {
                s0 += a0[p] * bj[p];
                s1 += a1[p] * bj[p];
            }
            d0[j] = s0;
            d1[j] = s1;
        }
    }
    for (; i < m; ++i) {
        const double* __restrict__ ai = a.row(i);
        double* __restrict__ dst = out.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double* __restrict__ bj = b.row(j);
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            dst[j] = s;
        }
    }
    return out;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) shape_fail("matmul_tn", a, b);
    const std::size_t k = a.rows(), m = a.cols(), n = b.cols();
    Matrix out(m, n);
    for (std::size_t p = 0; p < k; ++p) {
        const double* __restrict__ ap = a.row(p);
        const double* __restrict__ bp = b.row(p);
        for (std::size_t i = 0; i < m; ++i) {
            const double api = ap[i];
            double* __restrict__ dst = out.row(i);
            for (std::size_t j = 0; j < n; ++j) dst[j] += api * bp[j];
        }
    }
    return out;
}

void add_row_vector(Matrix& out, std::span<const double> v) {
    if (out.cols() != v.size()) {
        throw ShapeError("add_row_vector: vector length " + std::to_string(v.size()) +
                         " vs " + std::to_string(out.cols()) + " columns");
    }
    for (std::size_t i = 0; i < out.rows(); ++i) {
        double* __restrict__ dst = out.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) dst[j] += v[j];
    }
}

} // namespace airgen::ndcore
