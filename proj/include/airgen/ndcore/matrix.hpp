#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace airgen::ndcore {

/// Dense row-major matrix of doubles. The whole numeric core works in 64-bit
/// precision so gradient checks can use tight tolerances.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    double* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }
    std::span<const double> row_span(std::size_t r) const noexcept { return {row(r), cols_}; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }
    const std::vector<double>& values() const noexcept { return data_; }

    bool all_finite() const noexcept;

    bool same_shape(const Matrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix transpose(const Matrix& a);

/// a[m x k] * b[k x n] -> [m x n]
Matrix matmul(const Matrix& a, const Matrix& b);

/// a[m x k] * b^T, b[n x k] -> [m x n]. Row-by-row dot products; this is the
/// layout the forward pass uses (weights stored out x in).
Matrix matmul_nt(const Matrix& a, const Matrix& b);

/// a^T * b, a[k x m], b[k x n] -> [m x n]. Used for weight gradients.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

/// In-place: out.row(r) += v for every row.
void add_row_vector(Matrix& out, std::span<const double> v);

} // namespace airgen::ndcore
