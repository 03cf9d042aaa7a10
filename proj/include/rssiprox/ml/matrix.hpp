#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rssiprox::ml {

using Labels = std::vector<int>;

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    const std::vector<double>& values() const noexcept { return data_; }

    Matrix select_rows(std::span<const std::size_t> indices) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Labels select(const Labels& labels, std::span<const std::size_t> indices);

/// Shared precondition check for trainers: shapes agree, labels are 0/1,
/// no NaN/inf features, at least one row, and optionally both classes.
/// Throws std::invalid_argument.
void check_training_set(const Matrix& x, const Labels& y, bool require_both_classes);

/// Throws std::invalid_argument when x does not have `expected` columns.
void check_columns(const Matrix& x, std::size_t expected);

} // namespace rssiprox::ml
