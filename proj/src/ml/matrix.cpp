#include "rssiprox/ml/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rssiprox::ml {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("Matrix: value count does not match shape");
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= rows_) {
            throw std::out_of_range("Matrix::select_rows: row index out of range");
        }
        const auto src = row(indices[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

Labels select(const Labels& labels, std::span<const std::size_t> indices) {
    Labels out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(labels.at(i));
    }
    return out;
}

void check_training_set(const Matrix& x, const Labels& y, bool require_both_classes) {
    if (x.rows() == 0) {
        throw std::invalid_argument("training set is empty");
    }
    if (x.rows() != y.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.rows()) + " rows but " +
                                    std::to_string(y.size()) + " labels");
    }
    for (double v : x.values()) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite feature value");
        }
    }
    bool has0 = false;
    bool has1 = false;
    for (int label : y) {
        if (label == 0) has0 = true;
        else if (label == 1) has1 = true;
        else throw std::invalid_argument("labels must be 0 or 1");
    }
    if (require_both_classes && !(has0 && has1)) {
        throw std::invalid_argument("training set must contain both classes");
    }
}

void check_columns(const Matrix& x, std::size_t expected) {
    if (x.cols() != expected) {
        throw std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                                    " columns, got " + std::to_string(x.cols()));
    }
}

} // namespace rssiprox::ml
