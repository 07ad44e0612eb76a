#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace lscd {

/// Minimal column-major dense matrix. Columns are contiguous so the vector
/// kernels can run over them directly.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // rows*cols, column-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* col(std::size_t j) {
        assert(j < cols);
        return data.data() + j * rows;
    }
    const double* col(std::size_t j) const {
        assert(j < cols);
        return data.data() + j * rows;
    }
    double& at(std::size_t i, std::size_t j) {
        assert(i < rows && j < cols);
        return data[j * rows + i];
    }
    double at(std::size_t i, std::size_t j) const {
        assert(i < rows && j < cols);
        return data[j * rows + i];
    }
};

} // namespace lscd
