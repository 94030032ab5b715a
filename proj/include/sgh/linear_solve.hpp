#pragma once

#include <cstddef>
#include <vector>

#include "sgh/rational.hpp"

namespace sgh {

struct SingularSystem : Error {
    SingularSystem() : Error("linear system is singular") {}
};

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Solves A x = b exactly by Gaussian elimination, pivoting on the first
/// nonzero entry of each column. Throws SingularSystem if A is singular.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace sgh
