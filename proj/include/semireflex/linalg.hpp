#pragma once

#include "semireflex/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace semireflex {

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Int>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw dimension_error("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;

Rational dot(const RatVector& a, const RatVector& b);
Int dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

RatVector to_rational(const IntVector& v);
bool is_zero(const RatVector& v);
bool is_zero(const IntVector& v);

/// Unique exact solution of A x = b for square nonsingular A; nullopt when
/// singular. Fraction-free elimination over the integers after clearing
/// denominators row by row.
std::optional<RatVector> solve_linear_system(const RatMatrix& a, const RatVector& b);

/// Exact rank by the same fraction-free elimination.
int rank(const RatMatrix& a);
int rank(const IntMatrix& a);

Int determinant(const IntMatrix& a);

struct HnfResult {
    IntMatrix h;  // row-style Hermite normal form
    IntMatrix u;  // unimodular, u * a = h
};

/// Row-style Hermite normal form H = U*A with det(U) = +-1. Pivots are
/// positive, entries below a pivot are zero, entries above lie in [0, pivot),
/// pivot columns strictly increase and zero rows sit at the bottom.
HnfResult hermite_normal_form(const IntMatrix& a);

/// Exact inverse of a unimodular integer matrix (integer again).
IntMatrix unimodular_inverse(const IntMatrix& u);

/// The unique positive multiple of v that is integral with entry gcd 1.
IntVector primitive_integer_vector(const RatVector& v);
IntVector primitive_integer_vector(const IntVector& v);

}  // namespace semireflex
