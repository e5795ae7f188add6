#ifndef OTKIT_MATRIX_HPP
#define OTKIT_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "otkit/rational.hpp"

namespace otk {

// Dense matrix of rationals, row-major. All operations are exact.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<QVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }
    const Rational& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }

    QVector row(std::size_t i) const;
    QVector col(std::size_t j) const;
    RationalMatrix transposed() const;
    RationalMatrix columns_subset(const std::vector<std::size_t>& cols) const;

    // M * v
    QVector apply(const QVector& v) const;

    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank = 0;
};

// Reduced row echelon form; unique for a given input.
RrefResult rref(RationalMatrix m);

std::size_t rank_of(const RationalMatrix& m);

// Row-space basis held in RREF. Two bases describe the same subspace exactly
// when they compare equal entrywise.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient_dim)
        : ambient_(ambient_dim), vectors_(0, ambient_dim) {}

    static SubspaceBasis from_vectors(std::size_t ambient_dim,
                                      const std::vector<QVector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return vectors_.rows(); }
    const RationalMatrix& vectors() const { return vectors_; }
    QVector vector(std::size_t i) const { return vectors_.row(i); }

    bool contains(const QVector& v) const;

    bool operator==(const SubspaceBasis& other) const = default;

private:
    SubspaceBasis(std::size_t ambient_dim, RationalMatrix rref_rows)
        : ambient_(ambient_dim), vectors_(std::move(rref_rows)) {}

    std::size_t ambient_ = 0;
    RationalMatrix vectors_;  // dim x ambient, RREF, no zero rows
};

// Basis of {v : m v = 0}; dimension cols - rank.
SubspaceBasis kernel_basis(const RationalMatrix& m);

// Any particular solution c of (columns) c = target, where the columns of m
// span the search space. Empty optional when the system is inconsistent.
std::optional<QVector> solve_columns(const RationalMatrix& m, const QVector& target);

}  // namespace otk

#endif
