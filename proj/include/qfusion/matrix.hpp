#pragma once

#include <qfusion/rat.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace qfusion {

// Dense exact matrix. Row-major; rows are the natural unit (row spaces,
// kernels and intersections are what the ideal computations consume).
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<Rat>& row);
    std::vector<Rat> row(std::size_t i) const;

    Matrix transposed() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct RrefResult {
    Matrix m;  // same shape as input; pivots 1, pivot columns cleared, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Fraction-free (Bareiss) forward elimination with first-nonzero pivoting,
// then rational back-substitution. Canonical: equal row spans give equal
// trimmed results.
RrefResult rref(const Matrix& m);

std::size_t rank_of(const Matrix& m);

// RREF rows only (rank many); the canonical basis of the row space.
Matrix row_basis(const Matrix& m);

// Rows form a basis of { v : m v = 0 }, one per free column, ascending.
Matrix kernel_basis(const Matrix& m);

// Same, reusing an already computed RREF of the matrix.
Matrix kernel_from_rref(const RrefResult& r, std::size_t cols);

// Rows span row_space(a) ∩ row_space(b); returned in canonical RREF form.
Matrix subspace_intersection(const Matrix& a, const Matrix& b);

Matrix row_stack(const Matrix& a, const Matrix& b);

bool same_row_span(const Matrix& a, const Matrix& b);

// v reduced against an RREF basis; zero result means v lies in the span.
bool row_span_contains(const RrefResult& basis, std::vector<Rat> v);

// Forward-only echelon accumulator for rank sweeps over many rows.
// Rows are kept keyed by pivot column with leading entry normalized to 1.
class IncrementalEchelon {
  public:
    explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}

    // Returns true iff the row was independent of the current span.
    bool add(std::vector<Rat> v);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    // Forward reduction only; result is zero at every current pivot column.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    bool contains(std::vector<Rat> v) const;

    const std::map<std::size_t, std::vector<Rat>>& rows() const { return rows_; }

  private:
    std::size_t cols_;
    std::map<std::size_t, std::vector<Rat>> rows_;
};

}  // namespace qfusion
