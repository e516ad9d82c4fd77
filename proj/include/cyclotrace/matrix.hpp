#pragma once

#include "cyclotrace/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <vector>

namespace cyclo {

// Sparse matrix over the rationals, row-major: one ordered (column -> value)
// map per row.  Stored values are never zero.
class Matrix {
public:
    Matrix() = default;
    Matrix(Index rows, Index cols);

    static Matrix identity(Index n);
    // Dense construction for tests and config files.
    static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    // Zero entries read back as 0; setting an entry to 0 erases it.
    const Rational& at(Index row, Index col) const;
    void set(Index row, Index col, const Rational& value);
    void add_at(Index row, Index col, const Rational& value);

    const std::map<Index, Rational>& row(Index row) const;

    Index nnz() const;
    bool is_zero() const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix scaled(const Rational& factor) const;
    Matrix transpose() const;

    // Kronecker product with row-major pair indexing:
    // entry ((i_a, i_b), (j_a, j_b)) at (i_a * b.rows + i_b, j_a * b.cols + j_b).
    static Matrix kron(const Matrix& a, const Matrix& b);

    static Matrix hcat(const Matrix& left, const Matrix& right);
    static Matrix vcat(const Matrix& top, const Matrix& bottom);

    // Column as an (rows x 1) matrix; used when slicing spans.
    Matrix col_slice(Index first, Index count) const;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<std::map<Index, Rational>> data_;

    void check_bounds(Index row, Index col) const;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace cyclo
