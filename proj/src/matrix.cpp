#include "cyclotrace/matrix.hpp"

#include "cyclotrace/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace cyclo {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    std::string t = text;
    for (char c : t) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw ConfigError("bad rational literal '" + text + "'");
    }
    mpq_class r;
    if (r.set_str(t, 10) != 0) throw ConfigError("bad rational literal '" + text + "'");
    if (r.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

Matrix::Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
}

Matrix Matrix::identity(Index n) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m.data_[i].emplace(i, 1);
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Index nr = static_cast<Index>(rows.size());
    Index nc = nr == 0 ? 0 : static_cast<Index>(rows[0].size());
    Matrix m(nr, nc);
    for (Index i = 0; i < nr; ++i) {
        if (static_cast<Index>(rows[i].size()) != nc) throw MathError("ragged rows");
        for (Index j = 0; j < nc; ++j)
            if (rows[i][j] != 0) m.data_[i].emplace(j, rows[i][j]);
    }
    return m;
}

void Matrix::check_bounds(Index row, Index col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        std::ostringstream os;
        os << "matrix index (" << row << "," << col << ") out of " << rows_ << "x" << cols_;
        throw MathError(os.str());
    }
}

const Rational& Matrix::at(Index row, Index col) const {
    static const Rational zero = 0;
    check_bounds(row, col);
    auto it = data_[row].find(col);
    return it == data_[row].end() ? zero : it->second;
}

void Matrix::set(Index row, Index col, const Rational& value) {
    check_bounds(row, col);
    if (value == 0)
        data_[row].erase(col);
    else
        data_[row][col] = value;
}

void Matrix::add_at(Index row, Index col, const Rational& value) {
    check_bounds(row, col);
    auto it = data_[row].find(col);
    if (it == data_[row].end()) {
        if (value != 0) data_[row].emplace(col, value);
        return;
    }
    it->second += value;
    if (it->second == 0) data_[row].erase(it);
}

const std::map<Index, Rational>& Matrix::row(Index row) const {
    if (row < 0 || row >= rows_) throw MathError("row index out of range");
    return data_[row];
}

Index Matrix::nnz() const {
    Index n = 0;
    for (const auto& r : data_) n += static_cast<Index>(r.size());
    return n;
}

bool Matrix::is_zero() const { return nnz() == 0; }

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw MathError("shape mismatch in +");
    Matrix out = *this;
    for (Index i = 0; i < rows_; ++i)
        for (const auto& [j, v] : other.data_[i]) out.add_at(i, j, v);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw MathError("shape mismatch in -");
    Matrix out = *this;
    for (Index i = 0; i < rows_; ++i)
        for (const auto& [j, v] : other.data_[i]) out.add_at(i, j, -v);
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw MathError("shape mismatch in *");
    Matrix out(rows_, other.cols_);
    for (Index i = 0; i < rows_; ++i) {
        auto& acc = out.data_[i];
        for (const auto& [k, a] : data_[i]) {
            for (const auto& [j, b] : other.data_[k]) {
                auto it = acc.find(j);
                if (it == acc.end()) {
                    acc.emplace(j, a * b);
                } else {
                    it->second += a * b;
                    if (it->second == 0) acc.erase(it);
                }
            }
        }
    }
    return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
    Matrix out(rows_, cols_);
    if (factor == 0) return out;
    for (Index i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out.data_[i].emplace(j, v * factor);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (Index i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out.data_[j].emplace(i, v);
    return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (Index ia = 0; ia < a.rows_; ++ia) {
        for (const auto& [ja, va] : a.data_[ia]) {
            for (Index ib = 0; ib < b.rows_; ++ib) {
                auto& acc = out.data_[ia * b.rows_ + ib];
                for (const auto& [jb, vb] : b.data_[ib]) acc.emplace(ja * b.cols_ + jb, va * vb);
            }
        }
    }
    return out;
}

Matrix Matrix::hcat(const Matrix& left, const Matrix& right) {
    if (left.rows_ != right.rows_) throw MathError("row mismatch in hcat");
    Matrix out(left.rows_, left.cols_ + right.cols_);
    for (Index i = 0; i < left.rows_; ++i) {
        out.data_[i] = left.data_[i];
        for (const auto& [j, v] : right.data_[i]) out.data_[i].emplace(left.cols_ + j, v);
    }
    return out;
}

Matrix Matrix::vcat(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_) throw MathError("col mismatch in vcat");
    Matrix out(top.rows_ + bottom.rows_, top.cols_);
    for (Index i = 0; i < top.rows_; ++i) out.data_[i] = top.data_[i];
    for (Index i = 0; i < bottom.rows_; ++i) out.data_[top.rows_ + i] = bottom.data_[i];
    return out;
}

Matrix Matrix::col_slice(Index first, Index count) const {
    if (first < 0 || count < 0 || first + count > cols_) throw MathError("bad col_slice");
    Matrix out(rows_, count);
    for (Index i = 0; i < rows_; ++i) {
        auto lo = data_[i].lower_bound(first);
        auto hi = data_[i].lower_bound(first + count);
        for (auto it = lo; it != hi; ++it) out.data_[i].emplace(it->first - first, it->second);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << m.rows() << "x" << m.cols() << " [";
    for (Index i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        bool first = true;
        for (Index j = 0; j < m.cols(); ++j) {
            os << (first ? "" : " ") << rational_to_string(m.at(i, j));
            first = false;
        }
    }
    return os << "]";
}

} // namespace cyclo
