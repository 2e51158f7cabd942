#ifndef CARTANKIT_MATRIX_HPP
#define CARTANKIT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cartankit/errors.hpp"
#include "cartankit/rational.hpp"

namespace cartankit {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals. Indices are 0-based here; the
// entry-formula evaluators speak 1-based and materialization shifts.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged initializer");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const Matrix& other) const = default;

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
        return m;
    }

    // Conjugation by the index-reversal permutation: entry (i,j) -> (n-1-i, n-1-j).
    Matrix reversed() const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(rows_ - 1 - i, cols_ - 1 - j) = (*this)(i, j);
        return m;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
bool is_identity(const Matrix& m);

// c * d^T as a full matrix.
Matrix outer(const Vector& c, const Vector& d);

Vector unit_vector(std::size_t length, std::size_t pos_1based);
Rational dot(const Vector& a, const Vector& b);
Vector mat_vec(const Matrix& a, const Vector& x);
Vector vec_mat(const Vector& x, const Matrix& a);

} // namespace cartankit

#endif
