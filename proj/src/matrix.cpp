#include "cartankit/matrix.hpp"

namespace cartankit {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions disagree");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (bkj == 0) continue;
                c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("mat_add: shapes disagree");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

bool is_identity(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix outer(const Vector& c, const Vector& d) {
    Matrix m(c.size(), d.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) m(i, j) = c[i] * d[j];
    }
    return m;
}

Vector unit_vector(std::size_t length, std::size_t pos_1based) {
    if (pos_1based < 1 || pos_1based > length)
        throw InvalidParams("unit_vector: position out of range");
    Vector v(length);
    v[pos_1based - 1] = 1;
    return v;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: lengths disagree");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector mat_vec(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw DimensionError("mat_vec: shapes disagree");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
}

Vector vec_mat(const Vector& x, const Matrix& a) {
    if (a.rows() != x.size()) throw DimensionError("vec_mat: shapes disagree");
    Vector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (x[i] != 0)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(i, j) != 0) y[j] += x[i] * a(i, j);
    return y;
}

} // namespace cartankit
