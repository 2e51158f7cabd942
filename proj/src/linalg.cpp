#include "cartankit/linalg.hpp"

namespace cartankit {

Matrix invert_exact(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("invert_exact: matrix not square");
    const std::size_t n = m.rows();

    // Augmented [M | I], reduced in place to [I | M^{-1}].
    Matrix work(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j);
        work(i, n + i) = 1;
    }

    for (std::size_t col = 0; col < n; ++col) {
        // First nonzero pivot at or below the diagonal.
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0) ++pivot;
        if (pivot == n) throw SingularError("invert_exact: singular matrix", col);
        if (pivot != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(work(pivot, j), work(col, j));

        const Rational inv_pivot = 1 / work(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) work(col, j) *= inv_pivot;

        for (std::size_t row = 0; row < n; ++row) {
            if (row == col) continue;
            const Rational factor = work(row, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) work(row, j) -= factor * work(col, j);
        }
    }

    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = work(i, n + j);
    return inv;
}

Matrix rank_one_update_inverse(const Matrix& a_inv, const Vector& c, const Vector& d) {
    if (a_inv.rows() != a_inv.cols()) throw DimensionError("rank_one_update_inverse: not square");
    const std::size_t n = a_inv.rows();
    if (c.size() != n || d.size() != n)
        throw DimensionError("rank_one_update_inverse: vector length mismatch");

    const Vector ac = mat_vec(a_inv, c);   // A^{-1} c
    const Vector da = vec_mat(d, a_inv);   // d^T A^{-1}
    const Rational denom = 1 + dot(d, ac);
    if (denom == 0)
        throw UpdateSingularError("rank_one_update_inverse: 1 + d^T A^{-1} c = 0");

    Matrix result = a_inv;
    for (std::size_t i = 0; i < n; ++i) {
        if (ac[i] == 0) continue;
        const Rational scale = ac[i] / denom;
        for (std::size_t j = 0; j < n; ++j)
            if (da[j] != 0) result(i, j) -= scale * da[j];
    }
    return result;
}

Matrix block_inverse_with(const Matrix& t_inv, const Matrix& u, const Matrix& v,
                          const Matrix& w, const Matrix& s_inv) {
    const std::size_t p = t_inv.rows();
    const std::size_t q = w.rows();
    if (t_inv.cols() != p || w.cols() != q || u.rows() != p || u.cols() != q ||
        v.rows() != q || v.cols() != p || s_inv.rows() != q || s_inv.cols() != q)
        throw DimensionError("block_inverse: blocks not conformal");

    const Matrix tu = mat_mul(t_inv, u);               // T^{-1} U
    const Matrix vt = mat_mul(v, t_inv);               // V T^{-1}
    const Matrix tus = mat_mul(tu, s_inv);             // T^{-1} U S^{-1}
    const Matrix svt = mat_mul(s_inv, vt);             // S^{-1} V T^{-1}
    const Matrix top_left = mat_add(t_inv, mat_mul(tus, vt));

    Matrix result(p + q, p + q);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) result(i, j) = top_left(i, j);
        for (std::size_t j = 0; j < q; ++j) result(i, p + j) = -tus(i, j);
    }
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < p; ++j) result(p + i, j) = -svt(i, j);
        for (std::size_t j = 0; j < q; ++j) result(p + i, p + j) = s_inv(i, j);
    }
    return result;
}

Matrix block_inverse(const Matrix& t_inv, const Matrix& u, const Matrix& v, const Matrix& w) {
    const std::size_t p = t_inv.rows();
    const std::size_t q = w.rows();
    if (t_inv.cols() != p || w.cols() != q || u.rows() != p || u.cols() != q ||
        v.rows() != q || v.cols() != p)
        throw DimensionError("block_inverse: blocks not conformal");

    // Schur complement S = W - V T^{-1} U.
    Matrix s = w;
    const Matrix vtu = mat_mul(mat_mul(v, t_inv), u);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) s(i, j) -= vtu(i, j);
    return block_inverse_with(t_inv, u, v, w, invert_exact(s));
}

} // namespace cartankit
