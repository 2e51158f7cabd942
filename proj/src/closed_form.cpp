#include "cartankit/closed_form.hpp"

#include <algorithm>
#include <functional>

#include "cartankit/catalog.hpp"
#include "cartankit/errors.hpp"
#include "cartankit/linalg.hpp"

namespace cartankit {

namespace {

void check_range(long n, long i, long j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw InvalidParams("entry index out of range");
}

Matrix from_entries(long size, const std::function<Rational(long, long)>& entry) {
    Matrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (long i = 1; i <= size; ++i)
        for (long j = 1; j <= size; ++j)
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = entry(i, j);
    return m;
}

} // namespace

Rational inv_entry_A(long n, long i, long j) {
    check_range(n, i, j);
    return Rational(std::min(i, j)) - Rational(i * j, n + 1);
}

Rational inv_entry_B(long n, long i, long j) {
    if (n < 2) throw InvalidParams("inv_entry_B: n >= 2");
    check_range(n, i, j);
    if (i < n) return std::min(i, j);
    return Rational(j, 2);
}

Rational inv_entry_C(long n, long i, long j) { return inv_entry_B(n, j, i); }

Rational inv_entry_D(long n, long i, long j) {
    if (n < 2) throw InvalidParams("inv_entry_D: n >= 2");
    check_range(n, i, j);
    const long lo = std::min(i, j), hi = std::max(i, j);
    if (hi <= n - 2) return lo;
    if (lo < n - 1) return Rational(lo, 2);          // hi is n-1 or n
    if (lo == hi) return Rational(n, 4);             // (n-1,n-1) or (n,n)
    return Rational(n - 2, 4);                       // (n-1,n)
}

Rational inv_entry_S(long n, long i, long j) {
    check_range(n, i, j);
    return std::min(i, j);
}

Rational inv_entry_R(long n, long i, long j) {
    if (n < 2) throw InvalidParams("inv_entry_R: n >= 2");
    check_range(n, i, j);
    return Rational(std::min(i, j)) - Rational(i * j, n - 1);
}

Rational inv_entry_superA(long m, long n, long i, long j) {
    if (m < 0 || n < 0 || m == n) throw InvalidParams("inv_entry_superA: need m, n >= 0, m != n");
    check_range(m + n + 1, i, j);
    const long split = m + 1;
    if (i <= split && j <= split)
        return Rational(std::min(i, j)) + make_rational(i * j, n - m);
    if (i <= split)                                           // L2, column j - (m+1)
        return make_rational(i * (n + 1 - (j - split)), n - m);
    if (j <= split)                                           // L3 = L2^T
        return make_rational(j * (n + 1 - (i - split)), n - m);
    const long bi = i - split, bj = j - split;                // L4
    return make_rational((m + 1) * (n + 1 - bi - bj) + bi * bj, n - m) -
           Rational(std::min(bi, bj));
}

Rational inv_entry_superB(long m, long n, long i, long j) {
    if (m < 1 || n < 1) throw InvalidParams("inv_entry_superB: need m, n >= 1");
    check_range(m + n, i, j);
    if (i == m + n) {
        if (j <= n) return Rational(-j, 2);
        return Rational(j, 2) - n;
    }
    if (i <= n || j <= n) return -std::min(i, j);
    return Rational(std::min(i, j) - 2 * n);
}

Rational inv_entry_superB0(long n, long i, long j) { return -inv_entry_B(n, i, j); }

Rational inv_entry_superC(long n, long i, long j) {
    if (n < 2) throw InvalidParams("inv_entry_superC: n >= 2");
    check_range(n, i, j);
    if (j < n) return 2 - std::min(i, j);
    return 1 - Rational(i, 2);
}

Rational inv_entry_superD1(long m, long i, long j) {
    if (m < 2) throw InvalidParams("inv_entry_superD1: m >= 2");
    check_range(m + 1, i, j);
    const long lo = std::min(i, j), hi = std::max(i, j);
    if (hi <= m - 1) return lo - 2;
    if (lo < m) return Rational(lo, 2) - 1;          // hi is m or m+1
    if (lo == hi) return Rational(m - 1, 4);
    return Rational(m - 3, 4);                       // (m, m+1)
}

Rational inv_entry_superD(long m, long n, long i, long j) {
    if (m < 2 || n < 2) throw InvalidParams("inv_entry_superD: need m, n >= 2");
    check_range(m + n, i, j);
    const long lo = std::min(i, j), hi = std::max(i, j);
    if (lo <= n) {
        if (hi <= m + n - 2) return -lo;
        return Rational(-lo, 2);                     // hi is m+n-1 or m+n
    }
    if (hi < m + n - 1) return lo - 2 * n;
    if (lo < m + n - 1) return Rational(lo, 2) - n;  // hi is m+n-1 or m+n
    if (lo == hi) return Rational(m - n, 4);
    return Rational(m - n - 2, 4);                   // (m+n-1, m+n)
}

Matrix inverse_exceptional(Family name, const std::optional<Rational>& alpha) {
    switch (name) {
        case Family::E6: {
            Matrix m = {{4, 3, 5, 6, 4, 2},
                        {3, 6, 6, 9, 6, 3},
                        {5, 6, 10, 12, 8, 4},
                        {6, 9, 12, 18, 12, 6},
                        {4, 6, 8, 12, 10, 5},
                        {2, 3, 4, 6, 5, 4}};
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j) m(i, j) /= 3;
            return m;
        }
        case Family::E7: {
            Matrix m = {{4, 4, 6, 8, 6, 4, 2},
                        {4, 7, 8, 12, 9, 6, 3},
                        {6, 8, 12, 16, 12, 8, 4},
                        {8, 12, 16, 24, 18, 12, 6},
                        {6, 9, 12, 18, 15, 10, 5},
                        {4, 6, 8, 12, 10, 8, 4},
                        {2, 3, 4, 6, 5, 4, 3}};
            for (std::size_t i = 0; i < 7; ++i)
                for (std::size_t j = 0; j < 7; ++j) m(i, j) /= 2;
            return m;
        }
        case Family::E8:
            return {{4, 5, 7, 10, 8, 6, 4, 2},
                    {5, 8, 10, 15, 12, 9, 6, 3},
                    {7, 10, 14, 20, 16, 12, 8, 4},
                    {10, 15, 20, 30, 24, 18, 12, 6},
                    {8, 12, 16, 24, 20, 15, 10, 5},
                    {6, 9, 12, 18, 15, 12, 8, 4},
                    {4, 6, 8, 12, 10, 8, 6, 3},
                    {2, 3, 4, 6, 5, 4, 3, 2}};
        case Family::F4:
            return {{2, 3, 4, 2},
                    {3, 6, 8, 4},
                    {2, 4, 6, 3},
                    {1, 2, 3, 2}};
        case Family::G2:
            return {{2, 1},
                    {3, 2}};
        case Family::SuperF4: {
            Matrix m = {{2, -3, -4, -2},
                        {3, 0, 0, 0},
                        {2, 0, 2, 1},
                        {1, 0, 1, 2}};
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m(i, j) /= 3;
            return m;
        }
        case Family::SuperG3: {
            Matrix m = {{1, -2, -3},
                        {2, 0, 0},
                        {1, 0, 1}};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) /= 2;
            return m;
        }
        case Family::D21Alpha: {
            if (!alpha) throw InvalidParams("D21alpha: alpha required");
            FamilySpec check = FamilySpec::d21(*alpha);
            validate(check);
            const Rational a = *alpha;
            const Rational s = 1 / (1 + a);
            const Rational h = a / 2;
            const Rational half(1, 2);
            Matrix m = {{2, -1, -a},
                        {1, h, -h},
                        {1, -half, half}};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) *= s;
            return m;
        }
        default:
            throw InvalidParams("inverse_exceptional: not an exceptional family");
    }
}

Matrix inverse_matrix(const FamilySpec& spec) {
    validate(spec);
    const long m = spec.m, n = spec.n;
    switch (spec.family) {
        case Family::A:
            return from_entries(n, [n](long i, long j) { return inv_entry_A(n, i, j); });
        case Family::B:
            return from_entries(n, [n](long i, long j) { return inv_entry_B(n, i, j); });
        case Family::C:
            return from_entries(n, [n](long i, long j) { return inv_entry_C(n, i, j); });
        case Family::D:
            return from_entries(n, [n](long i, long j) { return inv_entry_D(n, i, j); });
        case Family::S:
            return from_entries(n, [n](long i, long j) { return inv_entry_S(n, i, j); });
        case Family::R:
            return from_entries(n, [n](long i, long j) { return inv_entry_R(n, i, j); });
        case Family::SuperA:
            return from_entries(m + n + 1,
                                [m, n](long i, long j) { return inv_entry_superA(m, n, i, j); });
        case Family::SuperB:
            return from_entries(m + n,
                                [m, n](long i, long j) { return inv_entry_superB(m, n, i, j); });
        case Family::SuperB0:
            return from_entries(n, [n](long i, long j) { return inv_entry_superB0(n, i, j); });
        case Family::SuperC:
            return from_entries(n, [n](long i, long j) { return inv_entry_superC(n, i, j); });
        case Family::SuperD:
            if (n == 1)
                return from_entries(m + 1,
                                    [m](long i, long j) { return inv_entry_superD1(m, i, j); });
            return from_entries(m + n,
                                [m, n](long i, long j) { return inv_entry_superD(m, n, i, j); });
        case Family::E6: case Family::E7: case Family::E8:
        case Family::F4: case Family::G2:
        case Family::SuperF4: case Family::SuperG3:
            return inverse_exceptional(spec.family);
        case Family::D21Alpha:
            return inverse_exceptional(Family::D21Alpha, spec.alpha);
    }
    throw InvalidParams("inverse_matrix: unknown family");
}

namespace {

// S_n^{-1} closed form: the root of every pipeline.
Matrix proof_s_inv(long n) {
    return from_entries(n, [n](long i, long j) { return inv_entry_S(n, i, j); });
}

// A_n = S_n + e_n e_n^T.
Matrix proof_a_inv(long n) {
    const std::size_t nn = static_cast<std::size_t>(n);
    const Vector en = unit_vector(nn, nn);
    return rank_one_update_inverse(proof_s_inv(n), en, en);
}

// B_n = S_n + (e_n - e_{n-1}) e_n^T for n >= 2; the 1x1 block B_1 = [2]
// updates from S_1 = [1] directly.
Matrix proof_b_inv(long n) {
    const std::size_t nn = static_cast<std::size_t>(n);
    const Vector en = unit_vector(nn, nn);
    if (n == 1) return rank_one_update_inverse(proof_s_inv(1), en, en);
    Vector c = en;
    c[nn - 2] = -1;
    return rank_one_update_inverse(proof_s_inv(n), c, en);
}

// R_n = S_n - e_n e_n^T (n >= 2).
Matrix proof_r_inv(long n) {
    const std::size_t nn = static_cast<std::size_t>(n);
    const Vector en = unit_vector(nn, nn);
    Vector c(nn);
    c[nn - 1] = -1;
    return rank_one_update_inverse(proof_s_inv(n), c, en);
}

// D_n = [[A_{n-1}, -e_{n-2}], [-e_{n-2}^T, 2]]; the 1x1 Schur complement
// works out to 4/n. D_2 degenerates to a block-diagonal split.
Matrix proof_d_inv(long n) {
    const std::size_t top = static_cast<std::size_t>(n - 1);
    Matrix u(top, 1);
    Matrix v(1, top);
    if (n >= 3) {
        u(top - 2, 0) = -1;
        v(0, top - 2) = -1;
    }
    Matrix w = {{2}};
    return block_inverse(proof_a_inv(n - 1), u, v, w);
}

Matrix proof_super_b_inv(long m, long n);

Matrix proof_super_a_inv(long m, long n) {
    if (n == 0) return proof_r_inv(m + 1);                       // A_{m,0} = R_{m+1}
    if (m == 0) return -(proof_r_inv(n + 1).reversed());         // mirror image of R_{n+1}
    // A_{m,n} = U + e_{m+2} e_{m+1}^T with U = [[R_{m+1}, e_{m+1} e_1^T], [0, -A_n]].
    const std::size_t p = static_cast<std::size_t>(m + 1);
    const std::size_t q = static_cast<std::size_t>(n);
    Matrix u_block(p, q);
    u_block(p - 1, 0) = 1;
    Matrix zero(q, p);
    FamilySpec an = FamilySpec::simple(Family::A, n);
    const Matrix w = -build_simple(an);
    const Matrix u_inv =
        block_inverse_with(proof_r_inv(m + 1), u_block, zero, w, -proof_a_inv(n));
    const std::size_t size = p + q;
    return rank_one_update_inverse(u_inv, unit_vector(size, p + 1), unit_vector(size, p));
}

Matrix proof_super_b_inv(long m, long n) {
    const std::size_t size = static_cast<std::size_t>(m + n);
    if (n == 1) {
        // B_{m,1} = B_{m+1} - 2 e_1 e_1^T.
        Vector c(size);
        c[0] = -2;
        return rank_one_update_inverse(proof_b_inv(m + 1), c, unit_vector(size, 1));
    }
    // B_{m,n} = V - e_{n+1} e_n^T with V = [[-R_n, *], [0, B_m]]; the * block
    // holds the isotropic-row connection (-2 toward the short root when m = 1).
    const std::size_t p = static_cast<std::size_t>(n);
    const std::size_t q = static_cast<std::size_t>(m);
    Matrix u_block(p, q);
    u_block(p - 1, 0) = (m == 1) ? -2 : -1;
    Matrix zero(q, p);
    Matrix w;
    if (m == 1) {
        w = Matrix{{2}};
    } else {
        FamilySpec bm = FamilySpec::simple(Family::B, m);
        w = build_simple(bm);
    }
    const Matrix v_inv =
        block_inverse_with(-proof_r_inv(n), u_block, zero, w, proof_b_inv(m));
    Vector c(size);
    c[p] = -1;
    return rank_one_update_inverse(v_inv, c, unit_vector(size, p));
}

Matrix proof_super_d_inv(long m, long n) {
    const std::size_t size = static_cast<std::size_t>(m + n);
    if (n == 1) {
        // D_{m,1} = D_{m+1} - 2 e_1 e_1^T.
        Vector c(size);
        c[0] = -2;
        return rank_one_update_inverse(proof_d_inv(m + 1), c, unit_vector(size, 1));
    }
    // D_{m,n} = V - (update) with V = [[-R_n, *], [0, D_m]]; for m = 2 the
    // isotropic node pairs with both fork nodes, so the connection stays
    // rank one with a two-entry column.
    const std::size_t p = static_cast<std::size_t>(n);
    const std::size_t q = static_cast<std::size_t>(m);
    Matrix u_block(p, q);
    u_block(p - 1, 0) = -1;
    if (m == 2) u_block(p - 1, 1) = -1;
    Matrix zero(q, p);
    FamilySpec dm = FamilySpec::simple(Family::D, m);
    const Matrix v_inv =
        block_inverse_with(-proof_r_inv(n), u_block, zero, build_simple(dm), proof_d_inv(m));
    Vector c(size);
    c[p] = -1;
    if (m == 2) c[p + 1] = -1;
    return rank_one_update_inverse(v_inv, c, unit_vector(size, p));
}

} // namespace

bool has_proof_path(const FamilySpec& spec) { return !is_exceptional(spec.family); }

Matrix inverse_via_proof_path(const FamilySpec& spec) {
    validate(spec);
    const long m = spec.m, n = spec.n;
    switch (spec.family) {
        case Family::S: return proof_s_inv(n);
        case Family::A: return proof_a_inv(n);
        case Family::B: return proof_b_inv(n);
        case Family::C: return proof_b_inv(n).transpose();
        case Family::R: return proof_r_inv(n);
        case Family::D: return proof_d_inv(n);
        case Family::SuperA: return proof_super_a_inv(m, n);
        case Family::SuperB: return proof_super_b_inv(m, n);
        case Family::SuperB0: return -proof_b_inv(n);
        case Family::SuperC: return -(proof_super_b_inv(n - 1, 1).transpose());
        case Family::SuperD: return proof_super_d_inv(m, n);
        default:
            throw InvalidParams("inverse_via_proof_path: no update pipeline for " +
                                family_name(spec.family));
    }
}

SpecialVector special_vector(SpecialVectorKind kind, std::size_t length) {
    switch (kind) {
        case SpecialVectorKind::Ascending: {
            if (length < 1) throw InvalidParams("ascending: length >= 1");
            Vector v(length);
            for (std::size_t i = 0; i < length; ++i) v[i] = static_cast<long>(i + 1);
            return {kind, length, v};
        }
        case SpecialVectorKind::Descending: {
            if (length < 1) throw InvalidParams("descending: length >= 1");
            Vector v(length);
            for (std::size_t i = 0; i < length; ++i) v[i] = static_cast<long>(length - i);
            return {kind, length, v};
        }
        case SpecialVectorKind::Ones: {
            if (length < 1) throw InvalidParams("ones: length >= 1");
            Vector v(length, Rational(1));
            return {kind, length, v};
        }
        case SpecialVectorKind::B: {
            if (length < 1) throw InvalidParams("b_m: m >= 1");
            Vector v(length, Rational(1));
            v[length - 1] = Rational(1, 2);
            return {kind, length, v};
        }
        case SpecialVectorKind::D: {
            if (length < 2) throw InvalidParams("d_k: k >= 2");
            Vector v(length, Rational(1));
            v[length - 1] = Rational(1, 2);
            v[length - 2] = Rational(1, 2);
            return {kind, length, v};
        }
        case SpecialVectorKind::DProof: {
            if (length < 2) throw InvalidParams("dproof: n >= 2");
            const long n = static_cast<long>(length);
            Vector v(length - 1);
            for (long i = 1; i <= n - 2; ++i) v[static_cast<std::size_t>(i - 1)] = i;
            v[length - 2] = Rational(n - 2, 2);
            return {kind, v.size(), v};
        }
    }
    throw InvalidParams("special_vector: unknown kind");
}

} // namespace cartankit
