#include "octo/linalg.hpp"

#include <algorithm>

namespace octo {

namespace {

using IntMat = std::vector<std::vector<BigInt>>;

// Clear denominators row by row; row scaling preserves rank, row space
// and nullspace.
IntMat to_integer_rows(const Matrix& m) {
    IntMat out(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            out[i][j] = x.numerator() * (l / x.denominator());
        }
    }
    return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0)
        throw InternalError("fraction-free elimination produced a non-exact division");
    return q;
}

// Bareiss fraction-free forward elimination, row swaps only, columns left
// to right. Returns the pivot columns; `m` becomes an integer echelon form.
std::vector<std::size_t> ff_forward(IntMat& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t rows = m.size(), cols = m[0].size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

struct Rref {
    std::vector<Vec> rows;               // the nonzero RREF rows
    std::vector<std::size_t> pivot_cols; // ascending
    std::size_t cols = 0;
};

Rref rref_of(const Matrix& m) {
    IntMat im = to_integer_rows(m);
    Rref out;
    out.cols = m.cols();
    out.pivot_cols = ff_forward(im);
    const std::size_t rk = out.pivot_cols.size();

    // Back-substitution over rationals on the integer echelon form.
    std::vector<Vec> rr(rk, Vec(out.cols));
    for (std::size_t r = rk; r-- > 0;) {
        const std::size_t pc = out.pivot_cols[r];
        Vec row(out.cols);
        Rational piv(im[r][pc]);
        for (std::size_t j = pc; j < out.cols; ++j)
            row[j] = Rational(im[r][j]) / piv;
        for (std::size_t s = r + 1; s < rk; ++s) {
            const Rational f = row[out.pivot_cols[s]];
            if (f.is_zero()) continue;
            for (std::size_t j = out.pivot_cols[s]; j < out.cols; ++j)
                row[j] -= f * rr[s][j];
        }
        rr[r] = std::move(row);
    }
    out.rows = std::move(rr);
    return out;
}

Matrix stack(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return Matrix(0, 0);
    const std::size_t cols = vectors[0].size();
    Matrix m(vectors.size(), cols);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != cols)
            throw DomainError("span of vectors with mixed lengths");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = vectors[i][j];
    }
    return m;
}

} // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntMat im = to_integer_rows(m);
    return ff_forward(im).size();
}

std::vector<Vec> nullspace_basis(const Matrix& m) {
    const std::size_t n = m.cols();
    Rref r = (m.rows() == 0 || n == 0) ? Rref{{}, {}, n} : rref_of(m);
    std::vector<Vec> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (next_pivot < r.pivot_cols.size() && r.pivot_cols[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        Vec v(n);
        v[f] = 1;
        for (std::size_t s = 0; s < r.pivot_cols.size(); ++s)
            v[r.pivot_cols[s]] = -r.rows[s][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size())
        throw DomainError("solve: right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref r = rref_of(aug);
    for (std::size_t pc : r.pivot_cols)
        if (pc == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t s = 0; s < r.pivot_cols.size(); ++s)
        x[r.pivot_cols[s]] = r.rows[s][a.cols()];
    return x;
}

std::size_t span_rank(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    return rank(stack(vectors));
}

std::vector<Vec> span_rref_basis(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    return rref_of(stack(vectors)).rows;
}

} // namespace octo
