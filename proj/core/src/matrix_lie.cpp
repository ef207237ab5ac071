#include "octo/matrix_lie.hpp"

namespace octo {

namespace {

Matrix unflatten(const Vec& v, std::size_t n) {
    return Matrix(n, n, v);
}

bool is_symmetric(const Matrix& m) { return m == m.transpose(); }

bool is_skew(const Matrix& m) {
    Matrix t = m.transpose();
    return (m + t).is_zero();
}

void check_gamma_relations(const GammaSystem& g) {
    const Matrix id = Matrix::identity(g.rep_dim);
    for (std::size_t i = 0; i < g.gammas.size(); ++i) {
        const Matrix& gi = g.gammas[i];
        if (g.square_sign > 0 ? !is_symmetric(gi) : !is_skew(gi))
            throw InternalError("gamma matrix has wrong symmetry");
        for (std::size_t j = i; j < g.gammas.size(); ++j) {
            Matrix anti = gi * g.gammas[j] + g.gammas[j] * gi;
            if (i == j) {
                Matrix expect = id;
                expect *= Rational(2 * g.square_sign);
                if (anti != expect)
                    throw InternalError("gamma matrix square violates the Clifford relation");
            } else if (!anti.is_zero()) {
                throw InternalError("gamma matrices fail to anticommute");
            }
        }
    }
}

// 16x16 from 2x2 blocks of 8x8 matrices.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    Matrix m(16, 16);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(i, j + 8) = b.at(i, j);
            m.at(i + 8, j) = c.at(i, j);
            m.at(i + 8, j + 8) = d.at(i, j);
        }
    return m;
}

} // namespace

nlohmann::json matrix_algebra_to_json(const MatrixAlgebra& a) {
    nlohmann::json basis = nlohmann::json::array();
    for (const Matrix& m : a.basis) {
        nlohmann::json row = nlohmann::json::array();
        for (const Rational& x : m.entries())
            row.push_back(x.to_string());
        basis.push_back(row);
    }
    return {{"ambient_dim", a.ambient_dim}, {"basis", basis}};
}

bool closed_under_bracket(const MatrixAlgebra& a) {
    std::vector<Vec> rows;
    rows.reserve(a.dim() + a.dim() * a.dim() / 2);
    for (const Matrix& m : a.basis)
        rows.push_back(m.flatten());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            rows.push_back(bracket(a.basis[i], a.basis[j]).flatten());
    return span_rank(rows) == a.dim();
}

bool same_span(const MatrixAlgebra& a, const MatrixAlgebra& b) {
    if (a.ambient_dim != b.ambient_dim || a.dim() != b.dim()) return false;
    std::vector<Vec> rows;
    for (const Matrix& m : a.basis) rows.push_back(m.flatten());
    for (const Matrix& m : b.basis) rows.push_back(m.flatten());
    return span_rank(rows) == a.dim();
}

std::vector<Matrix> left_multiplication_operators() {
    const StructureConstants s = structure_constants(3);
    std::vector<Matrix> ops;
    for (std::size_t a = 1; a <= 7; ++a) {
        Matrix l(8, 8);
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t k = 0; k < 8; ++k)
                l.at(k, j) = s.c(a, j, k);
        ops.push_back(std::move(l));
    }
    return ops;
}

GammaSystem build_gamma_system(int n) {
    if (n < 1 || n > 9)
        throw DomainError("gamma system supports n = 1..9");
    GammaSystem g;
    g.n = n;
    const std::vector<Matrix> l = left_multiplication_operators();
    if (n <= 7) {
        g.rep_dim = 8;
        g.square_sign = -1;
        g.gammas.assign(l.begin(), l.begin() + n);
    } else {
        g.rep_dim = 16;
        g.square_sign = +1;
        const Matrix zero(8, 8);
        const Matrix id = Matrix::identity(8);
        for (int a = 0; a < 7; ++a) {
            Matrix neg = l[a];
            neg *= Rational(-1);
            g.gammas.push_back(block2x2(zero, l[a], neg, zero));
        }
        g.gammas.push_back(block2x2(zero, id, id, zero));
        if (n == 9) {
            Matrix p = g.gammas[0];
            for (int a = 1; a < 8; ++a)
                p = p * g.gammas[a];
            g.gammas.push_back(std::move(p));
        }
    }
    check_gamma_relations(g);
    return g;
}

MatrixAlgebra spin_algebra(const GammaSystem& g) {
    MatrixAlgebra a;
    a.ambient_dim = g.rep_dim;
    for (std::size_t i = 0; i < g.gammas.size(); ++i)
        for (std::size_t j = i + 1; j < g.gammas.size(); ++j)
            a.basis.push_back(g.gammas[i] * g.gammas[j]);
    std::vector<Vec> rows;
    for (const Matrix& m : a.basis) rows.push_back(m.flatten());
    if (span_rank(rows) != a.basis.size())
        throw InternalError("spin algebra bivectors are not independent");
    return a;
}

MatrixAlgebra derivation_algebra(const StructureConstants& s) {
    const std::size_t d = s.dimension;
    // Unknowns: D[l][m] at index l*d + m. One equation per (i, j, m):
    // coefficient of e_m in D(e_i e_j) - D(e_i) e_j - e_i D(e_j).
    Matrix sys(d * d * d, d * d);
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t m = 0; m < d; ++m, ++row) {
                for (std::size_t k = 0; k < d; ++k)
                    sys.at(row, m * d + k) += s.c(i, j, k);
                for (std::size_t l = 0; l < d; ++l) {
                    sys.at(row, l * d + i) -= s.c(l, j, m);
                    sys.at(row, l * d + j) -= s.c(i, l, m);
                }
            }
    MatrixAlgebra a;
    a.ambient_dim = d;
    for (const Vec& v : nullspace_basis(sys))
        a.basis.push_back(unflatten(v, d));
    return a;
}

MatrixAlgebra form_stabilizer(const ThreeForm& phi, std::size_t ambient_dim) {
    if (phi.dimension != ambient_dim)
        throw DomainError("form dimension must match the ambient dimension");
    const std::size_t n = ambient_dim;
    std::vector<Vec> rows;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            for (std::size_t c = b + 1; c <= n; ++c) {
                Vec row(n * n);
                for (std::size_t m = 1; m <= n; ++m) {
                    row[(m - 1) * n + (a - 1)] += phi.value(m, b, c);
                    row[(m - 1) * n + (b - 1)] += phi.value(a, m, c);
                    row[(m - 1) * n + (c - 1)] += phi.value(a, b, m);
                }
                rows.push_back(std::move(row));
            }
    Matrix sys(rows.size(), n * n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n * n; ++j)
            sys.at(i, j) = rows[i][j];
    MatrixAlgebra a;
    a.ambient_dim = n;
    for (const Vec& v : nullspace_basis(sys))
        a.basis.push_back(unflatten(v, n));
    return a;
}

MatrixAlgebra lie_closure(const std::vector<Matrix>& gens) {
    MatrixAlgebra a;
    if (gens.empty())
        return a;
    const std::size_t n = gens[0].rows();
    for (const Matrix& g : gens)
        if (g.rows() != n || g.cols() != n)
            throw DomainError("lie_closure requires square matrices of equal size");
    a.ambient_dim = n;

    std::vector<Vec> flats;
    for (const Matrix& g : gens)
        flats.push_back(g.flatten());
    std::vector<Vec> basis = span_rref_basis(flats);

    const std::size_t max_rounds = n * n;
    for (std::size_t round = 0; round <= max_rounds; ++round) {
        std::vector<Matrix> mats;
        for (const Vec& v : basis)
            mats.push_back(unflatten(v, n));
        std::vector<Vec> next = basis;
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t j = i + 1; j < mats.size(); ++j)
                next.push_back(bracket(mats[i], mats[j]).flatten());
        std::vector<Vec> reduced = span_rref_basis(next);
        if (reduced.size() == basis.size()) {
            a.basis = std::move(mats);
            return a;
        }
        basis = std::move(reduced);
    }
    throw InternalError("lie_closure failed to saturate within ambient_dim^2 rounds");
}

namespace {

// Columns are the images B_i v of the basis under evaluation at v.
Matrix evaluation_matrix(const MatrixAlgebra& a, const Vec& v) {
    if (is_zero_vec(v))
        throw DomainError("stabilizer/orbit at the zero vector");
    if (v.size() != a.ambient_dim)
        throw DomainError("point length must equal the ambient dimension");
    Matrix m(a.ambient_dim, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec img = a.basis[i] * v;
        for (std::size_t r = 0; r < a.ambient_dim; ++r)
            m.at(r, i) = img[r];
    }
    return m;
}

} // namespace

MatrixAlgebra point_stabilizer(const MatrixAlgebra& a, const Vec& v) {
    Matrix ev = evaluation_matrix(a, v);
    MatrixAlgebra stab;
    stab.ambient_dim = a.ambient_dim;
    for (const Vec& c : nullspace_basis(ev)) {
        Matrix x(a.ambient_dim, a.ambient_dim);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (c[i].is_zero()) continue;
            Matrix term = a.basis[i];
            term *= c[i];
            x += term;
        }
        stab.basis.push_back(std::move(x));
    }
    return stab;
}

std::size_t orbit_tangent_rank(const MatrixAlgebra& a, const Vec& v) {
    if (a.dim() == 0) {
        if (is_zero_vec(v))
            throw DomainError("stabilizer/orbit at the zero vector");
        return 0;
    }
    return rank(evaluation_matrix(a, v));
}

MatrixAlgebra classical_algebra(ClassicalFamily family, int n) {
    MatrixAlgebra a;
    switch (family) {
    case ClassicalFamily::so: {
        if (n < 1 || n > 16)
            throw DomainError("so(n) supported for n = 1..16");
        a.ambient_dim = static_cast<std::size_t>(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Matrix m(n, n);
                m.at(i, j) = 1;
                m.at(j, i) = -1;
                a.basis.push_back(std::move(m));
            }
        return a;
    }
    case ClassicalFamily::su_realified: {
        if (n < 1 || n > 8)
            throw DomainError("su(n) realified supported for n = 1..8");
        a.ambient_dim = static_cast<std::size_t>(2 * n);
        // Complex entry (p, q) = x + iy realifies to the 2x2 block
        // [[x, -y], [y, x]] at rows/cols (2p, 2p+1) x (2q, 2q+1).
        auto put = [&](Matrix& m, int p, int q, long re, long im) {
            m.at(2 * p, 2 * q) += re;
            m.at(2 * p + 1, 2 * q + 1) += re;
            m.at(2 * p, 2 * q + 1) -= im;
            m.at(2 * p + 1, 2 * q) += im;
        };
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                Matrix re(2 * n, 2 * n);
                put(re, p, q, 1, 0);
                put(re, q, p, -1, 0);
                a.basis.push_back(std::move(re));
                Matrix im(2 * n, 2 * n);
                put(im, p, q, 0, 1);
                put(im, q, p, 0, 1);
                a.basis.push_back(std::move(im));
            }
        for (int p = 0; p + 1 < n; ++p) {
            Matrix d(2 * n, 2 * n);
            put(d, p, p, 0, 1);
            put(d, p + 1, p + 1, 0, -1);
            a.basis.push_back(std::move(d));
        }
        return a;
    }
    case ClassicalFamily::sp_realified: {
        if (n < 1 || n > 4)
            throw DomainError("sp(n) realified supported for n = 1..4");
        a.ambient_dim = static_cast<std::size_t>(4 * n);
        // Left multiplication by 1, i, j, k on H = R^4.
        const int units[4][4][4] = {
            {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
            {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
            {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}},
            {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}};
        auto put = [&](Matrix& m, int p, int q, int unit, int sign) {
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    if (units[unit][r][c] != 0)
                        m.at(4 * p + r, 4 * q + c) += sign * units[unit][r][c];
        };
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                Matrix re(4 * n, 4 * n);
                put(re, p, q, 0, 1);
                put(re, q, p, 0, -1);
                a.basis.push_back(std::move(re));
                for (int u = 1; u <= 3; ++u) {
                    Matrix m(4 * n, 4 * n);
                    put(m, p, q, u, 1);
                    put(m, q, p, u, 1);
                    a.basis.push_back(std::move(m));
                }
            }
        for (int p = 0; p < n; ++p)
            for (int u = 1; u <= 3; ++u) {
                Matrix m(4 * n, 4 * n);
                put(m, p, p, u, 1);
                a.basis.push_back(std::move(m));
            }
        return a;
    }
    }
    throw DomainError("unsupported classical family");
}

} // namespace octo
