#include <random>

#include "doctest.h"
#include "octo/linalg.hpp"

using octo::Matrix;
using octo::Rational;
using octo::Vec;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(octo::rank(Matrix::identity(3)) == 3);
    CHECK(octo::rank(Matrix(4, 4)) == 0);
    CHECK(octo::rank(from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
    CHECK(octo::rank(Matrix(0, 0)) == 0);
    CHECK(octo::rank(Matrix(0, 5)) == 0);
    CHECK(octo::rank(Matrix(5, 0)) == 0);
}

TEST_CASE("nullspace of simple matrices") {
    CHECK(octo::nullspace_basis(Matrix::identity(2)).empty());
    CHECK(octo::nullspace_basis(Matrix(2, 3)).size() == 3);

    const auto basis = octo::nullspace_basis(from_rows({{1, 1}}));
    REQUIRE(basis.size() == 1);
    // Reduced-echelon parametrization puts 1 at the free column.
    CHECK(basis[0][0] == Rational(-1));
    CHECK(basis[0][1] == Rational(1));
}

TEST_CASE("transpose involution") {
    std::mt19937_64 rng(99);
    const Matrix m = random_matrix(rng, 5, 7);
    CHECK(m.transpose().transpose() == m);
}

TEST_CASE("rank-nullity and transpose-rank on random rational matrices") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int round = 0; round < 200; ++round) {
        const Matrix m = random_matrix(rng, dim(rng), dim(rng));
        const std::size_t r = octo::rank(m);
        const auto basis = octo::nullspace_basis(m);
        CHECK(r + basis.size() == m.cols());
        CHECK(octo::rank(m.transpose()) == r);
        for (const Vec& v : basis)
            CHECK(octo::is_zero_vec(m * v));
    }
}

TEST_CASE("solve recovers solutions and detects inconsistency") {
    const Matrix a = from_rows({{1, 2}, {3, 4}});
    const auto x = octo::solve(a, Vec{Rational(5), Rational(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(2));

    const Matrix sing = from_rows({{1, 1}, {2, 2}});
    CHECK(octo::solve(sing, Vec{Rational(1), Rational(2)}).has_value());
    CHECK_FALSE(octo::solve(sing, Vec{Rational(1), Rational(3)}).has_value());

    std::mt19937_64 rng(77);
    for (int round = 0; round < 100; ++round) {
        const Matrix m = random_matrix(rng, 5, 4);
        Vec x0(4);
        std::uniform_int_distribution<long> num(-5, 5);
        for (auto& c : x0) c = num(rng);
        const Vec b = m * x0;
        const auto sol = octo::solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}

TEST_CASE("span RREF basis is canonical under row shuffles") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 50; ++round) {
        const Matrix m = random_matrix(rng, 6, 5);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Vec row(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j)
                row[j] = m.at(i, j);
            rows.push_back(std::move(row));
        }
        auto canonical = octo::span_rref_basis(rows);
        std::shuffle(rows.begin(), rows.end(), rng);
        CHECK(octo::span_rref_basis(rows) == canonical);
    }
}
