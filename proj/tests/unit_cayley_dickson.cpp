#include <array>
#include <random>

#include "doctest.h"
#include "octo/cayley_dickson.hpp"

using octo::CDElement;
using octo::Rational;
using octo::Vec;

namespace {

// Independent multiplication oracle, frozen once from the doubling
// convention e1e2 = e3, e5 = e1e4, e6 = e2e4, e7 = e3e4: the seven
// oriented quaternionic triples of imaginary units.
constexpr std::array<std::array<int, 3>, 7> fano_triples{{
    {1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {2, 5, 7}, {3, 6, 5}, {1, 7, 6},
}};

// signed unit: (sign, index); e_i e_j from the Fano orientation.
std::pair<int, int> oracle_mul(int i, int j) {
    if (i == 0) return {1, j};
    if (j == 0) return {1, i};
    if (i == j) return {-1, 0};
    for (const auto& t : fano_triples) {
        for (int r = 0; r < 3; ++r) {
            const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
            if (i == a && j == b) return {1, c};
            if (i == b && j == a) return {-1, c};
        }
    }
    REQUIRE(false);
    return {0, 0};
}

CDElement random_element(std::mt19937_64& rng, int level, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 4);
    Vec coords(std::size_t{1} << level);
    for (auto& c : coords) c = Rational(num(rng), den(rng));
    return CDElement(level, coords);
}

CDElement unit(int i) { return CDElement::basis_unit(3, i); }

} // namespace

TEST_CASE("multiplication table matches the Fano-plane oracle on all 64 pairs") {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const auto [sign, k] = oracle_mul(i, j);
            CDElement expected = unit(k);
            if (sign < 0) expected = -expected;
            CHECK(cd_multiply(unit(i), unit(j)) == expected);
        }
}

TEST_CASE("unit element and named basis products") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 20; ++round) {
        const CDElement x = random_element(rng, 3);
        CHECK(cd_multiply(unit(0), x) == x);
        CHECK(cd_multiply(x, unit(0)) == x);
    }
    // quaternion level: i j = k
    CHECK(cd_multiply(CDElement::basis_unit(2, 1), CDElement::basis_unit(2, 2)) ==
          CDElement::basis_unit(2, 3));
    // octonion level: e1 e4 = e5
    CHECK(cd_multiply(unit(1), unit(4)) == unit(5));
}

TEST_CASE("level mismatch and sedenions are rejected") {
    CHECK_THROWS_AS(cd_multiply(CDElement(2), CDElement(3)), octo::DomainError);
    CHECK_THROWS_AS(CDElement(4), octo::DomainError);
    CHECK_THROWS_AS(CDElement(3, Vec(4)), octo::DomainError);
}

TEST_CASE("norm values and multiplicativity") {
    CHECK(norm(unit(0) + unit(1)) == Rational(2));
    for (int i = 0; i < 8; ++i)
        CHECK(norm(unit(i)) == Rational(1));

    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(norm(cd_multiply(unit(i), unit(j))) == norm(unit(i)) * norm(unit(j)));

    std::mt19937_64 rng(8128);
    for (int level = 0; level <= 3; ++level)
        for (int round = 0; round < 250; ++round) {
            const CDElement x = random_element(rng, level);
            const CDElement y = random_element(rng, level);
            CHECK(norm(cd_multiply(x, y)) == norm(x) * norm(y));
        }
}

TEST_CASE("conjugation fixes the real part and negates the rest") {
    std::mt19937_64 rng(4);
    const CDElement x = random_element(rng, 3);
    const CDElement xc = x.conjugate();
    CHECK(xc.coord(0) == x.coord(0));
    for (int i = 1; i < 8; ++i)
        CHECK(xc.coord(i) == -x.coord(i));
    CHECK(xc.conjugate() == x);
}

TEST_CASE("inverses") {
    CHECK(inverse(unit(0)) == unit(0));
    CHECK(inverse(unit(3)) == -unit(3));

    const CDElement x = unit(0) + unit(1);
    const CDElement ix = inverse(x);
    CHECK(ix.coord(0) == Rational(1, 2));
    CHECK(ix.coord(1) == Rational(-1, 2));
    CHECK(cd_multiply(x, ix) == unit(0));
    CHECK(cd_multiply(ix, x) == unit(0));

    std::mt19937_64 rng(55);
    for (int round = 0; round < 100; ++round) {
        CDElement y = random_element(rng, 3);
        if (y.is_zero()) continue;
        CHECK(cd_multiply(y, inverse(y)) == unit(0));
        CHECK(cd_multiply(inverse(y), y) == unit(0));
    }
    CHECK_THROWS_AS(inverse(CDElement(3)), octo::DivideByZeroError);
}

TEST_CASE("associator degenerates at low levels") {
    // commutative below the quaternions
    std::mt19937_64 rng(1001);
    for (int level = 0; level <= 1; ++level)
        for (int round = 0; round < 50; ++round) {
            const CDElement a = random_element(rng, level);
            const CDElement b = random_element(rng, level);
            CHECK(commutator(a, b).is_zero());
        }
    // associative below the octonions
    for (int level = 0; level <= 2; ++level)
        for (int round = 0; round < 50; ++round) {
            const CDElement a = random_element(rng, level);
            const CDElement b = random_element(rng, level);
            const CDElement c = random_element(rng, level);
            CHECK(associator(a, b, c).is_zero());
        }
    // and genuinely fails to degenerate one level up
    CHECK_FALSE(commutator(CDElement::basis_unit(2, 1), CDElement::basis_unit(2, 2)).is_zero());
    CHECK_FALSE(associator(unit(1), unit(2), unit(4)).is_zero());
}

TEST_CASE("associator fixture (e1, e2, e4) = -2 e7") {
    const CDElement a = associator(unit(1), unit(2), unit(4));
    CHECK(a == Rational(-2) * unit(7));
    // cross-check against the oracle table: e2e4 = e6, e1e6 = -e7,
    // e1e2 = e3, e3e4 = e7.
    CHECK(oracle_mul(2, 4) == std::make_pair(1, 6));
    CHECK(oracle_mul(1, 6) == std::make_pair(-1, 7));
    CHECK(oracle_mul(1, 2) == std::make_pair(1, 3));
    CHECK(oracle_mul(3, 4) == std::make_pair(1, 7));
}

TEST_CASE("alternativity: the associator is fully antisymmetric") {
    auto check_triple = [](const CDElement& a, const CDElement& b, const CDElement& c) {
        const CDElement base = associator(a, b, c);
        CHECK(associator(b, c, a) == base);
        CHECK(associator(c, a, b) == base);
        CHECK(associator(b, a, c) == -base);
        CHECK(associator(a, c, b) == -base);
        CHECK(associator(c, b, a) == -base);
    };
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                check_triple(unit(i), unit(j), unit(k));

    std::mt19937_64 rng(616);
    for (int round = 0; round < 300; ++round) {
        const CDElement a = random_element(rng, 3);
        const CDElement b = random_element(rng, 3);
        const CDElement c = random_element(rng, 3);
        check_triple(a, b, c);
        CHECK(associator(a, a, b).is_zero());
        CHECK(associator(a, b, b).is_zero());
        CHECK(associator(a, b, a).is_zero());
    }
}

TEST_CASE("Moufang identity ((xy)x)z = x(y(xz))") {
    std::mt19937_64 rng(271828);
    for (int round = 0; round < 300; ++round) {
        const CDElement x = random_element(rng, 3);
        const CDElement y = random_element(rng, 3);
        const CDElement z = random_element(rng, 3);
        CHECK(cd_multiply(cd_multiply(cd_multiply(x, y), x), z) ==
              cd_multiply(x, cd_multiply(y, cd_multiply(x, z))));
    }
}

TEST_CASE("no zero divisors at the octonion level") {
    std::mt19937_64 rng(141421);
    for (int round = 0; round < 300; ++round) {
        CDElement x = random_element(rng, 3);
        CDElement y = random_element(rng, 3);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK_FALSE(cd_multiply(x, y).is_zero());
    }
}

TEST_CASE("structure 3-form: exactly the seven oriented Fano triples") {
    const octo::ThreeForm phi = octo::structure_3form();
    CHECK(phi.dimension == 7);
    CHECK(phi.components.size() == 7);

    // Frozen values on ordered triples i < j < k.
    const std::map<std::array<std::size_t, 3>, long> frozen{
        {{1, 2, 3}, 1}, {{1, 4, 5}, 1}, {{2, 4, 6}, 1},  {{3, 4, 7}, 1},
        {{2, 5, 7}, 1}, {{3, 5, 6}, -1}, {{1, 6, 7}, -1},
    };
    for (const auto& [t, v] : frozen)
        CHECK(phi.value(t[0], t[1], t[2]) == Rational(v));

    // Every other ordered triple vanishes; 7 of C(7,3) = 35 are nonzero.
    int nonzero = 0;
    for (std::size_t i = 1; i <= 7; ++i)
        for (std::size_t j = i + 1; j <= 7; ++j)
            for (std::size_t k = j + 1; k <= 7; ++k)
                if (!phi.value(i, j, k).is_zero()) ++nonzero;
    CHECK(nonzero == 7);

    // Antisymmetry through the accessor.
    CHECK(phi.value(1, 2, 3) == -phi.value(2, 1, 3));
    CHECK(phi.value(1, 2, 3) == phi.value(2, 3, 1));
    CHECK(phi.value(1, 1, 3).is_zero());
}

TEST_CASE("structure 3-form agrees with its defining formula") {
    const octo::ThreeForm phi = octo::structure_3form();
    for (std::size_t i = 1; i <= 7; ++i)
        for (std::size_t j = 1; j <= 7; ++j)
            for (std::size_t k = 1; k <= 7; ++k) {
                const CDElement prod =
                    cd_multiply(cd_multiply(unit(i), unit(j)), unit(k).conjugate());
                CHECK(phi.value(i, j, k) == prod.coord(0));
            }
}

TEST_CASE("structure constants tables") {
    const octo::StructureConstants r = octo::structure_constants(0);
    CHECK(r.dimension == 1);
    CHECK(r.c(0, 0, 0) == Rational(1));

    const octo::StructureConstants h = octo::structure_constants(2);
    CHECK(h.c(1, 2, 3) == Rational(1));
    CHECK(h.c(2, 1, 3) == Rational(-1));

    const octo::StructureConstants o = octo::structure_constants(3);
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(o.c(0, j, k) == (j == k ? Rational(1) : Rational(0)));
            CHECK(o.c(j, 0, k) == (j == k ? Rational(1) : Rational(0)));
        }
    // round trip against cd_multiply on all 64 basis pairs
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const CDElement p = cd_multiply(unit(i), unit(j));
            for (std::size_t k = 0; k < 8; ++k) {
                CHECK(o.c(i, j, k) == p.coord(k));
                CHECK((o.c(i, j, k) == Rational(0) || o.c(i, j, k) == Rational(1) ||
                       o.c(i, j, k) == Rational(-1)));
            }
        }
}

TEST_CASE("structure constants serialize to the documented JSON shape") {
    const nlohmann::json j = octo::structure_constants_to_json(octo::structure_constants(1));
    CHECK(j.at("dimension") == 2);
    const auto& triples = j.at("triples");
    REQUIRE(triples.size() == 4); // 1*1=1, 1*i=i, i*1=i, i*i=-1
    CHECK(triples[0] == nlohmann::json({0, 0, 0, "1"}));
    CHECK(triples[1] == nlohmann::json({0, 1, 1, "1"}));
    CHECK(triples[2] == nlohmann::json({1, 0, 1, "1"}));
    CHECK(triples[3] == nlohmann::json({1, 1, 0, "-1"}));
}
