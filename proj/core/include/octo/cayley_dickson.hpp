#ifndef OCTO_CAYLEY_DICKSON_HPP
#define OCTO_CAYLEY_DICKSON_HPP

#include <array>
#include <map>
#include <vector>

#include "json.hpp"
#include "octo/rational.hpp"

namespace octo {

inline constexpr int cd_max_level = 3; // R, C, H, O; no sedenions

/// Element of the Cayley-Dickson tower: level 0..3 (R, C, H, O) with
/// 2^level exact coordinates over the doubling basis e0..e_{2^level-1}.
///
/// Basis convention: e1 e2 = e3 at the quaternion level, e4 is the
/// doubling unit, e5 = e1 e4, e6 = e2 e4, e7 = e3 e4, and products follow
/// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
class CDElement {
public:
    explicit CDElement(int level);
    CDElement(int level, Vec coords);

    static CDElement basis_unit(int level, std::size_t index);
    static CDElement from_real(int level, const Rational& r);

    int level() const { return level_; }
    std::size_t dim() const { return coords_.size(); }
    const Vec& coords() const { return coords_; }
    const Rational& coord(std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    CDElement conjugate() const;

    CDElement operator-() const;
    CDElement& operator+=(const CDElement& o);
    CDElement& operator-=(const CDElement& o);
    CDElement& operator*=(const Rational& c);
    friend CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
    friend CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
    friend CDElement operator*(CDElement a, const Rational& c) { return a *= c; }
    friend CDElement operator*(const Rational& c, CDElement a) { return a *= c; }
    friend bool operator==(const CDElement& a, const CDElement& b) {
        return a.level_ == b.level_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CDElement& a, const CDElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    int level_;
    Vec coords_;
};

/// Product under the recursive doubling rule. Levels must match.
CDElement cd_multiply(const CDElement& x, const CDElement& y);

/// x conj(x) = sum of squared coordinates; zero iff x = 0.
Rational norm(const CDElement& x);

/// conj(x)/norm(x). Throws DivideByZeroError for x = 0.
CDElement inverse(const CDElement& x);

/// [a, b, c] = a(bc) - (ab)c.
CDElement associator(const CDElement& a, const CDElement& b, const CDElement& c);

CDElement commutator(const CDElement& a, const CDElement& b);

/// Full multiplication table of a level algebra: e_i e_j = sum_k c(i,j,k) e_k.
struct StructureConstants {
    std::size_t dimension = 0;
    std::vector<Rational> table; // dimension^3, index (i*d + j)*d + k

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return table[(i * dimension + j) * dimension + k];
    }
    Rational& c(std::size_t i, std::size_t j, std::size_t k) {
        return table[(i * dimension + j) * dimension + k];
    }
};

StructureConstants structure_constants(int level);

/// JSON form {dimension, triples: [[i, j, k, c], ...]} listing nonzero
/// constants in lexicographic (i, j, k) order.
nlohmann::json structure_constants_to_json(const StructureConstants& s);

/// Antisymmetric 3-form on the imaginary units, stored on ordered triples
/// i < j < k; access applies the permutation sign.
struct ThreeForm {
    std::size_t dimension = 0; // 7 for octonions
    std::map<std::array<std::size_t, 3>, Rational> components;

    /// Signed value on any index triple (1-based imaginary indices).
    Rational value(std::size_t i, std::size_t j, std::size_t k) const;
};

/// The octonion structure 3-form: phi(i,j,k) = e0-coefficient of
/// (e_i e_j) conj(e_k) over imaginary indices 1..7. Exactly 7 unordered
/// triples carry value +-1.
ThreeForm structure_3form();

/// Volume form on R^3 (the quaternion imaginary 3-form), for stabilizer
/// comparisons against sl(3).
ThreeForm volume_3form();

} // namespace octo

#endif
