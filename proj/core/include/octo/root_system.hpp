#ifndef OCTO_ROOT_SYSTEM_HPP
#define OCTO_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "octo/rational.hpp"

namespace octo {

/// Weight-space vector in orthogonal coordinates, stored as twice the
/// actual coordinates so half-integral spinor weights stay integral.
using Weight = std::vector<long long>;

/// Sum u, v entrywise; both in the same coordinate space.
Weight weight_add(const Weight& u, const Weight& v);
Weight weight_sub(const Weight& u, const Weight& v);

/// Dot product of stored vectors: equals 4 times the actual inner product.
long long dot2(const Weight& u, const Weight& v);

/// Root system with the standard orthogonal-coordinate realization:
/// A_n in the coordinate sum of R^{n+1}, B/C/D_n in R^n, G2 in R^3,
/// F4 and the E series in their Bourbaki coordinates.
struct RootSystem {
    char family = 0;
    int rank = 0;
    int ambient = 0;
    std::string label; // e.g. "B4"

    std::vector<Weight> simple_roots;   // stored x2
    std::vector<Weight> positive_roots; // stored x2, sorted by (height, lex)
    std::vector<std::vector<long long>> pos_root_coeffs; // integer simple-root coords
    std::vector<long long> heights;     // parallel to positive_roots
    std::vector<std::vector<long long>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>
    Weight rho2;                        // stored 2*rho = sum of positive roots

    /// <w, alpha_i^vee>, always an integer for lattice weights.
    long long pairing(const Weight& w, int i) const;
    Weight reflect_simple(const Weight& w, int i) const;
    bool is_dominant(const Weight& w) const;
    /// Dominant representative of the Weyl orbit of w.
    Weight dominantize(const Weight& w) const;
};

/// Supported: A_n (n>=1), B_n (n>=2), C_n (n>=2; C2 = B2), D_n (n>=3;
/// D3 = A3), E6, E7, E8, F4, G2. Anything else is a DomainError.
RootSystem build_root_system(char family, int rank);
RootSystem build_root_system(const std::string& label);

/// 2 |Phi+| + rank.
long long dimension(const RootSystem& rs);

/// Exponents m_1 <= ... <= m_rank from the height-partition transpose;
/// their sum is |Phi+|.
std::vector<long long> exponents(const RootSystem& rs);

/// Product of (m_i + 1) over the exponents.
BigCount weyl_order(const RootSystem& rs);

/// Independent oracle: size of the closure of the simple reflections,
/// counted as the orbit of the strictly dominant vector rho, level by
/// level. Refuses (EnumerationCapError) when the predicted order exceeds
/// 10^7.
BigCount weyl_enumerate(const RootSystem& rs);

/// The list 2 m_i + 1; its sum is the group dimension.
std::vector<long long> sphere_decomposition(const RootSystem& rs);

/// |W(g)| / (prod |W(h_i)|) for an equal-rank pair: sum of the factor
/// ranks plus torus_rank must equal rank(g). The division is exact for
/// genuine equal-rank subgroups; a non-exact division is an InternalError.
BigCount euler_characteristic_coset(const RootSystem& g,
                                    const std::vector<RootSystem>& h_factors,
                                    int torus_rank = 0);

/// Cartan matrices agree up to a simultaneous row/column permutation.
bool root_system_isomorphic(const RootSystem& a, const RootSystem& b);

} // namespace octo

#endif
