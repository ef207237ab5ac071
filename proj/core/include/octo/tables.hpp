#ifndef OCTO_TABLES_HPP
#define OCTO_TABLES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "octo/characters.hpp"
#include "octo/root_system.hpp"

namespace octo {

/// One exceptional group computed two independent ways: from its own root
/// count, and as orthogonal-plus-spin pieces (adjoint of the orthogonal
/// subalgebra, torus/sp(1) factors, spin representation dimensions).
struct ExceptionalConstruction {
    std::string group;          // "F4"
    std::string construction;   // "so(9) adjoint + spin"
    std::vector<long long> parts;
    long long parts_sum = 0;
    long long root_count_dim = 0;
};

std::vector<ExceptionalConstruction> exceptional_dimension_table();

struct MagicSquareCell {
    std::string label;
    long long dim = 0;
};
using MagicSquare = std::array<std::array<MagicSquareCell, 4>, 4>;

/// The 4x4 square with rows (so(3), u(3), sp(3), F4 / u(3), u(3)^2, u(6),
/// E6 / sp(3), u(6), so(12), E7 / F4, E6, E7, E8); dimensions computed
/// from root systems plus torus counts.
MagicSquare magic_square_table();

/// g_dim - sum(h_dims); negative is a DomainError.
long long coset_dimension(long long g_dim, const std::vector<long long>& h_dims);

/// (sum of C(n,k) over even k, over odd k); both are 2^(n-1).
std::pair<BigCount, BigCount> alternating_binomial_split(unsigned long n);

/// B4 -> D4 branchings of the 44, 84 and 128, with their part dimensions.
struct OxidationCheck {
    std::string name;            // "44 -> 35+8+1"
    long long total = 0;
    std::vector<long long> part_dims; // descending
    bool dimension_preserved = false;
};

std::vector<OxidationCheck> oxidation_checks();

} // namespace octo

#endif
