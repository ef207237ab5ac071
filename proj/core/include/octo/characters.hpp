#ifndef OCTO_CHARACTERS_HPP
#define OCTO_CHARACTERS_HPP

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "octo/matrix.hpp"
#include "octo/root_system.hpp"

namespace octo {

/// Weight -> integer multiplicity. Negative multiplicities represent
/// virtual characters.
using WeightMultiset = std::map<Weight, long long>;

/// Formal integer combination of irreps, keyed by dominant highest weight.
/// `charges` carries optional torus-charge labels; they never affect any
/// computation.
struct VirtualRep {
    std::string algebra;
    std::map<Weight, long long> terms;
    std::map<Weight, long long> charges;
};

/// Sum of multiplicities (the virtual dimension of the multiset).
long long total_multiplicity(const WeightMultiset& ws);

/// Stored (x2) weight from actual rational coordinates; the coordinates
/// must be half-integral.
Weight weight_from_rationals(const Vec& coords);

/// Highest weight of the defining vector representation (first coordinate
/// weight): B/C/D families.
Weight vector_highest_weight(const RootSystem& rs);

/// B_n spinor highest weight (1/2, ..., 1/2).
Weight spinor_highest_weight(const RootSystem& rs);

/// D_n half-spin highest weight (1/2, ..., 1/2, +-1/2).
Weight half_spin_highest_weight(const RootSystem& rs, int sign);

/// Highest root = adjoint highest weight.
Weight adjoint_highest_weight(const RootSystem& rs);

/// Weyl dimension formula, exact.
BigCount weyl_dim(const RootSystem& rs, const Weight& hw);

/// Full weight multiset by Freudenthal's recursion; cached per
/// (root system, highest weight), safe for concurrent callers.
const WeightMultiset& irrep_character(const RootSystem& rs, const Weight& hw);

/// Weighted sum of irrep characters over the terms of a virtual rep.
WeightMultiset character_of(const RootSystem& rs, const VirtualRep& rep);

/// Greedy highest-weight stripping. The extremal weight of a Weyl-symmetric
/// multiset is dominant; a non-dominant extremal raises NotACharacterError.
VirtualRep decompose(WeightMultiset ws, const RootSystem& rs);

/// k-th alternating power of a genuine (non-negative) weight multiset.
WeightMultiset alt_power(const WeightMultiset& ws, long long k);

/// Multiset convolution (pairwise weight sums, multiplicity products).
WeightMultiset tensor_product(const WeightMultiset& a, const WeightMultiset& b);

/// Linear map between weight spaces, applied to stored coordinates.
struct WeightProjection {
    std::string name;
    Matrix map; // out_ambient x in_ambient, rational entries
};

/// Named presets: "D5->B4" (drop last coordinate), "B4->D4" (identity),
/// "D8->B4" (the spin embedding: e_i maps to the i-th positive-half B4
/// spinor weight, in descending lexicographic order).
WeightProjection preset_projection(const std::string& name);

Weight project_weight(const WeightProjection& p, const Weight& w);

/// Push the character through the projection, then decompose under the
/// target. Raises InvalidProjectionError when the image is not a character.
VirtualRep branch(const RootSystem& src, const VirtualRep& rep,
                  const RootSystem& tgt, const WeightProjection& proj);

/// branch(S+) - branch(S-) for the half-spins of g under the projection
/// onto h: the Euler-number-many irreducible constituents of Kostant's
/// multiplet.
VirtualRep kostant_multiplet(const RootSystem& g, const RootSystem& h,
                             const WeightProjection& proj);

/// Signed dimension: sum of coeff * weyl_dim over the terms.
BigInt virtual_dimension(const RootSystem& rs, const VirtualRep& rep);

/// {algebra, terms: [{hw (stored x2 coords), coeff, dim, charge?}]}.
nlohmann::json virtual_rep_to_json(const RootSystem& rs, const VirtualRep& rep);

/// "44 - 128 + 84" style rendering with dimensions as labels, terms in
/// map order.
std::string virtual_rep_to_string(const RootSystem& rs, const VirtualRep& rep);

} // namespace octo

#endif
