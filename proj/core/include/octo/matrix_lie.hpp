#ifndef OCTO_MATRIX_LIE_HPP
#define OCTO_MATRIX_LIE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "octo/cayley_dickson.hpp"
#include "octo/linalg.hpp"
#include "octo/matrix.hpp"

namespace octo {

/// A subspace of gl(ambient_dim, R) given by a linearly independent basis.
struct MatrixAlgebra {
    std::size_t ambient_dim = 0;
    std::vector<Matrix> basis;

    std::size_t dim() const { return basis.size(); }
};

nlohmann::json matrix_algebra_to_json(const MatrixAlgebra& a);

/// True when [X, Y] of every basis pair lies in the span of the basis.
bool closed_under_bracket(const MatrixAlgebra& a);

/// Equal ambient dimension, equal dimension, identical spans in gl(n).
bool same_span(const MatrixAlgebra& a, const MatrixAlgebra& b);

/// L_1..L_7 with L_a x = e_a x on R^8 = O. Each is skew-symmetric with
/// L_a^2 = -I, and L_a L_b + L_b L_a = -2 delta_ab I.
std::vector<Matrix> left_multiplication_operators();

/// n mutually anticommuting real gamma matrices with gamma_i^2 =
/// square_sign * I. For n <= 7 the representation space is R^8 and the
/// gammas are the octonion left multiplications (square_sign = -1: the
/// negative-definite Clifford algebra, which is the one with an 8-dim
/// real representation). For n in {8, 9} the space is R^16, the gammas
/// are symmetric and square to +I, built from 2x2 blocks of octonion
/// operators; gamma_9 is the ordered product gamma_1..gamma_8.
struct GammaSystem {
    int n = 0;
    std::size_t rep_dim = 0;
    int square_sign = +1;
    std::vector<Matrix> gammas;
};

GammaSystem build_gamma_system(int n);

/// Span of {gamma_i gamma_j : i < j}; dimension n(n-1)/2, every element
/// skew-symmetric, closed under bracket.
MatrixAlgebra spin_algebra(const GammaSystem& g);

/// All D with D(e_i e_j) = D(e_i) e_j + e_i D(e_j), as the exact nullspace
/// of the induced linear system.
MatrixAlgebra derivation_algebra(const StructureConstants& s);

/// All X in gl(ambient_dim) with phi(Xu, v, w) + phi(u, Xv, w) +
/// phi(u, v, Xw) = 0. Form indices are 1-based, coordinates 0-based.
MatrixAlgebra form_stabilizer(const ThreeForm& phi, std::size_t ambient_dim);

/// Smallest bracket-closed subspace containing the generators, by
/// iterated bracketing and rank saturation. Basis is the canonical RREF
/// basis of the span.
MatrixAlgebra lie_closure(const std::vector<Matrix>& gens);

/// {X in span(a) : X v = 0}; dim equals dim(a) - orbit_tangent_rank(a, v).
MatrixAlgebra point_stabilizer(const MatrixAlgebra& a, const Vec& v);

/// Rank of X -> X v over span(a): the dimension of the infinitesimal orbit.
std::size_t orbit_tangent_rank(const MatrixAlgebra& a, const Vec& v);

enum class ClassicalFamily { so, su_realified, sp_realified };

/// so(n) on R^n, su(n) realified on R^2n, sp(n) realified on R^4n, with
/// the textbook dimensions n(n-1)/2, n^2-1, n(2n+1).
MatrixAlgebra classical_algebra(ClassicalFamily family, int n);

} // namespace octo

#endif
