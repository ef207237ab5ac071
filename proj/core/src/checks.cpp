#include "octo/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "octo/cayley_dickson.hpp"
#include "octo/characters.hpp"
#include "octo/linalg.hpp"
#include "octo/matrix_lie.hpp"
#include "octo/root_system.hpp"
#include "octo/tables.hpp"
#include "octo/version.hpp"

namespace octo {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
    }
    return "fail";
}

CheckStatus check_status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "flagged") return CheckStatus::flagged;
    if (s == "fail") return CheckStatus::fail;
    throw DomainError("unknown check status '" + s + "'");
}

long long Report::count(CheckStatus s) const {
    long long n = 0;
    for (const auto& r : results)
        if (r.status == s) ++n;
    return n;
}

namespace {

std::string join_ll(const std::vector<long long>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

// Part dimensions of a virtual rep, ascending, rendered "672+3696".
std::string dims_ascending(const RootSystem& rs, const VirtualRep& rep) {
    std::vector<long long> dims;
    for (const auto& [hw, coeff] : rep.terms) {
        const long long d = static_cast<long long>(weyl_dim(rs, hw).to_ulong());
        const long long reps = coeff < 0 ? -coeff : coeff;
        for (long long i = 0; i < reps; ++i)
            dims.push_back(coeff < 0 ? -d : d);
    }
    std::sort(dims.begin(), dims.end(), [](long long a, long long b) {
        return std::llabs(a) < std::llabs(b);
    });
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 0)
            out += "-" + std::to_string(-dims[i]);
        else
            out += (i ? "+" : "") + std::to_string(dims[i]);
    }
    return out.empty() ? "0" : out;
}

VirtualRep single_irrep(const RootSystem& rs, const Weight& hw) {
    VirtualRep rep;
    rep.algebra = rs.label;
    rep.terms[hw] = 1;
    return rep;
}

// Decomposition of the k-th alternating power of the D5 half-spin 16,
// shared across the table35 checks.
const VirtualRep& lambda16(int k) {
    static std::mutex m;
    static std::map<int, VirtualRep> cache;
    static const RootSystem d5 = build_root_system('D', 5);
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    const WeightMultiset& spin16 = irrep_character(d5, half_spin_highest_weight(d5, +1));
    VirtualRep rep = decompose(alt_power(spin16, k), d5);
    return cache.emplace(k, std::move(rep)).first->second;
}

// Poincare polynomial coefficients of an equal-rank coset G/H: the exact
// quotient prod(1 - t^(2 d_i(G))) / prod(1 - t^(2 d_i(H))).
std::vector<long long> coset_poincare(const RootSystem& g, const RootSystem& h) {
    auto poly_mul_cyclotomic = [](std::vector<long long> p, long long d) {
        // multiply by (1 - t^d)
        std::vector<long long> q(p.size() + d, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i];
            q[i + d] -= p[i];
        }
        return q;
    };
    std::vector<long long> num{1}, den{1};
    for (long long m : exponents(g)) num = poly_mul_cyclotomic(num, 2 * (m + 1));
    for (long long m : exponents(h)) den = poly_mul_cyclotomic(den, 2 * (m + 1));
    // Exact polynomial long division.
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    std::vector<long long> rem = num;
    const std::size_t dd = den.size() - 1;
    for (std::size_t i = rem.size(); i-- > 0;) {
        if (i < dd) break;
        if (rem[i] == 0) continue;
        if (rem[i] % den[dd] != 0)
            throw InternalError("coset Poincare polynomial division is not exact");
        const long long c = rem[i] / den[dd];
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] -= c * den[j];
    }
    for (long long c : rem)
        if (c != 0)
            throw InternalError("coset Poincare polynomial has a nonzero remainder");
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    return quot;
}

struct Check {
    std::string suite;
    std::string id;
    std::string paper_location;
    bool flag_only = false;
    std::function<std::pair<std::string, std::string>()> run;
};

std::vector<Check> build_registry() {
    std::vector<Check> checks;
    auto add = [&](std::string suite, std::string id, std::string loc,
                   std::function<std::pair<std::string, std::string>()> fn) {
        checks.push_back({std::move(suite), std::move(id), std::move(loc), false, std::move(fn)});
    };
    auto add_flag = [&](std::string suite, std::string id, std::string loc,
                        std::function<std::pair<std::string, std::string>()> fn) {
        checks.push_back({std::move(suite), std::move(id), std::move(loc), true, std::move(fn)});
    };

    // ----- octonions -----
    add("octonions", "quaternion_ij", "Eq 23 context (doubling basis)", [] {
        const CDElement p = cd_multiply(CDElement::basis_unit(2, 1), CDElement::basis_unit(2, 2));
        return std::make_pair(std::string("e3"), p.to_string());
    });
    add("octonions", "octonion_e1_e4", "Eq 23 context (doubling basis)", [] {
        const CDElement p = cd_multiply(CDElement::basis_unit(3, 1), CDElement::basis_unit(3, 4));
        return std::make_pair(std::string("e5"), p.to_string());
    });
    add("octonions", "fano_triple_count", "§1 (35 = 7^2 - 14)", [] {
        return std::make_pair(std::string("7"),
                              std::to_string(structure_3form().components.size()));
    });
    add("octonions", "structure_form_123", "§1 (three-form in R^7)", [] {
        return std::make_pair(std::string("1"), structure_3form().value(1, 2, 3).to_string());
    });
    add("octonions", "associator_e1_e2_e4", "Eq 23", [] {
        const CDElement a = associator(CDElement::basis_unit(3, 1), CDElement::basis_unit(3, 2),
                                       CDElement::basis_unit(3, 4));
        return std::make_pair(std::string("-2*e7"), a.to_string());
    });
    add("octonions", "associator_antisymmetry", "Eq 23 (fully antisymmetric)", [] {
        long long failures = 0;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                for (std::size_t k = 0; k < 8; ++k) {
                    const CDElement a = CDElement::basis_unit(3, i);
                    const CDElement b = CDElement::basis_unit(3, j);
                    const CDElement c = CDElement::basis_unit(3, k);
                    const CDElement base = associator(a, b, c);
                    if (associator(b, a, c) != -base) ++failures;
                    if (associator(a, c, b) != -base) ++failures;
                    if (associator(c, b, a) != -base) ++failures;
                    if (associator(b, c, a) != base) ++failures;
                    if (associator(c, a, b) != base) ++failures;
                }
        return std::make_pair(std::string("0"), std::to_string(failures));
    });
    add("octonions", "quaternion_associativity", "Eq 23 (associator degenerates)", [] {
        long long failures = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k)
                    if (!associator(CDElement::basis_unit(2, i), CDElement::basis_unit(2, j),
                                    CDElement::basis_unit(2, k))
                             .is_zero())
                        ++failures;
        return std::make_pair(std::string("0"), std::to_string(failures));
    });
    add("octonions", "norm_multiplicative_basis", "§2 i) (respects the norm)", [] {
        long long failures = 0;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const CDElement x = CDElement::basis_unit(3, i);
                const CDElement y = CDElement::basis_unit(3, j);
                if (norm(cd_multiply(x, y)) != norm(x) * norm(y)) ++failures;
            }
        return std::make_pair(std::string("0"), std::to_string(failures));
    });
    add("octonions", "moufang_sample", "§2 (alternative algebra)", [] {
        std::mt19937_64 rng(20240811);
        std::uniform_int_distribution<long> coeff(-4, 4);
        long long failures = 0;
        for (int round = 0; round < 200; ++round) {
            Vec xs(8), ys(8), zs(8);
            for (int i = 0; i < 8; ++i) {
                xs[i] = coeff(rng);
                ys[i] = coeff(rng);
                zs[i] = coeff(rng);
            }
            const CDElement x(3, xs), y(3, ys), z(3, zs);
            const CDElement lhs = cd_multiply(cd_multiply(cd_multiply(x, y), x), z);
            const CDElement rhs = cd_multiply(x, cd_multiply(y, cd_multiply(x, z)));
            if (lhs != rhs) ++failures;
        }
        return std::make_pair(std::string("0"), std::to_string(failures));
    });
    add("octonions", "inverse_1_plus_e1", "§2 (invertible structure)", [] {
        CDElement x(3);
        x = CDElement::basis_unit(3, 0) + CDElement::basis_unit(3, 1);
        const CDElement p = cd_multiply(x, inverse(x));
        return std::make_pair(std::string("1"), p.to_string());
    });

    // ----- stabilizers -----
    add("stabilizers", "g2_dimension", "§1 (dim G2 = 14)", [] {
        return std::make_pair(std::string("14"),
                              std::to_string(derivation_algebra(structure_constants(3)).dim()));
    });
    add("stabilizers", "g2_form_stabilizer", "§1 (35 = 7^2 - 14)", [] {
        return std::make_pair(std::string("14"),
                              std::to_string(form_stabilizer(structure_3form(), 7).dim()));
    });
    add("stabilizers", "g2_point_stabilizer", "Eq 3 (Spin(7)/G2 = S^7)", [] {
        const MatrixAlgebra spin7 = spin_algebra(build_gamma_system(7));
        Vec e0(8);
        e0[0] = 1;
        return std::make_pair(std::string("14"),
                              std::to_string(point_stabilizer(spin7, e0).dim()));
    });
    add("stabilizers", "g2_constructions_agree", "§1 + Eq 3", [] {
        const MatrixAlgebra der = derivation_algebra(structure_constants(3));
        const MatrixAlgebra spin7 = spin_algebra(build_gamma_system(7));
        Vec e0(8);
        e0[0] = 1;
        const MatrixAlgebra stab = point_stabilizer(spin7, e0);
        return std::make_pair(std::string("equal"),
                              same_span(der, stab) ? std::string("equal") : std::string("different"));
    });
    add("stabilizers", "der_quaternions", "Eq 11 (Aut H = SO(3))", [] {
        return std::make_pair(std::string("3"),
                              std::to_string(derivation_algebra(structure_constants(2)).dim()));
    });
    add("stabilizers", "der_complex", "Eq 11 context", [] {
        return std::make_pair(std::string("0"),
                              std::to_string(derivation_algebra(structure_constants(1)).dim()));
    });
    add("stabilizers", "der_reals", "Eq 11 context", [] {
        return std::make_pair(std::string("0"),
                              std::to_string(derivation_algebra(structure_constants(0)).dim()));
    });
    add("stabilizers", "volume_form_sl3", "Eq 11 (invariance group SL(3,R))", [] {
        return std::make_pair(std::string("8"),
                              std::to_string(form_stabilizer(volume_3form(), 3).dim()));
    });
    add("stabilizers", "aut_h_intersection", "Eq 11 (SL(3,R) ∩ O(3) = SO(3))", [] {
        const MatrixAlgebra sl3 = form_stabilizer(volume_3form(), 3);
        const MatrixAlgebra so3 = classical_algebra(ClassicalFamily::so, 3);
        std::vector<Vec> all;
        for (const Matrix& m : sl3.basis) all.push_back(m.flatten());
        for (const Matrix& m : so3.basis) all.push_back(m.flatten());
        const std::size_t inter = sl3.dim() + so3.dim() - span_rank(all);
        return std::make_pair(std::string("3"), std::to_string(inter));
    });
    add("stabilizers", "eq3_orbit_ranks", "Eq 3 (transitive on S^7)", [] {
        Vec e0(8);
        e0[0] = 1;
        const MatrixAlgebra spin7 = spin_algebra(build_gamma_system(7));
        const MatrixAlgebra su4 = classical_algebra(ClassicalFamily::su_realified, 4);
        const MatrixAlgebra sp2 = classical_algebra(ClassicalFamily::sp_realified, 2);
        std::vector<long long> ranks{
            static_cast<long long>(orbit_tangent_rank(spin7, e0)),
            static_cast<long long>(orbit_tangent_rank(su4, e0)),
            static_cast<long long>(orbit_tangent_rank(sp2, e0))};
        return std::make_pair(std::string("7,7,7"), join_ll(ranks, ","));
    });
    add("stabilizers", "eq3_stabilizer_dims", "Eq 3", [] {
        Vec e0(8);
        e0[0] = 1;
        const MatrixAlgebra spin7 = spin_algebra(build_gamma_system(7));
        const MatrixAlgebra su4 = classical_algebra(ClassicalFamily::su_realified, 4);
        const MatrixAlgebra sp2 = classical_algebra(ClassicalFamily::sp_realified, 2);
        std::vector<long long> dims{
            static_cast<long long>(point_stabilizer(spin7, e0).dim()),
            static_cast<long long>(point_stabilizer(su4, e0).dim()),
            static_cast<long long>(point_stabilizer(sp2, e0).dim())};
        return std::make_pair(std::string("14,8,3"), join_ll(dims, ","));
    });
    add("stabilizers", "spin9_orbit_rank", "Eq 10 (Spin(9) over S^15)", [] {
        const MatrixAlgebra spin9 = spin_algebra(build_gamma_system(9));
        Vec v(16);
        v[0] = 1;
        return std::make_pair(std::string("15"),
                              std::to_string(orbit_tangent_rank(spin9, v)));
    });
    add("stabilizers", "spin9_point_stabilizer", "Eq 10 (fiber Spin(7))", [] {
        const MatrixAlgebra spin9 = spin_algebra(build_gamma_system(9));
        Vec v(16);
        v[0] = 1;
        return std::make_pair(std::string("21"),
                              std::to_string(point_stabilizer(spin9, v).dim()));
    });
    add("stabilizers", "clifford9_rep_dim", "Eq 9 (dim Spin(9) rep = 16)", [] {
        return std::make_pair(std::string("16"),
                              std::to_string(build_gamma_system(9).rep_dim));
    });
    add("stabilizers", "spin7_rep_dim", "Eq 2 (real 8-dim irreducible)", [] {
        return std::make_pair(std::string("8"),
                              std::to_string(build_gamma_system(7).rep_dim));
    });
    add("stabilizers", "spin_bivector_dims", "Eq 2 + §3 (36+16=52)", [] {
        std::vector<long long> dims{
            static_cast<long long>(spin_algebra(build_gamma_system(7)).dim()),
            static_cast<long long>(spin_algebra(build_gamma_system(9)).dim())};
        return std::make_pair(std::string("21,36"), join_ll(dims, ","));
    });
    add("stabilizers", "closure_left_mult_so8", "Eq 2 (Spin(7) ⊂ SO(8))", [] {
        return std::make_pair(std::string("28"),
                              std::to_string(lie_closure(left_multiplication_operators()).dim()));
    });
    add("stabilizers", "chain_dims", "Eq 2 (Sp(2) ⊂ SU(4) ⊂ Spin(7) ⊂ SO(8))", [] {
        std::vector<long long> dims{
            static_cast<long long>(classical_algebra(ClassicalFamily::sp_realified, 2).dim()),
            static_cast<long long>(classical_algebra(ClassicalFamily::su_realified, 4).dim()),
            static_cast<long long>(spin_algebra(build_gamma_system(7)).dim()),
            static_cast<long long>(classical_algebra(ClassicalFamily::so, 8).dim())};
        return std::make_pair(std::string("10,15,21,28"), join_ll(dims, ","));
    });
    add("stabilizers", "m13_dimension", "Eq 8 (symmetric space M13)", [] {
        return std::make_pair(std::string("13"),
                              std::to_string(coset_dimension(28, {15})));
    });
    add("stabilizers", "m84_dimension", "Eq 10 (symmetric space M84)", [] {
        return std::make_pair(std::string("84"),
                              std::to_string(coset_dimension(120, {36})));
    });
    add("stabilizers", "op1_is_s8", "Eq 15 (OP^1 = S^8 = Spin(9)/Spin(8))", [] {
        const long long spin9 = dimension(build_root_system('B', 4));
        const long long spin8 = dimension(build_root_system('D', 4));
        return std::make_pair(std::string("8"),
                              std::to_string(coset_dimension(spin9, {spin8})));
    });
    add("stabilizers", "op2_dimension", "Eq 18 + §4 (dim X = 52 - 36 = 16)", [] {
        const long long f4 = dimension(build_root_system('F', 4));
        const long long b4 = dimension(build_root_system('B', 4));
        return std::make_pair(std::string("16"),
                              std::to_string(coset_dimension(f4, {b4})));
    });

    // ----- weyl -----
    add("weyl", "exponents_b3", "Eq 13 (Spin(7) twisted spheres)", [] {
        return std::make_pair(std::string("1,3,5"),
                              join_ll(exponents(build_root_system('B', 3)), ","));
    });
    add("weyl", "spheres_b3", "Eq 13", [] {
        return std::make_pair(std::string("3,7,11"),
                              join_ll(sphere_decomposition(build_root_system('B', 3)), ","));
    });
    add("weyl", "spheres_d4", "Eq 16 (Spin(8))", [] {
        return std::make_pair(std::string("3,7,7,11"),
                              join_ll(sphere_decomposition(build_root_system('D', 4)), ","));
    });
    add("weyl", "spheres_b4", "Eq 16 (Spin(9))", [] {
        return std::make_pair(std::string("3,7,11,15"),
                              join_ll(sphere_decomposition(build_root_system('B', 4)), ","));
    });
    add("weyl", "spheres_f4", "Eq 17 (Oct(3) = F4)", [] {
        return std::make_pair(std::string("3,11,15,23"),
                              join_ll(sphere_decomposition(build_root_system('F', 4)), ","));
    });
    add("weyl", "sphere_dimension_sums", "Eq 13, 16, 17", [] {
        std::vector<long long> sums;
        for (const char* label : {"B3", "D4", "B4", "F4"}) {
            const RootSystem rs = build_root_system(label);
            long long s = 0;
            for (long long d : sphere_decomposition(rs)) s += d;
            sums.push_back(s);
        }
        return std::make_pair(std::string("21,28,36,52"), join_ll(sums, ","));
    });
    add("weyl", "weyl_order_e6", "Eq 33 (51840)", [] {
        return std::make_pair(std::string("51840"),
                              weyl_order(build_root_system('E', 6)).to_string());
    });
    add("weyl", "weyl_order_d5", "Eq 33 (1920)", [] {
        return std::make_pair(std::string("1920"),
                              weyl_order(build_root_system('D', 5)).to_string());
    });
    add("weyl", "euler_E6_D5", "Eq 33 (51840/1920 = 27)", [] {
        const BigCount chi = euler_characteristic_coset(
            build_root_system('E', 6), {build_root_system('D', 5)}, 1);
        return std::make_pair(std::string("27"), chi.to_string());
    });
    add("weyl", "euler_F4_B4", "§4 (Euler number of OP^2)", [] {
        const BigCount chi = euler_characteristic_coset(
            build_root_system('F', 4), {build_root_system('B', 4)}, 0);
        return std::make_pair(std::string("3"), chi.to_string());
    });
    add("weyl", "euler_F4_B4_enumerated", "§4 (quotient of Weyl orders)", [] {
        const BigCount wf4 = weyl_enumerate(build_root_system('F', 4));
        const BigCount wb4 = weyl_enumerate(build_root_system('B', 4));
        return std::make_pair(std::string("1152/384=3"),
                              wf4.to_string() + "/" + wb4.to_string() + "=" +
                                  (wf4 / wb4).to_string());
    });
    add("weyl", "weyl_enumeration_catalog", "Eq 33 context (order oracle)", [] {
        long long mismatches = 0;
        std::vector<std::string> labels{"G2", "F4", "E6"};
        for (int n = 1; n <= 6; ++n) labels.push_back("A" + std::to_string(n));
        for (int n = 2; n <= 6; ++n) labels.push_back("B" + std::to_string(n));
        for (int n = 3; n <= 6; ++n) labels.push_back("C" + std::to_string(n));
        for (int n = 3; n <= 6; ++n) labels.push_back("D" + std::to_string(n));
        for (const std::string& label : labels) {
            const RootSystem rs = build_root_system(label);
            if (weyl_order(rs) != weyl_enumerate(rs)) ++mismatches;
        }
        return std::make_pair(std::string("0"), std::to_string(mismatches));
    });
    add("weyl", "spin5_is_sp2", "Eq 6 (Spin(5) = Sp(2))", [] {
        return std::make_pair(std::string("isomorphic"),
                              root_system_isomorphic(build_root_system('B', 2),
                                                     build_root_system('C', 2))
                                  ? std::string("isomorphic")
                                  : std::string("distinct"));
    });
    add("weyl", "spin6_is_su4", "Eq 6 (Spin(6) = SU(4))", [] {
        return std::make_pair(std::string("isomorphic"),
                              root_system_isomorphic(build_root_system('D', 3),
                                                     build_root_system('A', 3))
                                  ? std::string("isomorphic")
                                  : std::string("distinct"));
    });
    add("weyl", "b3_c3_distinct", "Eq 6 context", [] {
        return std::make_pair(std::string("distinct"),
                              root_system_isomorphic(build_root_system('B', 3),
                                                     build_root_system('C', 3))
                                  ? std::string("isomorphic")
                                  : std::string("distinct"));
    });
    add("weyl", "sp2_so5_dims", "Eq 6 (dimension level)", [] {
        std::vector<long long> dims{dimension(build_root_system('C', 3)),
                                    dimension(build_root_system('B', 3))};
        // rank-3 pairs have equal dimension 21; the rank-2 identity is the
        // isomorphism check above
        return std::make_pair(std::string("21,21"), join_ll(dims, ","));
    });

    // ----- magic -----
    add("magic", "f4_construction", "§3 (adjoint + spin, 36+16=52)", [] {
        const auto rows = exceptional_dimension_table();
        const auto& r = rows[0];
        return std::make_pair(std::string("52=36+16"),
                              std::to_string(r.root_count_dim) + "=" + join_ll(r.parts, "+"));
    });
    add("magic", "e6_construction", "§3 (45+1+32=78)", [] {
        const auto rows = exceptional_dimension_table();
        const auto& r = rows[1];
        return std::make_pair(std::string("78=45+1+32"),
                              std::to_string(r.root_count_dim) + "=" + join_ll(r.parts, "+"));
    });
    add("magic", "e7_construction", "§3 (66+3+64=133)", [] {
        const auto rows = exceptional_dimension_table();
        const auto& r = rows[2];
        return std::make_pair(std::string("133=66+3+64"),
                              std::to_string(r.root_count_dim) + "=" + join_ll(r.parts, "+"));
    });
    add("magic", "e8_construction", "§3 (120+128=248)", [] {
        const auto rows = exceptional_dimension_table();
        const auto& r = rows[3];
        return std::make_pair(std::string("248=120+128"),
                              std::to_string(r.root_count_dim) + "=" + join_ll(r.parts, "+"));
    });
    add("magic", "magic_square_dims", "Eq 26", [] {
        const MagicSquare sq = magic_square_table();
        std::string actual;
        for (int i = 0; i < 4; ++i) {
            if (i) actual += "/";
            for (int j = 0; j < 4; ++j)
                actual += (j ? "," : "") + std::to_string(sq[i][j].dim);
        }
        return std::make_pair(std::string("3,9,21,52/9,18,36,78/21,36,66,133/52,78,133,248"),
                              actual);
    });
    add("magic", "magic_square_corner", "Eq 26 (E8 corner)", [] {
        const MagicSquare sq = magic_square_table();
        return std::make_pair(std::string("E8:248"),
                              sq[3][3].label + ":" + std::to_string(sq[3][3].dim));
    });
    add_flag("magic", "eq26_row3_entry", "Eq 26 (printed O(16); arithmetic needs so(12))", [] {
        const MagicSquare sq = magic_square_table();
        return std::make_pair(std::string("O(16)"),
                              sq[2][2].label + " of dim " + std::to_string(sq[2][2].dim) +
                                  " (consistent with 66+3+64=133)");
    });
    add("magic", "eq25_spin_chain_monotone", "Eq 25 (Spin(9) ⊂ Spin(10) ⊂ Spin(12) ⊂ Spin(16))", [] {
        std::vector<long long> dims{dimension(build_root_system('B', 4)),
                                    dimension(build_root_system('D', 5)),
                                    dimension(build_root_system('D', 6)),
                                    dimension(build_root_system('D', 8))};
        const bool mono = std::is_sorted(dims.begin(), dims.end()) &&
                          std::adjacent_find(dims.begin(), dims.end()) == dims.end();
        return std::make_pair(std::string("36<45<66<120"),
                              mono ? join_ll(dims, "<") : join_ll(dims, ","));
    });
    add("magic", "skew_square_contains_adjoint", "§3 (skew square of spin contains adjoint)", [] {
        const RootSystem d8 = build_root_system('D', 8);
        const WeightMultiset& s_plus = irrep_character(d8, half_spin_highest_weight(d8, +1));
        const VirtualRep rep = decompose(alt_power(s_plus, 2), d8);
        const Weight adjoint = adjoint_highest_weight(d8);
        auto it = rep.terms.find(adjoint);
        const long long coeff = it == rep.terms.end() ? 0 : it->second;
        return std::make_pair(std::string("1"), std::to_string(coeff));
    });

    // ----- multiplets -----
    add("multiplets", "sugra_triplet_dims", "Eq 30 (44 - 128 + 84)", [] {
        const RootSystem b4 = build_root_system('B', 4);
        std::vector<long long> dims{
            static_cast<long long>(weyl_dim(b4, Weight{4, 0, 0, 0}).to_ulong()),
            static_cast<long long>(weyl_dim(b4, Weight{3, 1, 1, 1}).to_ulong()),
            static_cast<long long>(weyl_dim(b4, Weight{2, 2, 2, 0}).to_ulong())};
        return std::make_pair(std::string("44,128,84"), join_ll(dims, ","));
    });
    add("multiplets", "kostant_multiplet", "Eq 31 (128 - 128 = 44 + 84 - 128)", [] {
        const RootSystem d8 = build_root_system('D', 8);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep k = kostant_multiplet(d8, b4, preset_projection("D8->B4"));
        return std::make_pair(std::string("44+84-128"), dims_ascending(b4, k));
    });
    add("multiplets", "kostant_dimension_zero", "Eq 31 (128 - 128 = 0)", [] {
        const RootSystem d8 = build_root_system('D', 8);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep k = kostant_multiplet(d8, b4, preset_projection("D8->B4"));
        return std::make_pair(std::string("0"), virtual_dimension(b4, k).get_str());
    });
    add("multiplets", "kostant_constituents_chi", "Eq 31 + §4 (3 = Euler number)", [] {
        const RootSystem d8 = build_root_system('D', 8);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep k = kostant_multiplet(d8, b4, preset_projection("D8->B4"));
        long long constituents = 0;
        for (const auto& [hw, c] : k.terms) constituents += std::llabs(c);
        const BigCount chi = euler_characteristic_coset(build_root_system('F', 4), {b4}, 0);
        return std::make_pair(std::string("3=3"),
                              std::to_string(constituents) + "=" + chi.to_string());
    });
    add("multiplets", "op2_betti_numbers", "§4 (b0 = b8 = b16 = 1)", [] {
        const auto poincare =
            coset_poincare(build_root_system('F', 4), build_root_system('B', 4));
        std::string actual;
        for (std::size_t d = 0; d < poincare.size(); ++d) {
            if (poincare[d] == 0) continue;
            if (!actual.empty()) actual += ",";
            actual += "b" + std::to_string(d) + "=" + std::to_string(poincare[d]);
        }
        return std::make_pair(std::string("b0=1,b8=1,b16=1"), actual);
    });
    add("multiplets", "adjoint_branch_36_84", "Eq 30 context (Λ² of the 16)", [] {
        const RootSystem d8 = build_root_system('D', 8);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep adj = single_irrep(d8, adjoint_highest_weight(d8));
        const VirtualRep br = branch(d8, adj, b4, preset_projection("D8->B4"));
        return std::make_pair(std::string("36+84"), dims_ascending(b4, br));
    });
    add("multiplets", "d8_vector_to_b4_spinor", "Eq 31 context (defining embedding)", [] {
        const RootSystem d8 = build_root_system('D', 8);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep v = single_irrep(d8, vector_highest_weight(d8));
        const VirtualRep br = branch(d8, v, b4, preset_projection("D8->B4"));
        std::string actual = dims_ascending(b4, br);
        const bool is_spinor = br.terms.size() == 1 &&
                               br.terms.begin()->first == spinor_highest_weight(b4);
        return std::make_pair(std::string("16 (spinor)"),
                              actual + (is_spinor ? " (spinor)" : " (not the spinor)"));
    });
    add("multiplets", "oxidation_44", "§4 (44 = 35+8+1)", [] {
        return std::make_pair(std::string("44 -> 35+8+1"), oxidation_checks()[0].name);
    });
    add("multiplets", "oxidation_84", "§4 (84 = 56+28)", [] {
        return std::make_pair(std::string("84 -> 56+28"), oxidation_checks()[1].name);
    });
    add("multiplets", "oxidation_128", "§4 (2·8 + 2·56 = 128)", [] {
        return std::make_pair(std::string("128 -> 56+56+8+8"), oxidation_checks()[2].name);
    });
    add("multiplets", "yang_mills_square", "§4 (IIa content of the squared multiplet)", [] {
        const RootSystem d4 = build_root_system('D', 4);
        const WeightMultiset& v8 = irrep_character(d4, vector_highest_weight(d4));
        const WeightMultiset& s8 = irrep_character(d4, half_spin_highest_weight(d4, +1));
        const WeightMultiset& c8 = irrep_character(d4, half_spin_highest_weight(d4, -1));
        auto minus = [](const WeightMultiset& a, const WeightMultiset& b) {
            WeightMultiset out = a;
            for (const auto& [w, m] : b) {
                out[w] -= m;
                if (out[w] == 0) out.erase(w);
            }
            return out;
        };
        const WeightMultiset square = tensor_product(minus(v8, s8), minus(v8, c8));
        const VirtualRep rep = decompose(square, d4);
        long long bosons = 0, fermions = 0;
        for (const auto& [hw, coeff] : rep.terms) {
            const long long d =
                coeff * static_cast<long long>(weyl_dim(d4, hw).to_ulong());
            if (d > 0) bosons += d;
            else fermions -= d;
        }
        return std::make_pair(std::string("bosons 128, fermions 128, net 0"),
                              "bosons " + std::to_string(bosons) + ", fermions " +
                                  std::to_string(fermions) + ", net " +
                                  std::to_string(bosons - fermions));
    });
    add("multiplets", "yang_mills_irrep_content", "§4 (graviton+dilaton+vector+2-form+3-form)", [] {
        const RootSystem d4 = build_root_system('D', 4);
        const WeightMultiset& v8 = irrep_character(d4, vector_highest_weight(d4));
        const WeightMultiset& s8 = irrep_character(d4, half_spin_highest_weight(d4, +1));
        const WeightMultiset& c8 = irrep_character(d4, half_spin_highest_weight(d4, -1));
        const VirtualRep bb = decompose(tensor_product(v8, v8), d4);
        const VirtualRep ff = decompose(tensor_product(s8, c8), d4);
        return std::make_pair(std::string("1+28+35 and 8+56"),
                              dims_ascending(d4, bb) + " and " + dims_ascending(d4, ff));
    });
    add_flag("multiplets", "yang_mills_44_line", "§4 (44 + 1 + 28 + 8 + 56 - 8 - 8 - 56 - 56)", [] {
        const long long printed = 44 + 1 + 28 + 8 + 56 - 8 - 8 - 56 - 56;
        return std::make_pair(std::string("0 (as a Bose-Fermi balance)"),
                              "printed sum is " + std::to_string(printed) +
                                  "; the balance holds with 35 in place of 44 "
                                  "(35+1+28+8+56 = 128 = 8+8+56+56)");
    });
    add("multiplets", "eq28_coset_dim", "Eq 28 (32 dimensions)", [] {
        const long long e6 = dimension(build_root_system('E', 6));
        const long long d5 = dimension(build_root_system('D', 5));
        return std::make_pair(std::string("32"),
                              std::to_string(coset_dimension(e6, {d5, 1})));
    });
    add("multiplets", "eq34_split", "Eq 34 (32768 - 32768)", [] {
        const auto [even, odd] = alternating_binomial_split(16);
        return std::make_pair(std::string("32768,32768"),
                              even.to_string() + "," + odd.to_string());
    });
    add("multiplets", "eq34_telescope", "Eq 34 ((1-1)^16 = 0)", [] {
        const auto [even, odd] = alternating_binomial_split(16);
        const BigInt diff = even.value() - odd.value();
        return std::make_pair(std::string("0"), diff.get_str());
    });

    // ----- table35 -----
    add("table35", "su16_column", "Table 35 + Eq 34 (p-forms in C^16)", [] {
        std::string actual;
        for (unsigned long k = 0; k <= 8; ++k) {
            const std::string b = binomial(16, k).to_string();
            if (k) actual += ",";
            actual += (k % 2 == 1 ? "-" : "") + b;
        }
        return std::make_pair(std::string("1,-16,120,-560,1820,-4368,8008,-11440,12870"),
                              actual);
    });
    const char* expected_rows[9] = {"1",         "16",        "120",
                                    "560",       "770+1050",  "672+3696",
                                    "3696+4312", "2640+8800", "660+4125+8085"};
    for (int k = 0; k <= 8; ++k) {
        add("table35", "spin10_lambda" + std::to_string(k), "Table 35 (Spin(10) column)",
            [k, expected_rows] {
                const RootSystem d5 = build_root_system('D', 5);
                return std::make_pair(std::string(expected_rows[k]),
                                      dims_ascending(d5, lambda16(k)));
            });
    }
    add("table35", "lambda_total_dims", "Eq 34 (binomial totals)", [] {
        const RootSystem d5 = build_root_system('D', 5);
        long long mismatches = 0;
        for (int k = 0; k <= 16; ++k) {
            const BigInt total = virtual_dimension(d5, lambda16(k));
            if (BigCount(total) != binomial(16, static_cast<unsigned long>(k)))
                ++mismatches;
        }
        return std::make_pair(std::string("0"), std::to_string(mismatches));
    });
    add("table35", "lambda_conjugate_symmetry", "Table 35 (k vs 16-k)", [] {
        const RootSystem d5 = build_root_system('D', 5);
        long long mismatches = 0;
        for (int k = 0; k <= 8; ++k) {
            std::multiset<long long> a, b;
            for (const auto& [hw, c] : lambda16(k).terms)
                for (long long i = 0; i < c; ++i)
                    a.insert(static_cast<long long>(weyl_dim(d5, hw).to_ulong()));
            for (const auto& [hw, c] : lambda16(16 - k).terms)
                for (long long i = 0; i < c; ++i)
                    b.insert(static_cast<long long>(weyl_dim(d5, hw).to_ulong()));
            if (a != b) ++mismatches;
        }
        return std::make_pair(std::string("0"), std::to_string(mismatches));
    });
    add("table35", "branch_16_to_o9", "Table 35 (16 & 16)", [] {
        const RootSystem d5 = build_root_system('D', 5);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep br = branch(d5, lambda16(1), b4, preset_projection("D5->B4"));
        return std::make_pair(std::string("16"), dims_ascending(b4, br));
    });
    add("table35", "branch_120_to_o9", "Table 35 (120 & 84+36)", [] {
        const RootSystem d5 = build_root_system('D', 5);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep br = branch(d5, lambda16(2), b4, preset_projection("D5->B4"));
        return std::make_pair(std::string("36+84"), dims_ascending(b4, br));
    });
    add("table35", "branch_560_to_o9", "Table 35 (560 & 432+128)", [] {
        const RootSystem d5 = build_root_system('D', 5);
        const RootSystem b4 = build_root_system('B', 4);
        const VirtualRep br = branch(d5, lambda16(3), b4, preset_projection("D5->B4"));
        return std::make_pair(std::string("128+432"), dims_ascending(b4, br));
    });
    add("table35", "branch_b4_16_to_o8", "Table 35 (16 & 8_L + 8_R)", [] {
        const RootSystem b4 = build_root_system('B', 4);
        const RootSystem d4 = build_root_system('D', 4);
        const VirtualRep spinor = single_irrep(b4, spinor_highest_weight(b4));
        const VirtualRep br = branch(b4, spinor, d4, preset_projection("B4->D4"));
        const Weight s = half_spin_highest_weight(d4, +1);
        const Weight c = half_spin_highest_weight(d4, -1);
        const bool half_spins = br.terms.size() == 2 && br.terms.count(s) == 1 &&
                                br.terms.count(c) == 1;
        return std::make_pair(std::string("8+8 (both half-spins)"),
                              dims_ascending(d4, br) +
                                  (half_spins ? " (both half-spins)" : " (other content)"));
    });

    return checks;
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = build_registry();
    return checks;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"octonions", "stabilizers", "weyl",
                                                "magic",     "multiplets",  "table35"};
    return names;
}

Report run_verify(const std::string& suite_filter) {
    const auto& names = suite_names();
    if (suite_filter != "all" &&
        std::find(names.begin(), names.end(), suite_filter) == names.end())
        throw UsageError("unknown suite '" + suite_filter + "'");

    Report report;
    report.suite = suite_filter;
    report.engine_version = engine_version;
    report.timestamp = iso_timestamp();
    for (const Check& c : registry()) {
        if (suite_filter != "all" && c.suite != suite_filter) continue;
        CheckResult r;
        r.check_id = c.id;
        r.paper_location = c.paper_location;
        auto [expected, actual] = c.run();
        r.expected = std::move(expected);
        r.actual = std::move(actual);
        r.status = c.flag_only ? CheckStatus::flagged
                               : (r.expected == r.actual ? CheckStatus::pass : CheckStatus::fail);
        report.results.push_back(std::move(r));
    }
    return report;
}

std::string render_table(const std::string& name) {
    std::ostringstream os;
    if (name == "magic-square") {
        const MagicSquare sq = magic_square_table();
        os << "| | R | C | H | O |\n|---|---|---|---|---|\n";
        const char* row_labels[4] = {"R", "C", "H", "O"};
        for (int i = 0; i < 4; ++i) {
            os << "| " << row_labels[i] << " |";
            for (int j = 0; j < 4; ++j)
                os << " " << sq[i][j].label << " (" << sq[i][j].dim << ") |";
            os << "\n";
        }
        return os.str();
    }
    if (name == "sugra-triplet") {
        const RootSystem b4 = build_root_system('B', 4);
        const long long h = static_cast<long long>(weyl_dim(b4, Weight{4, 0, 0, 0}).to_ulong());
        const long long psi = static_cast<long long>(weyl_dim(b4, Weight{3, 1, 1, 1}).to_ulong());
        const long long c3 = static_cast<long long>(weyl_dim(b4, Weight{2, 2, 2, 0}).to_ulong());
        os << "| field | so(9) highest weight | sign | dim |\n|---|---|---|---|\n";
        os << "| graviton h | (2,0,0,0) | + | " << h << " |\n";
        os << "| gravitino psi | (3/2,1/2,1/2,1/2) | - | " << psi << " |\n";
        os << "| 3-form C | (1,1,1,0) | + | " << c3 << " |\n\n";
        os << h << " - " << psi << " + " << c3 << " = " << (h - psi + c3) << "\n";
        return os.str();
    }
    if (name == "table35") {
        const RootSystem d5 = build_root_system('D', 5);
        const RootSystem b4 = build_root_system('B', 4);
        const RootSystem d4 = build_root_system('D', 4);
        os << "| k | SU(16) | Spin(10) | O(9) | O(8) |\n|---|---|---|---|---|\n";
        for (int k = 0; k <= 8; ++k) {
            const VirtualRep& lam = lambda16(k);
            const VirtualRep o9 = branch(d5, lam, b4, preset_projection("D5->B4"));
            const VirtualRep o8 = branch(b4, o9, d4, preset_projection("B4->D4"));
            const std::string sign = (k % 2 == 1) ? "-" : "";
            os << "| " << k << " | " << sign << binomial(16, k).to_string() << " | "
               << dims_ascending(d5, lam) << " | " << dims_ascending(b4, o9) << " | "
               << dims_ascending(d4, o8) << " |\n";
        }
        os << "\nRows k = 9..16 carry the conjugate content of rows 16-k.\n";
        return os.str();
    }
    if (name == "spheres") {
        os << "| group | twisted sphere product | dim |\n|---|---|---|\n";
        const std::pair<const char*, const char*> groups[4] = {
            {"B3", "Spin(7)"}, {"D4", "Spin(8)"}, {"B4", "Spin(9)"}, {"F4", "F4"}};
        for (const auto& [label, group] : groups) {
            const RootSystem rs = build_root_system(label);
            const auto spheres = sphere_decomposition(rs);
            long long total = 0;
            std::string prod;
            for (std::size_t i = 0; i < spheres.size(); ++i) {
                prod += (i ? " x~ S" : "S") + std::to_string(spheres[i]);
                total += spheres[i];
            }
            os << "| " << group << " | " << prod << " | " << total << " |\n";
        }
        return os.str();
    }
    throw UsageError("unknown table '" + name + "'");
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json results = nlohmann::json::array();
    for (const CheckResult& c : r.results)
        results.push_back({{"check_id", c.check_id},
                           {"paper_location", c.paper_location},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"status", to_string(c.status)}});
    return {{"suite", r.suite},
            {"engine_version", r.engine_version},
            {"timestamp", r.timestamp},
            {"results", results},
            {"summary",
             {{"pass", r.count(CheckStatus::pass)},
              {"fail", r.count(CheckStatus::fail)},
              {"flagged", r.count(CheckStatus::flagged)}}}};
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.engine_version = j.at("engine_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    for (const auto& item : j.at("results")) {
        CheckResult c;
        c.check_id = item.at("check_id").get<std::string>();
        c.paper_location = item.at("paper_location").get<std::string>();
        c.expected = item.at("expected").get<std::string>();
        c.actual = item.at("actual").get<std::string>();
        c.status = check_status_from_string(item.at("status").get<std::string>());
        r.results.push_back(std::move(c));
    }
    return r;
}

std::string report_to_markdown(const Report& r) {
    std::ostringstream os;
    os << "# verification report\n\n";
    os << "suite: " << r.suite << "  \nengine: " << r.engine_version
       << "  \ntimestamp: " << r.timestamp << "\n\n";
    os << "| status | check | location | expected | actual |\n|---|---|---|---|---|\n";
    for (const CheckResult& c : r.results)
        os << "| " << to_string(c.status) << " | " << c.check_id << " | " << c.paper_location
           << " | " << c.expected << " | " << c.actual << " |\n";
    os << "\npass " << r.count(CheckStatus::pass) << ", fail " << r.count(CheckStatus::fail)
       << ", flagged " << r.count(CheckStatus::flagged) << "\n";
    return os.str();
}

} // namespace octo
