#include "octo/tables.hpp"

#include <algorithm>

namespace octo {

namespace {

long long big_to_ll(const BigCount& c) {
    return static_cast<long long>(c.to_ulong());
}

} // namespace

std::vector<ExceptionalConstruction> exceptional_dimension_table() {
    std::vector<ExceptionalConstruction> rows;

    const RootSystem b4 = build_root_system('B', 4);
    const RootSystem d5 = build_root_system('D', 5);
    const RootSystem d6 = build_root_system('D', 6);
    const RootSystem d8 = build_root_system('D', 8);
    const RootSystem a1 = build_root_system('A', 1);

    {
        ExceptionalConstruction r;
        r.group = "F4";
        r.construction = "so(9) adjoint + spin";
        r.parts = {dimension(b4), big_to_ll(weyl_dim(b4, spinor_highest_weight(b4)))};
        r.root_count_dim = dimension(build_root_system('F', 4));
        for (long long p : r.parts) r.parts_sum += p;
        rows.push_back(std::move(r));
    }
    {
        ExceptionalConstruction r;
        r.group = "E6";
        r.construction = "so(10) adjoint + u(1) + spin";
        const long long spin = big_to_ll(weyl_dim(d5, half_spin_highest_weight(d5, +1))) +
                               big_to_ll(weyl_dim(d5, half_spin_highest_weight(d5, -1)));
        r.parts = {dimension(d5), 1, spin};
        r.root_count_dim = dimension(build_root_system('E', 6));
        for (long long p : r.parts) r.parts_sum += p;
        rows.push_back(std::move(r));
    }
    {
        ExceptionalConstruction r;
        r.group = "E7";
        r.construction = "so(12) adjoint + sp(1) + spin";
        const long long spin = 2 * big_to_ll(weyl_dim(d6, half_spin_highest_weight(d6, +1)));
        r.parts = {dimension(d6), dimension(a1), spin};
        r.root_count_dim = dimension(build_root_system('E', 7));
        for (long long p : r.parts) r.parts_sum += p;
        rows.push_back(std::move(r));
    }
    {
        ExceptionalConstruction r;
        r.group = "E8";
        r.construction = "so(16) adjoint + spin";
        r.parts = {dimension(d8), big_to_ll(weyl_dim(d8, half_spin_highest_weight(d8, +1)))};
        r.root_count_dim = dimension(build_root_system('E', 8));
        for (long long p : r.parts) r.parts_sum += p;
        rows.push_back(std::move(r));
    }
    return rows;
}

MagicSquare magic_square_table() {
    const long long so3 = dimension(build_root_system('A', 1));
    const long long u3 = dimension(build_root_system('A', 2)) + 1;
    const long long sp3 = dimension(build_root_system('C', 3));
    const long long u3sq = 2 * u3;
    const long long u6 = dimension(build_root_system('A', 5)) + 1;
    const long long so12 = dimension(build_root_system('D', 6));
    const long long f4 = dimension(build_root_system('F', 4));
    const long long e6 = dimension(build_root_system('E', 6));
    const long long e7 = dimension(build_root_system('E', 7));
    const long long e8 = dimension(build_root_system('E', 8));

    return MagicSquare{{
        {{{"so(3)", so3}, {"u(3)", u3}, {"sp(3)", sp3}, {"F4", f4}}},
        {{{"u(3)", u3}, {"u(3)^2", u3sq}, {"u(6)", u6}, {"E6", e6}}},
        {{{"sp(3)", sp3}, {"u(6)", u6}, {"so(12)", so12}, {"E7", e7}}},
        {{{"F4", f4}, {"E6", e6}, {"E7", e7}, {"E8", e8}}},
    }};
}

long long coset_dimension(long long g_dim, const std::vector<long long>& h_dims) {
    long long h_total = 0;
    for (long long h : h_dims) h_total += h;
    if (h_total > g_dim)
        throw DomainError("coset dimension would be negative");
    return g_dim - h_total;
}

std::pair<BigCount, BigCount> alternating_binomial_split(unsigned long n) {
    if (n < 1)
        throw DomainError("alternating binomial split requires n >= 1");
    BigCount even(0ul), odd(0ul);
    for (unsigned long k = 0; k <= n; ++k) {
        if (k % 2 == 0)
            even += binomial(n, k);
        else
            odd += binomial(n, k);
    }
    return {even, odd};
}

std::vector<OxidationCheck> oxidation_checks() {
    const RootSystem b4 = build_root_system('B', 4);
    const RootSystem d4 = build_root_system('D', 4);
    const WeightProjection proj = preset_projection("B4->D4");

    auto run = [&](const Weight& hw) {
        VirtualRep rep;
        rep.algebra = b4.label;
        rep.terms[hw] = 1;
        const long long total = big_to_ll(weyl_dim(b4, hw));
        VirtualRep branched = branch(b4, rep, d4, proj);
        OxidationCheck c;
        c.total = total;
        long long branched_total = 0;
        for (const auto& [w, coeff] : branched.terms) {
            const long long d = big_to_ll(weyl_dim(d4, w));
            for (long long i = 0; i < coeff; ++i)
                c.part_dims.push_back(d);
            branched_total += coeff * d;
        }
        std::sort(c.part_dims.rbegin(), c.part_dims.rend());
        c.dimension_preserved = branched_total == total;
        std::string parts;
        for (std::size_t i = 0; i < c.part_dims.size(); ++i)
            parts += (i ? "+" : "") + std::to_string(c.part_dims[i]);
        c.name = std::to_string(total) + " -> " + parts;
        return c;
    };

    std::vector<OxidationCheck> out;
    out.push_back(run(Weight{4, 0, 0, 0}));  // graviton 44 = (2,0,0,0)
    out.push_back(run(Weight{2, 2, 2, 0}));  // 3-form 84 = (1,1,1,0)
    out.push_back(run(Weight{3, 1, 1, 1}));  // gravitino 128 = (3/2,1/2,1/2,1/2)
    return out;
}

} // namespace octo
