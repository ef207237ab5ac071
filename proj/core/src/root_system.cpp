#include "octo/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "octo/linalg.hpp"
#include "octo/matrix.hpp"

namespace octo {

Weight weight_add(const Weight& u, const Weight& v) {
    if (u.size() != v.size()) throw DomainError("weight length mismatch");
    Weight w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

Weight weight_sub(const Weight& u, const Weight& v) {
    if (u.size() != v.size()) throw DomainError("weight length mismatch");
    Weight w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
    return w;
}

long long dot2(const Weight& u, const Weight& v) {
    if (u.size() != v.size()) throw DomainError("weight length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

long long RootSystem::pairing(const Weight& w, int i) const {
    const Weight& a = simple_roots[i];
    const long long num = 2 * dot2(w, a);
    const long long den = dot2(a, a);
    if (num % den != 0)
        throw DomainError("weight is not integral for this root system");
    return num / den;
}

Weight RootSystem::reflect_simple(const Weight& w, int i) const {
    const long long p = pairing(w, i);
    Weight r = w;
    const Weight& a = simple_roots[i];
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= p * a[k];
    return r;
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (int i = 0; i < rank; ++i)
        if (pairing(w, i) < 0) return false;
    return true;
}

Weight RootSystem::dominantize(const Weight& w) const {
    Weight v = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank; ++i) {
            if (pairing(v, i) < 0) {
                v = reflect_simple(v, i);
                changed = true;
            }
        }
    }
    return v;
}

namespace {

std::vector<Weight> simple_root_table(char family, int rank) {
    std::vector<Weight> s;
    auto unit_diff = [&](int ambient, int i) { // e_i - e_{i+1}, stored x2
        Weight w(ambient, 0);
        w[i] = 2;
        w[i + 1] = -2;
        return w;
    };
    switch (family) {
    case 'A':
        if (rank < 1) throw DomainError("A_n requires n >= 1");
        for (int i = 0; i < rank; ++i) s.push_back(unit_diff(rank + 1, i));
        return s;
    case 'B':
        if (rank < 2) throw DomainError("B_n requires n >= 2");
        for (int i = 0; i + 1 < rank; ++i) s.push_back(unit_diff(rank, i));
        {
            Weight w(rank, 0);
            w[rank - 1] = 2;
            s.push_back(w);
        }
        return s;
    case 'C':
        if (rank < 2) throw DomainError("C_n requires n >= 2");
        for (int i = 0; i + 1 < rank; ++i) s.push_back(unit_diff(rank, i));
        {
            Weight w(rank, 0);
            w[rank - 1] = 4;
            s.push_back(w);
        }
        return s;
    case 'D':
        if (rank < 3) throw DomainError("D_n requires n >= 3");
        for (int i = 0; i + 1 < rank; ++i) s.push_back(unit_diff(rank, i));
        {
            Weight w(rank, 0);
            w[rank - 2] = 2;
            w[rank - 1] = 2;
            s.push_back(w);
        }
        return s;
    case 'G':
        if (rank != 2) throw DomainError("G_n exists only for n = 2");
        s.push_back({2, -2, 0});
        s.push_back({-4, 2, 2});
        return s;
    case 'F':
        if (rank != 4) throw DomainError("F_n exists only for n = 4");
        s.push_back({0, 2, -2, 0});
        s.push_back({0, 0, 2, -2});
        s.push_back({0, 0, 0, 2});
        s.push_back({1, -1, -1, -1});
        return s;
    case 'E': {
        if (rank < 6 || rank > 8) throw DomainError("E_n exists only for n = 6, 7, 8");
        std::vector<Weight> e8;
        e8.push_back({1, -1, -1, -1, -1, -1, -1, 1});
        e8.push_back({2, 2, 0, 0, 0, 0, 0, 0});
        e8.push_back({-2, 2, 0, 0, 0, 0, 0, 0});
        for (int i = 1; i <= 5; ++i) {
            Weight w(8, 0);
            w[i] = -2;
            w[i + 1] = 2;
            e8.push_back(w);
        }
        s.assign(e8.begin(), e8.begin() + rank);
        return s;
    }
    default:
        throw DomainError(std::string("unknown root system family '") + family + "'");
    }
}

} // namespace

RootSystem build_root_system(char family, int rank) {
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.simple_roots = simple_root_table(family, rank);
    rs.ambient = static_cast<int>(rs.simple_roots[0].size());
    rs.label = std::string(1, family) + std::to_string(rank);

    // Cartan matrix.
    rs.cartan.assign(rank, std::vector<long long>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            const long long num = 2 * dot2(rs.simple_roots[j], rs.simple_roots[i]);
            const long long den = dot2(rs.simple_roots[i], rs.simple_roots[i]);
            if (num % den != 0)
                throw InternalError("non-integral Cartan pairing");
            rs.cartan[i][j] = num / den;
        }

    // All roots as the orbit closure of the simple roots.
    std::set<Weight> roots(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<Weight> queue(rs.simple_roots);
    while (!queue.empty()) {
        Weight w = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            Weight r = rs.reflect_simple(w, i);
            if (roots.insert(r).second)
                queue.push_back(std::move(r));
        }
    }

    // Simple-root coefficients via the Gram matrix; integral by root theory.
    Matrix gram(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            gram.at(i, j) = dot2(rs.simple_roots[i], rs.simple_roots[j]);

    struct PosRoot {
        long long height;
        Weight w;
        std::vector<long long> coeffs;
    };
    std::vector<PosRoot> pos;
    for (const Weight& beta : roots) {
        Vec rhs(rank);
        for (int i = 0; i < rank; ++i)
            rhs[i] = dot2(beta, rs.simple_roots[i]);
        auto sol = solve(gram, rhs);
        if (!sol)
            throw InternalError("root outside the span of the simple roots");
        std::vector<long long> coeffs(rank);
        long long height = 0;
        int sign = 0;
        for (int i = 0; i < rank; ++i) {
            const Rational& c = (*sol)[i];
            if (!c.is_integer())
                throw InternalError("root with non-integral simple-root coefficients");
            coeffs[i] = c.numerator().get_si();
            height += coeffs[i];
            if (coeffs[i] > 0) sign |= 1;
            if (coeffs[i] < 0) sign |= 2;
        }
        if (sign == 3)
            throw InternalError("root with mixed-sign coefficients");
        if (height > 0)
            pos.push_back({height, beta, std::move(coeffs)});
    }
    std::sort(pos.begin(), pos.end(), [](const PosRoot& a, const PosRoot& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.w < b.w;
    });
    for (auto& p : pos) {
        rs.positive_roots.push_back(std::move(p.w));
        rs.pos_root_coeffs.push_back(std::move(p.coeffs));
        rs.heights.push_back(p.height);
    }

    // 2*rho = sum of positive roots; stored vectors carry an extra factor 2.
    Weight sum(rs.ambient, 0);
    for (const Weight& b : rs.positive_roots)
        sum = weight_add(sum, b);
    rs.rho2.assign(rs.ambient, 0);
    for (int i = 0; i < rs.ambient; ++i) {
        if (sum[i] % 2 != 0)
            throw InternalError("sum of positive roots is not twice a lattice vector");
        rs.rho2[i] = sum[i] / 2;
    }
    return rs;
}

RootSystem build_root_system(const std::string& label) {
    if (label.size() < 2)
        throw DomainError("root system label must be like 'B4'");
    const char family = label[0];
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw DomainError("bad rank in root system label '" + label + "'");
    }
    return build_root_system(family, rank);
}

long long dimension(const RootSystem& rs) {
    return 2 * static_cast<long long>(rs.positive_roots.size()) + rs.rank;
}

std::vector<long long> exponents(const RootSystem& rs) {
    // Transpose of the partition counting positive roots per height.
    std::map<long long, long long> per_height;
    for (long long h : rs.heights) per_height[h] += 1;
    std::vector<long long> exps;
    for (long long m = 1; m <= rs.rank; ++m) {
        long long count = 0;
        for (const auto& [h, c] : per_height)
            if (c >= m) ++count;
        exps.push_back(count);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

BigCount weyl_order(const RootSystem& rs) {
    BigCount order(1ul);
    for (long long m : exponents(rs))
        order *= BigCount(to_bigint(m + 1));
    return order;
}

BigCount weyl_enumerate(const RootSystem& rs) {
    const BigCount predicted = weyl_order(rs);
    if (BigCount(BigInt(10000000L)) < predicted)
        throw EnumerationCapError("Weyl group of " + rs.label + " has order " +
                                  predicted.to_string() +
                                  ", beyond the 10^7 enumeration cap");
    // Orbit of rho, level by level. rho is strictly dominant, so the orbit
    // is in bijection with the group; s_i moves an element across exactly
    // one level, so level d+1 candidates need deduplication only against
    // level d-1 and themselves.
    std::vector<Weight> prev;
    std::vector<Weight> curr{rs.rho2};
    unsigned long count = 1;
    while (!curr.empty()) {
        std::vector<Weight> next;
        next.reserve(curr.size() * rs.rank);
        for (const Weight& w : curr)
            for (int i = 0; i < rs.rank; ++i)
                next.push_back(rs.reflect_simple(w, i));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Weight> fresh;
        fresh.reserve(next.size());
        std::set_difference(next.begin(), next.end(), prev.begin(), prev.end(),
                            std::back_inserter(fresh));
        count += fresh.size();
        prev = std::move(curr);
        std::sort(prev.begin(), prev.end());
        curr = std::move(fresh);
    }
    return BigCount(count);
}

std::vector<long long> sphere_decomposition(const RootSystem& rs) {
    std::vector<long long> spheres;
    for (long long m : exponents(rs))
        spheres.push_back(2 * m + 1);
    return spheres;
}

BigCount euler_characteristic_coset(const RootSystem& g,
                                    const std::vector<RootSystem>& h_factors,
                                    int torus_rank) {
    int h_rank = torus_rank;
    for (const RootSystem& h : h_factors)
        h_rank += h.rank;
    if (h_rank != g.rank)
        throw DomainError("Euler characteristic needs an equal-rank pair");
    BigCount h_order(1ul);
    for (const RootSystem& h : h_factors)
        h_order *= weyl_order(h);
    return weyl_order(g) / h_order;
}

bool root_system_isomorphic(const RootSystem& a, const RootSystem& b) {
    if (a.rank != b.rank) return false;
    std::vector<int> perm(a.rank);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; i < a.rank && match; ++i)
            for (int j = 0; j < a.rank && match; ++j)
                if (a.cartan[i][j] != b.cartan[perm[i]][perm[j]])
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace octo
