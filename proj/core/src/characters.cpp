#include "octo/characters.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace octo {

long long total_multiplicity(const WeightMultiset& ws) {
    long long t = 0;
    for (const auto& [w, m] : ws) t += m;
    return t;
}

Weight weight_from_rationals(const Vec& coords) {
    Weight w(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Rational doubled = coords[i] * Rational(2);
        if (!doubled.is_integer())
            throw DomainError("weight coordinates must be half-integral");
        w[i] = doubled.numerator().get_si();
    }
    return w;
}

Weight vector_highest_weight(const RootSystem& rs) {
    Weight w(rs.ambient, 0);
    w[0] = 2;
    return w;
}

Weight spinor_highest_weight(const RootSystem& rs) {
    if (rs.family != 'B')
        throw DomainError("spinor weight is defined for the B family");
    return Weight(rs.ambient, 1);
}

Weight half_spin_highest_weight(const RootSystem& rs, int sign) {
    if (rs.family != 'D')
        throw DomainError("half-spin weights are defined for the D family");
    Weight w(rs.ambient, 1);
    w.back() = sign >= 0 ? 1 : -1;
    return w;
}

Weight adjoint_highest_weight(const RootSystem& rs) {
    return rs.positive_roots.back(); // highest root: maximal height
}

namespace {

void validate_highest_weight(const RootSystem& rs, const Weight& hw) {
    if (static_cast<int>(hw.size()) != rs.ambient)
        throw DomainError("highest weight length must match the ambient dimension");
    for (int i = 0; i < rs.rank; ++i)
        if (rs.pairing(hw, i) < 0)
            throw DomainError("highest weight must be dominant");
}

// Dominant representative plus the simple-root coefficient correction:
// on return, coeffs describes hw_top - dominantize(w) whenever it
// described hw_top - w on entry.
Weight dominantize_tracked(const RootSystem& rs, Weight w,
                           std::vector<long long>& coeffs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rs.rank; ++i) {
            const long long p = rs.pairing(w, i);
            if (p < 0) {
                const Weight& a = rs.simple_roots[i];
                for (std::size_t k = 0; k < w.size(); ++k) w[k] -= p * a[k];
                coeffs[i] += p;
                changed = true;
            }
        }
    }
    return w;
}

struct DominantEntry {
    long long level;
    Weight w;
};

// All weights of V(hw) plus the dominant ones ordered by level (height of
// hw - w). A vector nu is a weight of V(hw) exactly when its dominant
// representative mu satisfies hw - mu in the non-negative root-lattice cone.
void enumerate_weights(const RootSystem& rs, const Weight& hw,
                       std::set<Weight>& all, std::vector<DominantEntry>& dominant) {
    all.clear();
    dominant.clear();
    all.insert(hw);
    dominant.push_back({0, hw});

    std::deque<std::pair<Weight, std::vector<long long>>> queue;
    queue.push_back({hw, std::vector<long long>(rs.rank, 0)});
    while (!queue.empty()) {
        auto [w, coeffs] = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            Weight next = weight_sub(w, rs.simple_roots[i]);
            if (all.count(next)) continue;
            std::vector<long long> next_coeffs = coeffs;
            next_coeffs[i] += 1;
            std::vector<long long> dom_coeffs = next_coeffs;
            Weight dom = dominantize_tracked(rs, next, dom_coeffs);
            bool member = true;
            for (long long c : dom_coeffs)
                if (c < 0) { member = false; break; }
            if (!member) continue;
            all.insert(next);
            if (rs.is_dominant(next)) {
                long long level = 0;
                for (long long c : next_coeffs) level += c;
                dominant.push_back({level, next});
            }
            queue.push_back({std::move(next), std::move(next_coeffs)});
        }
    }
    std::sort(dominant.begin(), dominant.end(), [](const DominantEntry& a, const DominantEntry& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.w < b.w;
    });
}

WeightMultiset compute_character(const RootSystem& rs, const Weight& hw) {
    std::set<Weight> all;
    std::vector<DominantEntry> dominant;
    enumerate_weights(rs, hw, all, dominant);

    const Weight top_shift = weight_add(hw, rs.rho2);
    const long long top_norm = dot2(top_shift, top_shift);

    std::map<Weight, long long> mult;
    mult[hw] = 1;
    for (const DominantEntry& entry : dominant) {
        if (entry.level == 0) continue;
        const Weight& mu = entry.w;
        const Weight mu_shift = weight_add(mu, rs.rho2);
        const long long denom = top_norm - dot2(mu_shift, mu_shift);
        if (denom <= 0)
            throw InternalError("Freudenthal denominator must be positive");
        long long num = 0;
        for (const Weight& alpha : rs.positive_roots) {
            Weight nu = mu;
            for (long long k = 1;; ++k) {
                nu = weight_add(nu, alpha);
                if (!all.count(nu)) break;
                auto it = mult.find(rs.dominantize(nu));
                if (it == mult.end())
                    throw InternalError("Freudenthal recursion referenced an unseen weight");
                num += 2 * dot2(nu, alpha) * it->second;
            }
        }
        if (num % denom != 0)
            throw InternalError("Freudenthal multiplicity is not integral");
        mult[mu] = num / denom;
    }

    // Multiplicity is Weyl-invariant: expand each dominant orbit.
    WeightMultiset out;
    for (const auto& [mu, m] : mult) {
        std::vector<Weight> queue{mu};
        std::set<Weight> orbit{mu};
        out[mu] = m;
        while (!queue.empty()) {
            Weight w = std::move(queue.back());
            queue.pop_back();
            for (int i = 0; i < rs.rank; ++i) {
                Weight r = rs.reflect_simple(w, i);
                if (orbit.insert(r).second) {
                    out[r] = m;
                    queue.push_back(std::move(r));
                }
            }
        }
    }
    return out;
}

std::mutex character_cache_mutex;
std::map<std::pair<std::string, Weight>, WeightMultiset> character_cache;

} // namespace

BigCount weyl_dim(const RootSystem& rs, const Weight& hw) {
    validate_highest_weight(rs, hw);
    const Weight shifted = weight_add(hw, rs.rho2);
    BigInt num = 1, den = 1;
    for (const Weight& alpha : rs.positive_roots) {
        num *= to_bigint(dot2(shifted, alpha));
        den *= to_bigint(dot2(rs.rho2, alpha));
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0 || sgn(q) <= 0)
        throw InternalError("Weyl dimension formula must yield a positive integer");
    return BigCount(q);
}

const WeightMultiset& irrep_character(const RootSystem& rs, const Weight& hw) {
    validate_highest_weight(rs, hw);
    const auto key = std::make_pair(rs.label, hw);
    {
        std::lock_guard<std::mutex> lock(character_cache_mutex);
        auto it = character_cache.find(key);
        if (it != character_cache.end()) return it->second;
    }
    WeightMultiset computed = compute_character(rs, hw);
    if (BigCount(to_bigint(total_multiplicity(computed))) != weyl_dim(rs, hw))
        throw InternalError("character total differs from the Weyl dimension");
    std::lock_guard<std::mutex> lock(character_cache_mutex);
    return character_cache.emplace(key, std::move(computed)).first->second;
}

WeightMultiset character_of(const RootSystem& rs, const VirtualRep& rep) {
    WeightMultiset out;
    for (const auto& [hw, coeff] : rep.terms) {
        if (coeff == 0) continue;
        for (const auto& [w, m] : irrep_character(rs, hw)) {
            out[w] += coeff * m;
            if (out[w] == 0) out.erase(w);
        }
    }
    return out;
}

VirtualRep decompose(WeightMultiset ws, const RootSystem& rs) {
    VirtualRep out;
    out.algebra = rs.label;
    for (auto it = ws.begin(); it != ws.end();)
        it = it->second == 0 ? ws.erase(it) : std::next(it);

    std::size_t guard = 0;
    const std::size_t guard_cap = 1000000;
    while (!ws.empty()) {
        if (++guard > guard_cap)
            throw InternalError("decompose did not terminate");
        // Extremal weight: maximal rho-pairing, ties broken lexicographically.
        // For a Weyl-symmetric multiset the winner is dominant, because the
        // dominant representative strictly maximizes the rho-pairing on its
        // orbit.
        auto best = ws.begin();
        long long best_key = dot2(best->first, rs.rho2);
        for (auto it = std::next(ws.begin()); it != ws.end(); ++it) {
            const long long key = dot2(it->first, rs.rho2);
            if (key > best_key || (key == best_key && it->first > best->first)) {
                best = it;
                best_key = key;
            }
        }
        const Weight hw = best->first;
        const long long coeff = best->second;
        if (!rs.is_dominant(hw))
            throw NotACharacterError("extremal weight is not dominant: the multiset is not a character");
        out.terms[hw] += coeff;
        for (const auto& [w, m] : irrep_character(rs, hw)) {
            auto it = ws.find(w);
            const long long next = (it == ws.end() ? 0 : it->second) - coeff * m;
            if (next == 0) {
                if (it != ws.end()) ws.erase(it);
            } else if (it == ws.end()) {
                ws.emplace(w, next);
            } else {
                it->second = next;
            }
        }
    }
    return out;
}

WeightMultiset alt_power(const WeightMultiset& ws, long long k) {
    if (k < 0)
        throw DomainError("alternating power requires k >= 0");
    if (ws.empty())
        throw DomainError("alternating power of an empty multiset");
    for (const auto& [w, m] : ws)
        if (m < 0)
            throw DomainError("alternating power requires a genuine representation");

    std::vector<Weight> items;
    for (const auto& [w, m] : ws)
        for (long long c = 0; c < m; ++c)
            items.push_back(w);

    const Weight zero(ws.begin()->first.size(), 0);
    std::vector<WeightMultiset> layer(static_cast<std::size_t>(k) + 1);
    layer[0][zero] = 1;
    for (const Weight& item : items) {
        const long long top = std::min<long long>(k, static_cast<long long>(items.size()));
        for (long long j = top; j >= 1; --j) {
            for (const auto& [w, m] : layer[j - 1]) {
                Weight sum = weight_add(w, item);
                layer[j][sum] += m;
            }
        }
    }
    return layer[static_cast<std::size_t>(k)];
}

WeightMultiset tensor_product(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out;
    for (const auto& [u, mu] : a)
        for (const auto& [v, mv] : b) {
            Weight sum = weight_add(u, v);
            out[sum] += mu * mv;
            if (out[sum] == 0) out.erase(sum);
        }
    return out;
}

WeightProjection preset_projection(const std::string& name) {
    WeightProjection p;
    p.name = name;
    if (name == "D5->B4") {
        p.map = Matrix(4, 5);
        for (std::size_t i = 0; i < 4; ++i) p.map.at(i, i) = 1;
        return p;
    }
    if (name == "B4->D4") {
        p.map = Matrix::identity(4);
        return p;
    }
    if (name == "D8->B4") {
        // Column i is the i-th positive-half B4 spinor weight, the 8
        // weights (1/2)(1, +-1, +-1, +-1) in descending lexicographic
        // order. The D8 vector rep then restricts to the B4 spinor 16.
        p.map = Matrix(4, 8);
        const Rational half(1, 2);
        for (int col = 0; col < 8; ++col) {
            p.map.at(0, col) = half;
            for (int bit = 0; bit < 3; ++bit) {
                const bool minus = (col >> (2 - bit)) & 1;
                p.map.at(bit + 1, col) = minus ? -half : half;
            }
        }
        return p;
    }
    throw DomainError("unknown projection preset '" + name + "'");
}

Weight project_weight(const WeightProjection& p, const Weight& w) {
    if (p.map.cols() != w.size())
        throw DomainError("projection input length mismatch");
    Weight out(p.map.rows());
    for (std::size_t i = 0; i < p.map.rows(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < p.map.cols(); ++j)
            acc += p.map.at(i, j) * Rational(static_cast<long>(w[j]));
        if (!acc.is_integer())
            throw InvalidProjectionError("projection leaves the target weight lattice");
        out[i] = acc.numerator().get_si();
    }
    return out;
}

VirtualRep branch(const RootSystem& src, const VirtualRep& rep,
                  const RootSystem& tgt, const WeightProjection& proj) {
    WeightMultiset projected;
    for (const auto& [w, m] : character_of(src, rep)) {
        Weight pw = project_weight(proj, w);
        projected[pw] += m;
        if (projected[pw] == 0) projected.erase(pw);
    }
    try {
        return decompose(std::move(projected), tgt);
    } catch (const NotACharacterError& e) {
        throw InvalidProjectionError(std::string("projected multiset is not ") + tgt.label +
                                     "-symmetric: " + e.what());
    }
}

VirtualRep kostant_multiplet(const RootSystem& g, const RootSystem& h,
                             const WeightProjection& proj) {
    VirtualRep s_plus;
    s_plus.algebra = g.label;
    s_plus.terms[half_spin_highest_weight(g, +1)] = 1;
    VirtualRep s_minus;
    s_minus.algebra = g.label;
    s_minus.terms[half_spin_highest_weight(g, -1)] = 1;

    VirtualRep plus = branch(g, s_plus, h, proj);
    VirtualRep minus = branch(g, s_minus, h, proj);
    VirtualRep out;
    out.algebra = h.label;
    out.terms = plus.terms;
    for (const auto& [hw, c] : minus.terms) {
        out.terms[hw] -= c;
        if (out.terms[hw] == 0) out.terms.erase(hw);
    }
    return out;
}

BigInt virtual_dimension(const RootSystem& rs, const VirtualRep& rep) {
    BigInt total = 0;
    for (const auto& [hw, coeff] : rep.terms)
        total += to_bigint(coeff) * weyl_dim(rs, hw).value();
    return total;
}

nlohmann::json virtual_rep_to_json(const RootSystem& rs, const VirtualRep& rep) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [hw, coeff] : rep.terms) {
        nlohmann::json t = {{"hw", hw},
                            {"coeff", coeff},
                            {"dim", weyl_dim(rs, hw).to_string()}};
        auto ch = rep.charges.find(hw);
        if (ch != rep.charges.end())
            t["charge"] = ch->second;
        terms.push_back(std::move(t));
    }
    return {{"algebra", rep.algebra}, {"terms", terms}};
}

std::string virtual_rep_to_string(const RootSystem& rs, const VirtualRep& rep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [hw, coeff] : rep.terms) {
        if (coeff == 0) continue;
        const std::string dim = weyl_dim(rs, hw).to_string();
        const long long mag = coeff < 0 ? -coeff : coeff;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << dim;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace octo
