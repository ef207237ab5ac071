#include "octo/cayley_dickson.hpp"

#include <sstream>

namespace octo {

namespace {

void require_level(int level) {
    if (level < 0 || level > cd_max_level)
        throw DomainError("Cayley-Dickson level must be 0..3");
}

std::pair<CDElement, CDElement> split(const CDElement& x) {
    const int half_level = x.level() - 1;
    const std::size_t h = x.dim() / 2;
    Vec lo(x.coords().begin(), x.coords().begin() + h);
    Vec hi(x.coords().begin() + h, x.coords().end());
    return {CDElement(half_level, std::move(lo)), CDElement(half_level, std::move(hi))};
}

CDElement join(const CDElement& a, const CDElement& b) {
    Vec c = a.coords();
    c.insert(c.end(), b.coords().begin(), b.coords().end());
    return CDElement(a.level() + 1, std::move(c));
}

} // namespace

CDElement::CDElement(int level) : level_(level) {
    require_level(level);
    coords_.assign(std::size_t{1} << level, Rational(0));
}

CDElement::CDElement(int level, Vec coords) : level_(level), coords_(std::move(coords)) {
    require_level(level);
    if (coords_.size() != (std::size_t{1} << level))
        throw DomainError("coords length must be 2^level");
}

CDElement CDElement::basis_unit(int level, std::size_t index) {
    CDElement e(level);
    if (index >= e.dim())
        throw DomainError("basis unit index out of range");
    e.coords_[index] = 1;
    return e;
}

CDElement CDElement::from_real(int level, const Rational& r) {
    CDElement e(level);
    e.coords_[0] = r;
    return e;
}

bool CDElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

CDElement CDElement::conjugate() const {
    CDElement r = *this;
    for (std::size_t i = 1; i < r.coords_.size(); ++i)
        r.coords_[i] = -r.coords_[i];
    return r;
}

CDElement CDElement::operator-() const {
    CDElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CDElement& CDElement::operator+=(const CDElement& o) {
    if (level_ != o.level_) throw DomainError("mismatched Cayley-Dickson levels");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CDElement& CDElement::operator-=(const CDElement& o) {
    if (level_ != o.level_) throw DomainError("mismatched Cayley-Dickson levels");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CDElement& CDElement::operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

std::string CDElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << c.to_string();
        } else if (c == Rational(1)) {
            os << "e" << i;
        } else if (c == Rational(-1)) {
            os << "-e" << i;
        } else {
            os << c.to_string() << "*e" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CDElement cd_multiply(const CDElement& x, const CDElement& y) {
    if (x.level() != y.level())
        throw DomainError("mismatched Cayley-Dickson levels in product");
    if (x.level() == 0)
        return CDElement(0, Vec{x.coord(0) * y.coord(0)});
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
    CDElement lo = cd_multiply(a, c) - cd_multiply(d.conjugate(), b);
    CDElement hi = cd_multiply(d, a) + cd_multiply(b, c.conjugate());
    return join(lo, hi);
}

Rational norm(const CDElement& x) {
    Rational n;
    for (const auto& c : x.coords()) n += c * c;
    return n;
}

CDElement inverse(const CDElement& x) {
    const Rational n = norm(x);
    if (n.is_zero())
        throw DivideByZeroError("inverse of zero element");
    CDElement r = x.conjugate();
    const Rational inv_n = Rational(1) / n;
    return r *= inv_n;
}

CDElement associator(const CDElement& a, const CDElement& b, const CDElement& c) {
    return cd_multiply(a, cd_multiply(b, c)) - cd_multiply(cd_multiply(a, b), c);
}

CDElement commutator(const CDElement& a, const CDElement& b) {
    return cd_multiply(a, b) - cd_multiply(b, a);
}

StructureConstants structure_constants(int level) {
    require_level(level);
    const std::size_t d = std::size_t{1} << level;
    StructureConstants s;
    s.dimension = d;
    s.table.assign(d * d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const CDElement p =
                cd_multiply(CDElement::basis_unit(level, i), CDElement::basis_unit(level, j));
            for (std::size_t k = 0; k < d; ++k)
                s.c(i, j, k) = p.coord(k);
        }
    return s;
}

nlohmann::json structure_constants_to_json(const StructureConstants& s) {
    nlohmann::json triples = nlohmann::json::array();
    for (std::size_t i = 0; i < s.dimension; ++i)
        for (std::size_t j = 0; j < s.dimension; ++j)
            for (std::size_t k = 0; k < s.dimension; ++k)
                if (!s.c(i, j, k).is_zero())
                    triples.push_back({i, j, k, s.c(i, j, k).to_string()});
    return {{"dimension", s.dimension}, {"triples", triples}};
}

Rational ThreeForm::value(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j || j == k || i == k) return Rational(0);
    // Sort the triple, tracking the permutation sign.
    std::array<std::size_t, 3> t{i, j, k};
    int sign = 1;
    if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
    if (t[1] > t[2]) { std::swap(t[1], t[2]); sign = -sign; }
    if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
    auto it = components.find(t);
    if (it == components.end()) return Rational(0);
    return sign < 0 ? -it->second : it->second;
}

ThreeForm structure_3form() {
    const StructureConstants s = structure_constants(3);
    ThreeForm phi;
    phi.dimension = 7;
    for (std::size_t i = 1; i <= 7; ++i)
        for (std::size_t j = i + 1; j <= 7; ++j)
            for (std::size_t k = j + 1; k <= 7; ++k) {
                // e0-coefficient of (e_i e_j) conj(e_k) equals c(i,j,k).
                const Rational& v = s.c(i, j, k);
                if (!v.is_zero())
                    phi.components[{i, j, k}] = v;
            }
    return phi;
}

ThreeForm volume_3form() {
    ThreeForm vol;
    vol.dimension = 3;
    vol.components[{1, 2, 3}] = 1;
    return vol;
}

} // namespace octo
