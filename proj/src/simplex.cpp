#include "mvmorse/simplex.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvmorse/errors.hpp"

namespace mvmorse {

namespace {

void check_canonical(const std::vector<Vertex>& v) {
    if (v.empty()) throw ComplexError("empty simplex");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] == v[i]) throw ComplexError("duplicate vertex '" + v[i] + "' in simplex");
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    check_canonical(v_);
}

Simplex::Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

bool Simplex::contains(const Vertex& v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

std::size_t Simplex::position(const Vertex& v) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    if (it == v_.end() || *it != v) return npos;
    return static_cast<std::size_t>(it - v_.begin());
}

Simplex Simplex::without(std::size_t pos) const {
    std::vector<Vertex> out;
    out.reserve(v_.size() - 1);
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (i != pos) out.push_back(v_[i]);
    if (out.empty()) throw ComplexError("removing the only vertex of " + str());
    return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::with(const Vertex& v) const {
    std::vector<Vertex> out = v_;
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it != out.end() && *it == v) throw ComplexError("vertex '" + v + "' already in " + str());
    out.insert(it, v);
    return Simplex(Sorted{}, std::move(out));
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (v_.size() < 2) return out;
    for (std::size_t i = 0; i < v_.size(); ++i) out.push_back(without(i));
    return out;
}

std::string Simplex::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ',';
        s += v_[i];
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
    return a.v_ <=> b.v_;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& v : s.vertices()) h = (h ^ std::hash<std::string>{}(v)) * 0x100000001b3ull;
    return h;
}

OrientedSimplex::OrientedSimplex(Simplex s, int sgn) : simplex(std::move(s)), sign(sgn) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("orientation sign must be +1 or -1");
}

OrientedSimplex OrientedSimplex::from_ordering(const std::vector<Vertex>& ordering) {
    Simplex s(ordering);
    int inversions = 0;
    for (std::size_t i = 0; i < ordering.size(); ++i)
        for (std::size_t j = i + 1; j < ordering.size(); ++j)
            if (ordering[j] < ordering[i]) ++inversions;
    return OrientedSimplex(std::move(s), inversions % 2 ? -1 : 1);
}

std::string OrientedSimplex::str() const { return (sign < 0 ? "-" : "") + simplex.str(); }

int incidence(const Simplex& tau, const Simplex& sigma) {
    if (tau.dim() != sigma.dim() + 1)
        throw std::invalid_argument("incidence: dimension mismatch between " + tau.str() + " and " +
                                    sigma.str());
    const auto& t = tau.vertices();
    const auto& s = sigma.vertices();
    std::size_t i = 0;
    while (i < s.size() && t[i] == s[i]) ++i;
    for (std::size_t j = i; j < s.size(); ++j)
        if (t[j + 1] != s[j]) return 0;
    return i % 2 ? -1 : 1;
}

int incidence(const OrientedSimplex& tau, const OrientedSimplex& sigma) {
    return incidence(tau.simplex, sigma.simplex) * tau.sign * sigma.sign;
}

}  // namespace mvmorse
