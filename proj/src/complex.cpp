#include "mvmorse/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "mvmorse/errors.hpp"

namespace mvmorse {

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& simplices) {
    std::unordered_set<Simplex, SimplexHash> all;
    for (const auto& s : simplices) {
        if (s.empty()) throw ComplexError("empty simplex");
        if (s.size() > 24) throw ComplexError("simplex too large to close: " + s.str());
        const auto& v = s.vertices();
        const std::uint32_t n = static_cast<std::uint32_t>(v.size());
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> sub;
            for (std::uint32_t i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(v[i]);
            all.insert(Simplex(std::move(sub)));
        }
    }
    return from_closed_set(std::vector<Simplex>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_closed_set(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    SimplicialComplex c;
    for (auto& s : simplices) {
        if (s.empty()) throw ComplexError("empty simplex");
        const auto q = static_cast<std::size_t>(s.dim());
        if (c.cells_.size() <= q) c.cells_.resize(q + 1);
        c.cells_[q].push_back(std::move(s));
    }
    c.index();
    for (int q = 1; q <= c.dim(); ++q)
        for (const auto& s : c.cells_[q])
            for (const auto& f : s.facets())
                if (!c.contains(f))
                    throw ComplexError("not downward closed: " + f.str() + " missing below " + s.str());
    return c;
}

void SimplicialComplex::index() {
    const std::size_t n = cells_.size();
    for (std::size_t q = 0; q < n; ++q)
        if (cells_[q].empty()) throw ComplexError("complex has a gap in dimension " + std::to_string(q));
    lookup_.assign(n, {});
    facets_.assign(n, {});
    cofaces_.assign(n, {});
    for (std::size_t q = 0; q < n; ++q) {
        lookup_[q].reserve(cells_[q].size());
        for (std::size_t i = 0; i < cells_[q].size(); ++i) lookup_[q].emplace(cells_[q][i], i);
        facets_[q].resize(cells_[q].size());
        cofaces_[q].resize(cells_[q].size());
    }
    for (std::size_t q = 1; q < n; ++q) {
        for (std::size_t i = 0; i < cells_[q].size(); ++i) {
            const auto& s = cells_[q][i];
            for (std::size_t k = 0; k < s.size(); ++k) {
                auto it = lookup_[q - 1].find(s.without(k));
                if (it == lookup_[q - 1].end()) continue;
                const int sign = k % 2 ? -1 : 1;
                facets_[q][i].push_back({it->second, sign});
                cofaces_[q - 1][it->second].push_back({i, sign});
            }
        }
    }
    maximal_.clear();
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t i = 0; i < cells_[q].size(); ++i)
            if (cofaces_[q][i].empty()) maximal_.push_back(cells_[q][i]);
}

std::size_t SimplicialComplex::count(int q) const {
    if (q < 0 || q > dim()) return 0;
    return cells_[q].size();
}

std::size_t SimplicialComplex::size() const {
    std::size_t n = 0;
    for (const auto& c : cells_) n += c.size();
    return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
    static const std::vector<Simplex> none;
    if (q < 0 || q > dim()) return none;
    return cells_[q];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    for (const auto& c : cells_) out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
    const int q = s.dim();
    if (q < 0 || q > dim()) return std::nullopt;
    auto it = lookup_[q].find(s);
    if (it == lookup_[q].end()) return std::nullopt;
    return it->second;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
    auto i = find(s);
    if (!i) throw FieldError("simplex " + s.str() + " is not in the complex");
    return *i;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& c : cells_)
        for (const auto& s : c)
            if (!other.contains(s)) return false;
    return true;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t q = 0; q < cells_.size(); ++q)
        chi += (q % 2 ? -1 : 1) * static_cast<long>(cells_[q].size());
    return chi;
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal_simplices) {
    if (maximal_simplices.empty()) throw ComplexError("a complex needs at least one simplex");
    std::vector<Simplex> given;
    given.reserve(maximal_simplices.size());
    for (const auto& vs : maximal_simplices) given.emplace_back(vs);
    return SimplicialComplex::closure(given);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto all = a.all_simplices();
    auto more = b.all_simplices();
    all.insert(all.end(), more.begin(), more.end());
    return SimplicialComplex::from_closed_set(std::move(all));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> common;
    for (const auto& s : a.all_simplices())
        if (b.contains(s)) common.push_back(s);
    return SimplicialComplex::from_closed_set(std::move(common));
}

Vertex RelabeledCopy::from_copy(const Vertex& v) const {
    if (!owns(v)) throw FieldError("vertex '" + v + "' does not carry the copy tag '" + tag + "'");
    return v.substr(tag.size());
}

Simplex RelabeledCopy::to_copy(const Simplex& s) const {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (const auto& v : s.vertices()) out.push_back(to_copy(v));
    return Simplex(std::move(out));
}

Simplex RelabeledCopy::from_copy(const Simplex& s) const {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (const auto& v : s.vertices()) out.push_back(from_copy(v));
    return Simplex(std::move(out));
}

SimplicialComplex rename_vertices(const SimplicialComplex& y,
                                  const std::function<Vertex(const Vertex&)>& rename) {
    std::vector<Simplex> out;
    for (const auto& s : y.all_simplices()) {
        std::vector<Vertex> vs;
        for (const auto& v : s.vertices()) vs.push_back(rename(v));
        out.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_closed_set(std::move(out));
}

RelabeledCopy copy_relabel(const SimplicialComplex& y, std::string tag) {
    if (tag.empty()) throw ComplexError("copy tag must be nonempty");
    for (const auto& v : y.vertices())
        if (v.compare(0, tag.size(), tag) == 0)
            throw ComplexError("copy tag '" + tag + "' collides with vertex '" + v + "'");
    RelabeledCopy c;
    c.tag = tag;
    c.complex = std::make_shared<const SimplicialComplex>(
        rename_vertices(y, [&](const Vertex& v) { return tag + v; }));
    return c;
}

}  // namespace mvmorse
