#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvmorse/simplex.hpp"

namespace mvmorse {

// Finite abstract simplicial complex, immutable once built. Simplices of each
// dimension are stored in canonical order; (dim, index) addresses a cell.
class SimplicialComplex {
public:
    struct Incidence {
        std::size_t index;
        int sign;
    };

    // The empty complex. Not constructible from user input.
    SimplicialComplex() = default;

    // Downward closure of the given simplices (they need not be maximal).
    static SimplicialComplex closure(const std::vector<Simplex>& simplices);
    // Assumes the set is already downward closed; throws ComplexError if not.
    static SimplicialComplex from_closed_set(std::vector<Simplex> simplices);

    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    bool empty() const { return cells_.empty(); }
    std::size_t count(int q) const;
    std::size_t size() const;
    const std::vector<Simplex>& simplices(int q) const;
    const Simplex& simplex(int q, std::size_t i) const { return cells_[q][i]; }
    std::vector<Simplex> all_simplices() const;
    const std::vector<Simplex>& maximal() const { return maximal_; }
    std::vector<Vertex> vertices() const;

    std::optional<std::size_t> find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }
    // Throws FieldError naming the simplex when absent.
    std::size_t index_of(const Simplex& s) const;

    // Facets of cell (q, i) as indices into dimension q-1, with incidence numbers.
    std::span<const Incidence> facets(int q, std::size_t i) const { return facets_[q][i]; }
    // Cofaces of cell (q, i) as indices into dimension q+1.
    std::span<const Incidence> cofaces(int q, std::size_t i) const { return cofaces_[q][i]; }

    bool is_subcomplex_of(const SimplicialComplex& other) const;
    long euler_characteristic() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.cells_ == b.cells_;
    }

private:
    void index();

    std::vector<std::vector<Simplex>> cells_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> lookup_;
    std::vector<std::vector<std::vector<Incidence>>> facets_;
    std::vector<std::vector<std::vector<Incidence>>> cofaces_;
    std::vector<Simplex> maximal_;
};

// Downward closure of a list of vertex lists. Throws ComplexError on empty
// input, an empty simplex, or a vertex repeated inside one simplex.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal_simplices);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// Isomorphic copy with every vertex name prefixed by tag.
struct RelabeledCopy {
    std::shared_ptr<const SimplicialComplex> complex;
    std::string tag;

    Vertex to_copy(const Vertex& v) const { return tag + v; }
    Vertex from_copy(const Vertex& v) const;
    Simplex to_copy(const Simplex& s) const;
    Simplex from_copy(const Simplex& s) const;
    bool owns(const Vertex& v) const { return v.compare(0, tag.size(), tag) == 0; }
};

// Throws ComplexError when tag is empty or some vertex name already starts with it.
RelabeledCopy copy_relabel(const SimplicialComplex& y, std::string tag);

// Map every simplex through a vertex renaming and close.
SimplicialComplex rename_vertices(const SimplicialComplex& y,
                                  const std::function<Vertex(const Vertex&)>& rename);

}  // namespace mvmorse
