#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mvmorse {

using Vertex = std::string;

// A simplex in canonical form: strictly increasing vertex names.
// Ordering is by dimension first, then lexicographic on the vertex list.
class Simplex {
public:
    Simplex() = default;
    // Sorts the input. Throws ComplexError on an empty list or a repeated vertex.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const std::vector<Vertex>& vertices() const { return v_; }
    const Vertex& operator[](std::size_t i) const { return v_[i]; }

    bool contains(const Vertex& v) const;
    bool is_face_of(const Simplex& other) const;
    // Position of v in canonical order, or npos.
    std::size_t position(const Vertex& v) const;
    Simplex without(std::size_t pos) const;
    Simplex with(const Vertex& v) const;
    std::vector<Simplex> facets() const;

    // "[v0,v1,v2]"
    std::string str() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    struct Sorted {};
    Simplex(Sorted, std::vector<Vertex> v) : v_(std::move(v)) {}
    std::vector<Vertex> v_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

// Canonical simplex plus an orientation class relative to canonical order.
struct OrientedSimplex {
    Simplex simplex;
    int sign = 1;

    OrientedSimplex() = default;
    OrientedSimplex(Simplex s, int sgn = 1);
    // Orientation given by an explicit vertex ordering; the permutation
    // parity relative to canonical order is folded into sign.
    static OrientedSimplex from_ordering(const std::vector<Vertex>& ordering);

    int dim() const { return simplex.dim(); }
    std::string str() const;
    friend bool operator==(const OrientedSimplex&, const OrientedSimplex&) = default;
};

// <tau, sigma>: 0 unless sigma is a facet of tau, otherwise (-1)^i times both
// signs, i the position in tau of the vertex missing from sigma.
// Throws std::invalid_argument unless dim(tau) == dim(sigma) + 1.
int incidence(const OrientedSimplex& tau, const OrientedSimplex& sigma);
int incidence(const Simplex& tau, const Simplex& sigma);

}  // namespace mvmorse
