#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mvmorse/complex.hpp"

namespace mvmorse {

// Prism over a base complex Y. Every base vertex v has an a-copy a_prefix+v and
// a b-copy b_prefix+v. The prefixes are chosen so that all a-names sort before
// all b-names, which makes the canonical order of a prism simplex read
// [a_{i0},...,a_{ir}, b_{js},...,b_{jq}].
class PrismComplex {
public:
    PrismComplex(std::shared_ptr<const SimplicialComplex> base, std::string a_prefix,
                 std::string b_prefix);

    const SimplicialComplex& base() const { return *base_; }
    const SimplicialComplex& complex() const { return *complex_; }
    std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
    const std::string& a_prefix() const { return a_prefix_; }
    const std::string& b_prefix() const { return b_prefix_; }

    Vertex a(const Vertex& v) const { return a_prefix_ + v; }
    Vertex b(const Vertex& v) const { return b_prefix_ + v; }

    // a-copies of alpha's first a_count vertices together with b-copies of
    // alpha's vertices from position b_from on.
    Simplex block_simplex(const Simplex& alpha, std::size_t a_count, std::size_t b_from) const;
    Simplex a_side(const Simplex& alpha) const { return block_simplex(alpha, alpha.size(), alpha.size()); }
    Simplex b_side(const Simplex& alpha) const { return block_simplex(alpha, 0, 0); }

    // A_alpha: {a_{i0..ir} b_{ir..iq}}, r = 0..q, in that order.
    std::vector<Simplex> upper_block(const Simplex& alpha) const;
    // B_alpha: b_{i0..iq}, then {a_{i0..i(r-1)} b_{ir..iq}} for r = 1..q, then a_{i0..iq}.
    std::vector<Simplex> lower_block(const Simplex& alpha) const;

    // Ground simplex of a prism simplex. Throws FieldError if sigma is not in the prism.
    Simplex ground(const Simplex& sigma) const;
    // Simplices made only of a-vertices or only of b-vertices.
    bool on_boundary(const Simplex& sigma) const;
    bool is_a_vertex(const Vertex& v) const;
    bool is_b_vertex(const Vertex& v) const;

private:
    std::shared_ptr<const SimplicialComplex> base_;
    std::shared_ptr<const SimplicialComplex> complex_;
    std::string a_prefix_;
    std::string b_prefix_;
};

// Throws ComplexError if the prefixes do not order a-names before b-names or
// collide with base vertex names.
PrismComplex prism(const SimplicialComplex& y, std::string a_prefix = "Pa:", std::string b_prefix = "Pb:");

Simplex ground_simplex(const PrismComplex& p, const Simplex& sigma);
OrientedSimplex ground_simplex(const PrismComplex& p, const OrientedSimplex& sigma);

}  // namespace mvmorse
