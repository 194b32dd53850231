#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "mvmorse/complex.hpp"

namespace mvmorse {

using Integer = boost::multiprecision::cpp_int;

// Dense row-major matrix over Z.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    std::size_t nonzeros() const;
    IntegerMatrix transposed() const;
    // Rows and columns reordered: result(i, j) = this(row_order[i], col_order[j]).
    IntegerMatrix permuted(const std::vector<std::size_t>& row_order,
                           const std::vector<std::size_t>& col_order) const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::string to_string(const IntegerMatrix& m);

struct SmithForm {
    std::vector<Integer> factors;  // positive, d1 | d2 | ...
    std::size_t rank = 0;
};

SmithForm smith_normal_form(IntegerMatrix m);

// Graded free Z-module with boundaries. boundary(q) : C_q -> C_{q-1} has
// rank(q-1) rows and rank(q) columns; boundary(0) is the empty 0 x rank(0) map.
class IntegerChainComplex {
public:
    IntegerChainComplex() = default;
    // labels[q] names the generators of C_q; boundaries[q] is d_q for q >= 1
    // (boundaries[0] is ignored and may be empty).
    IntegerChainComplex(std::vector<std::vector<std::string>> labels, std::vector<IntegerMatrix> boundaries);

    int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
    std::size_t rank(int q) const;
    const std::vector<std::string>& labels(int q) const;
    IntegerMatrix boundary(int q) const;

    // First q with d_q * d_{q+1} != 0, or -1.
    int composition_failure() const;

private:
    std::vector<std::vector<std::string>> labels_;
    std::vector<IntegerMatrix> boundaries_;
};

struct DegreeHomology {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;
    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyResult {
    std::vector<DegreeHomology> degrees;

    const DegreeHomology& at(int q) const;
    std::size_t betti(int q) const;
    std::vector<Integer> torsion(int q) const;
    // Drops trailing trivial degrees; equality compares trimmed results.
    HomologyResult trimmed() const;
    std::string str() const;
    friend bool operator==(const HomologyResult& a, const HomologyResult& b);
};

// Throws ConsistencyError if the boundaries do not compose to zero.
HomologyResult homology(const IntegerChainComplex& c);

IntegerChainComplex simplicial_chain_complex(const SimplicialComplex& x);
HomologyResult simplicial_homology(const SimplicialComplex& x);

}  // namespace mvmorse
