#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mvmorse/complex.hpp"
#include "mvmorse/homology.hpp"

namespace mvmorse {

struct FieldPair {
    Simplex lower;  // sigma, a facet of upper
    Simplex upper;  // tau
    friend auto operator<=>(const FieldPair&, const FieldPair&) = default;
};

// Partial matching of facets with cofaces. Not necessarily acyclic.
class DiscreteVectorField {
public:
    DiscreteVectorField() = default;
    // Throws FieldError on a non-facet pair or a simplex used twice.
    explicit DiscreteVectorField(const std::vector<FieldPair>& pairs);

    void add(const Simplex& lower, const Simplex& upper);
    std::vector<FieldPair> pairs() const;
    std::size_t size() const { return up_.size(); }
    bool empty() const { return up_.empty(); }

    const Simplex* up(const Simplex& s) const;
    const Simplex* down(const Simplex& s) const;
    bool matched(const Simplex& s) const { return up(s) || down(s); }
    bool contains(const Simplex& lower, const Simplex& upper) const;

private:
    std::map<Simplex, Simplex> up_;
    std::map<Simplex, Simplex> down_;
};

struct AcyclicityReport {
    bool acyclic = true;
    // On failure: tau0, sigma1, tau1, ..., sigma_k, tau0.
    std::vector<Simplex> witness;
    // On success: per dimension, a topological order of the simplices of
    // that dimension with respect to the trajectory digraph.
    std::vector<std::vector<Simplex>> order;
};

// Throws FieldError if a pair mentions a simplex outside x.
AcyclicityReport check_acyclic(const DiscreteVectorField& v, const SimplicialComplex& x);
bool is_acyclic(const DiscreteVectorField& v, const SimplicialComplex& x);

// A discrete vector field that passed the acyclicity check, indexed for
// fast traversal. Only certify() creates one.
class GradientVectorField {
public:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    // Throws NotAcyclicError carrying a closed trajectory.
    static GradientVectorField certify(std::shared_ptr<const SimplicialComplex> x, DiscreteVectorField v);

    const SimplicialComplex& complex() const { return *x_; }
    std::shared_ptr<const SimplicialComplex> complex_ptr() const { return x_; }
    const DiscreteVectorField& field() const { return v_; }

    // Partner indices: up(q, i) lives in dimension q+1, down(q, i) in q-1.
    std::size_t up(int q, std::size_t i) const { return up_[q][i]; }
    std::size_t down(int q, std::size_t i) const { return down_[q][i]; }
    bool critical(int q, std::size_t i) const { return up_[q][i] == none && down_[q][i] == none; }
    bool critical(const Simplex& s) const;

    std::vector<Simplex> critical_simplices(int q) const;
    std::vector<std::size_t> critical_indices(int q) const;
    std::size_t critical_count(int q) const;

private:
    GradientVectorField() = default;
    std::shared_ptr<const SimplicialComplex> x_;
    DiscreteVectorField v_;
    std::vector<std::vector<std::size_t>> up_, down_;
};

std::vector<Simplex> critical_simplices(const GradientVectorField& v, int q);

// Extended trajectory tau0, sigma1, tau1, ..., sigma_k, tau_k, sigma_{k+1}.
struct Trajectory {
    std::vector<Simplex> simplices;
    int weight = 0;

    std::size_t steps() const { return simplices.size() / 2 - 1; }
    const Simplex& initial() const { return simplices.front(); }
    const Simplex& terminal() const { return simplices.back(); }
    std::string str() const;
};

// Product formula over an extended trajectory sequence; +-1 whenever the
// sequence is a well-formed trajectory.
int trajectory_weight(const std::vector<Simplex>& simplices);
int trajectory_weight(const Trajectory& t);

// Empty string when t satisfies every side condition of an extended
// trajectory of v from a critical simplex to a critical simplex; otherwise the
// first violated condition.
std::string validate_trajectory(const Trajectory& t, const GradientVectorField& v);

// All extended trajectories from tau to sigma (both critical, dims q+1 and q).
std::vector<Trajectory> enumerate_trajectories(const GradientVectorField& v, const Simplex& tau,
                                               const Simplex& sigma);

// Sum of trajectory weights from a (q)-cell to every reachable critical
// (q-1)-cell, memoized over the field's trajectory DAG. Shared by the
// Thom-Smale and Mayer-Vietoris boundaries.
class FlowCache {
public:
    using Vector = std::map<std::size_t, Integer>;

    explicit FlowCache(const GradientVectorField& v) : v_(&v) {}

    // Weighted extended trajectories from cell (q, i) to critical (q-1)-cells.
    const Vector& descend(int q, std::size_t i);
    // Weighted trajectories (no final step) from cell (q, i) to any q-cell;
    // includes the empty trajectory with weight 1 at (q, i) itself.
    const Vector& reach(int q, std::size_t i);
    // Ascending trajectories s, up(s), t, up(t), ... from cell (q, i) to
    // critical q-cells. A critical start contributes itself with weight 1.
    const Vector& ascend(int q, std::size_t i);

private:
    const GradientVectorField* v_;
    std::map<std::pair<int, std::size_t>, Vector> descend_, reach_, ascend_;
};

// d_q : C_q -> C_{q-1} over critical cells in canonical order.
IntegerMatrix thom_smale_boundary(const GradientVectorField& v, int q);
IntegerChainComplex thom_smale_complex(const GradientVectorField& v);

enum class Strategy { lexicographic, random };

struct FieldStrategy {
    Strategy kind = Strategy::lexicographic;
    std::uint64_t seed = 0;

    static FieldStrategy lexicographic() { return {Strategy::lexicographic, 0}; }
    static FieldStrategy random(std::uint64_t seed) { return {Strategy::random, seed}; }
};

// Coreduction-style greedy matching. Always acyclic.
GradientVectorField greedy_gvf(std::shared_ptr<const SimplicialComplex> x, FieldStrategy strategy);

}  // namespace mvmorse
