#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mvmorse/complex.hpp"
#include "mvmorse/homology.hpp"
#include "mvmorse/morse.hpp"

namespace mvmorse {

inline const std::string kTagA = "A:";
inline const std::string kTagB = "B:";
inline const std::string kTagI = "I:";

// Fields for the three copies. A missing field is generated by greedy_gvf
// with `strategy`; for the random strategy each piece gets its own seed
// derived from strategy.seed.
struct FieldPlan {
    std::optional<DiscreteVectorField> a, b, i;
    FieldStrategy strategy = FieldStrategy::lexicographic();

    static FieldPlan with_strategy(FieldStrategy s) {
        FieldPlan p;
        p.strategy = s;
        return p;
    }
};

// Seed used for piece k (0 = A, 1 = B, 2 = intersection) under a random strategy.
std::uint64_t piece_seed(std::uint64_t seed, int piece);

struct Decomposition {
    std::shared_ptr<const SimplicialComplex> x, a, b, iab;
    RelabeledCopy a_bar, b_bar, i_bar;
    GradientVectorField w_a, w_b, w_i;
};

// Throws DecompositionError when a or b is not a subcomplex of x or
// a u b != x; FieldError / NotAcyclicError for bad supplied fields.
Decomposition build_decomposition(const SimplicialComplex& x, const SimplicialComplex& a,
                                  const SimplicialComplex& b, const FieldPlan& plan = {});

enum class GeneratorKind { FromA, FromB, Shifted };

struct MVGenerator {
    GeneratorKind kind;
    Simplex simplex;  // in copy vertex names
    int degree;

    // Copy vertex names joined by commas, e.g. "I:v2,I:v3".
    std::string name() const;
    friend bool operator==(const MVGenerator&, const MVGenerator&) = default;
};

std::vector<MVGenerator> mv_generators(const Decomposition& d, int q);
// Looks a generator up by name; the tag may be given once ("I:v2,v3").
// Throws std::invalid_argument when no generator of that name exists.
MVGenerator find_generator(const Decomposition& d, const std::string& name);

struct MVTrajectory {
    int mv_case = 0;
    // Cases 1-3: the extended trajectory inside one copy. Cases 4/5: the
    // intersection part tau0, sigma1, ..., tau_p followed by the piece part
    // alpha_p, tau_{p+1}, ..., alpha_{p+l-1}, tau_{p+l}. The piece copy of
    // tau_p is implied, so with l = 0 the sequence ends at tau_p itself.
    std::vector<Simplex> simplices;
    std::size_t p = 0;
    std::size_t l = 0;
    int weight = 0;

    std::string str() const;
};

// Cases 4/5: the piece part starting with the piece copy of tau_p.
std::vector<Simplex> piece_part(const MVTrajectory& t);
// Terminal simplex in the copy it lives in.
Simplex mv_terminal(const MVTrajectory& t);

int mv_weight(const MVTrajectory& t);
// Empty when t satisfies the side conditions of its case, otherwise a reason.
std::string validate_mv_trajectory(const Decomposition& d, const MVTrajectory& t);

std::vector<MVTrajectory> enumerate_mv(const Decomposition& d, const MVGenerator& beta,
                                       const MVGenerator& alpha);

// Boundary D_q -> D_{q-1} over mv_generators(q) and mv_generators(q-1).
IntegerMatrix mv_boundary(const Decomposition& d, int q);
// Degrees 0..dim(X)+1. Throws ConsistencyError naming a generator pair if
// two consecutive boundaries fail to compose to zero.
IntegerChainComplex mv_chain_complex(const Decomposition& d);

}  // namespace mvmorse
