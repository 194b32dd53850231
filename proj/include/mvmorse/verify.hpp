#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mvmorse/mv.hpp"
#include "mvmorse/prism.hpp"

namespace mvmorse {

// X~ = A-copy u prism(A n B) u B-copy. The prism is taken over A n B with
// the copy tags as prefixes, so its a-side is literally (A n B) inside the
// A-copy and its b-side is (A n B) inside the B-copy.
struct XTilde {
    enum class Part { A, B, Interior };

    std::shared_ptr<const SimplicialComplex> x;
    std::shared_ptr<const SimplicialComplex> complex;
    std::shared_ptr<const PrismComplex> prism;

    Part part(const Simplex& s) const;
    bool is_interior(const Simplex& s) const { return part(s) == Part::Interior; }
    std::vector<Simplex> interior(int q) const;
};

XTilde build_xtilde(const Decomposition& d);

// Pairs every A_alpha simplex with the B_alpha simplex obtained by dropping
// its last a-vertex. Certified.
GradientVectorField build_v_field(const XTilde& xt);

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    std::vector<std::string> details;
};

struct Report {
    std::vector<CheckResult> checks;
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

Report check_iso_simplicial(const XTilde& xt);

enum class Provenance { from_WA, from_WB, from_Wprime };

struct WField {
    GradientVectorField field;
    std::map<FieldPair, Provenance> parts;
};

// Throws ConsistencyError if the critical set differs from the expected
// A-copy, B-copy and interior parts, or if the union is not acyclic.
WField build_w_field(const XTilde& xt, const Decomposition& d);

// Interior critical simplex [a_{i0}, b_{i0}, ..., b_{iq}] for a critical
// intersection simplex gamma (copy names), and back.
Simplex interior_critical(const Decomposition& d, const Simplex& gamma);

// f: critical simplices of W -> MV generators. Throws std::invalid_argument
// for a simplex that is not W-critical.
MVGenerator f_map(const XTilde& xt, const Decomposition& d, const WField& w, const Simplex& s);
Simplex g_map(const Decomposition& d, const MVGenerator& g);

// 1..5. Throws ConsistencyError if no type fits.
int classify_w_trajectory(const Trajectory& t, const XTilde& xt, const WField& w);

Report check_main_iso(const XTilde& xt, const Decomposition& d, const WField& w);

// Everything above in sequence, converting construction failures into
// failed checks.
Report run_verification(const Decomposition& d);

}  // namespace mvmorse
