#pragma once

#include <istream>
#include <string>

#include "mvmorse/mv.hpp"

namespace mvmorse {

// One maximal simplex per line, whitespace-separated vertex names, '#'
// starts a comment. Throws ParseError with the offending line.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);

struct DecompositionInput {
    SimplicialComplex a, b;
    FieldPlan plan;
    bool strategy_given = false;  // an "auto" line was present
};

// Sections [A], [B] and optionally [fields]. [A]/[B] list maximal simplices
// in X's vertex names. [fields] holds "auto lexicographic", "auto random <seed>",
// "<piece>: <sigma vertices> -> <tau vertices>" (piece A, B or I, vertices in
// X's names) or "<piece>: none" for an explicitly empty field.
DecompositionInput parse_decomposition(std::istream& in);
DecompositionInput read_decomposition_file(const std::string& path);

// "sigma -> tau" per line, in the copy's vertex names.
std::string format_field(const DiscreteVectorField& v);
// The three fields of d as a [fields] section in X's vertex names.
std::string format_fields_section(const Decomposition& d);

}  // namespace mvmorse
