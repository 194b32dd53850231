#include "mvmorse/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mvmorse/errors.hpp"

namespace mvmorse {

namespace {

std::string strip_comment(const std::string& line) {
    auto s = line.substr(0, line.find('#'));
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Vertex> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<Vertex> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

Simplex simplex_at(const std::vector<Vertex>& vs, std::size_t line) {
    if (vs.empty()) throw ParseError("empty simplex", line);
    for (const auto& v : vs)
        if (v.find_first_of("[],") != std::string::npos || v.find("->") != std::string::npos)
            throw ParseError("bad vertex name '" + v + "'", line);
    try {
        return Simplex(vs);
    } catch (const ComplexError& e) {
        throw ParseError(e.what(), line);
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
    std::vector<Simplex> tops;
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) {
        ++n;
        auto body = strip_comment(line);
        if (body.empty()) continue;
        tops.push_back(simplex_at(words(body), n));
    }
    if (tops.empty()) throw ParseError("no simplices in complex file");
    return SimplicialComplex::closure(tops);
}

SimplicialComplex read_complex_file(const std::string& path) {
    auto in = open(path);
    return parse_complex(in);
}

DecompositionInput parse_decomposition(std::istream& in) {
    DecompositionInput out;
    std::vector<Simplex> a, b;
    std::optional<DiscreteVectorField> fa, fb, fi;
    std::string section;
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) {
        ++n;
        auto body = strip_comment(line);
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body == "[A]" || body == "[B]" || body == "[fields]")
                section = body;
            else
                throw ParseError("unknown section " + body, n);
            continue;
        }
        if (section == "[A]" || section == "[B]") {
            (section == "[A]" ? a : b).push_back(simplex_at(words(body), n));
        } else if (section == "[fields]") {
            auto w = words(body);
            if (w[0] == "auto") {
                if (w.size() == 2 && (w[1] == "lexicographic" || w[1] == "lex")) {
                    out.plan.strategy = FieldStrategy::lexicographic();
                } else if (w.size() == 3 && w[1] == "random") {
                    try {
                        std::size_t used = 0;
                        out.plan.strategy = FieldStrategy::random(std::stoull(w[2], &used));
                        if (used != w[2].size()) throw std::invalid_argument("seed");
                    } catch (const std::exception&) {
                        throw ParseError("bad seed '" + w[2] + "'", n);
                    }
                } else {
                    throw ParseError("expected 'auto lexicographic' or 'auto random <seed>'", n);
                }
                out.strategy_given = true;
                continue;
            }
            std::optional<DiscreteVectorField>* target = w[0] == "A:"   ? &fa
                                                         : w[0] == "B:" ? &fb
                                                         : w[0] == "I:" ? &fi
                                                                        : nullptr;
            if (!target) throw ParseError("field line must start with A:, B: or I:", n);
            if (!*target) target->emplace();
            const std::string& tag = w[0];
            if (w.size() == 2 && w[1] == "none") continue;
            auto arrow = std::find(w.begin(), w.end(), "->");
            if (arrow == w.end()) throw ParseError("expected 'sigma -> tau'", n);
            std::vector<Vertex> lo, hi;
            for (auto it = w.begin() + 1; it != arrow; ++it) lo.push_back(tag + *it);
            for (auto it = arrow + 1; it != w.end(); ++it) hi.push_back(tag + *it);
            try {
                (*target)->add(simplex_at(lo, n), simplex_at(hi, n));
            } catch (const FieldError& e) {
                throw ParseError(e.what(), n);
            }
        } else {
            throw ParseError("line outside of any section", n);
        }
    }
    if (a.empty()) throw DecompositionError("section [A] is missing or empty");
    if (b.empty()) throw DecompositionError("section [B] is missing or empty");
    out.a = SimplicialComplex::closure(a);
    out.b = SimplicialComplex::closure(b);
    out.plan.a = std::move(fa);
    out.plan.b = std::move(fb);
    out.plan.i = std::move(fi);
    return out;
}

DecompositionInput read_decomposition_file(const std::string& path) {
    auto in = open(path);
    return parse_decomposition(in);
}

std::string format_field(const DiscreteVectorField& v) {
    std::string out;
    for (const auto& [lo, hi] : v.pairs()) {
        std::string l, h;
        for (const auto& x : lo.vertices()) l += (l.empty() ? "" : " ") + x;
        for (const auto& x : hi.vertices()) h += (h.empty() ? "" : " ") + x;
        out += l + " -> " + h + "\n";
    }
    return out;
}

std::string format_fields_section(const Decomposition& d) {
    std::string out = "[fields]\n";
    auto emit = [&](const RelabeledCopy& c, const GradientVectorField& f) {
        if (f.field().empty()) {
            out += c.tag + " none\n";
            return;
        }
        for (const auto& [lo, hi] : f.field().pairs()) {
            out += c.tag;
            for (const auto& x : lo.vertices()) out += " " + c.from_copy(x);
            out += " ->";
            for (const auto& x : hi.vertices()) out += " " + c.from_copy(x);
            out += "\n";
        }
    };
    emit(d.a_bar, d.w_a);
    emit(d.b_bar, d.w_b);
    emit(d.i_bar, d.w_i);
    return out;
}

}  // namespace mvmorse
