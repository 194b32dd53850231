#include "mvmorse/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>

#include "mvmorse/errors.hpp"
#include "mvmorse/io.hpp"
#include "mvmorse/verify.hpp"

namespace mvmorse {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json homology_json(const HomologyResult& h, std::optional<int> only) {
    Json arr = Json::array();
    for (const auto& d : h.degrees) {
        if (only && d.degree != *only) continue;
        Json t = Json::array();
        for (const auto& f : d.torsion) t.push_back(integer_json(f));
        arr.push_back({{"degree", d.degree}, {"betti", d.betti}, {"torsion", t}});
    }
    return arr;
}

std::string group_text(const DegreeHomology& d) {
    std::string s;
    if (d.betti > 0) s = d.betti == 1 ? "Z" : "Z^" + std::to_string(d.betti);
    for (const auto& t : d.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
    return s.empty() ? "0" : s;
}

void homology_text(std::ostream& out, const HomologyResult& h, std::optional<int> only) {
    for (const auto& d : h.degrees)
        if (!only || d.degree == *only) out << "H_" << d.degree << " = " << group_text(d) << "\n";
}

// Degrees 0..dim X, plus any nontrivial degree above.
HomologyResult report_degrees(const HomologyResult& h, int dim) {
    HomologyResult t = h.trimmed();
    HomologyResult out;
    for (int q = 0; q <= std::max(dim, t.degrees.empty() ? 0 : t.degrees.back().degree); ++q) {
        DegreeHomology d = h.at(q);
        d.degree = q;
        out.degrees.push_back(d);
    }
    return out;
}

struct Loaded {
    Decomposition d;
    std::string strategy;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> given;
};

Loaded load(const RunConfig& cfg) {
    if (cfg.decomposition_path.empty()) throw std::invalid_argument("--decomposition is required");
    const auto x = read_complex_file(cfg.complex_path);
    auto in = read_decomposition_file(cfg.decomposition_path);
    FieldPlan plan = in.plan;
    if (cfg.strategy) {
        plan = FieldPlan::with_strategy({*cfg.strategy, cfg.seed.value_or(kDefaultSeed)});
    } else if (cfg.seed && plan.strategy.kind == Strategy::random) {
        plan.strategy.seed = *cfg.seed;
    }
    Loaded l{build_decomposition(x, in.a, in.b, plan), {}, {}, {}};
    l.strategy = plan.strategy.kind == Strategy::random ? "random" : "lexicographic";
    if (plan.strategy.kind == Strategy::random) l.seed = plan.strategy.seed;
    if (plan.a) l.given.push_back("A");
    if (plan.b) l.given.push_back("B");
    if (plan.i) l.given.push_back("I");
    if (!cfg.fields_out.empty()) {
        std::ofstream f(cfg.fields_out);
        if (!f) throw std::runtime_error("cannot write '" + cfg.fields_out + "'");
        f << format_fields_section(l.d);
    }
    return l;
}

Json fields_json(const Loaded& l) {
    Json j = {{"strategy", l.strategy}};
    j["seed"] = l.seed ? Json(*l.seed) : Json(nullptr);
    j["given"] = l.given;
    return j;
}

const char* kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::FromA: return "A";
        case GeneratorKind::FromB: return "B";
        default: return "I";
    }
}

}  // namespace

int cmd_homology(const RunConfig& cfg, std::ostream& out) {
    const Loaded l = load(cfg);
    const auto& d = l.d;
    const IntegerChainComplex c = mv_chain_complex(d);
    const HomologyResult h = report_degrees(homology(c), d.x->dim());
    Json gens = Json::array(), bounds = Json::array();
    for (int q = 0; q <= c.top_degree(); ++q) {
        std::size_t n[3] = {0, 0, 0};
        for (const auto& g : mv_generators(d, q)) ++n[static_cast<int>(g.kind)];
        gens.push_back({{"degree", q}, {"from_a", n[0]}, {"from_b", n[1]}, {"shifted", n[2]}, {"total", c.rank(q)}});
        if (q == 0) continue;
        const auto m = c.boundary(q);
        const std::size_t cells = m.rows() * m.cols();
        bounds.push_back({{"degree", q},
                          {"rows", m.rows()},
                          {"cols", m.cols()},
                          {"nonzeros", m.nonzeros()},
                          {"density", cells ? static_cast<double>(m.nonzeros()) / static_cast<double>(cells) : 0.0}});
    }
    if (cfg.output == OutputFormat::json) {
        Json j = {{"schema", 1}, {"command", "homology"}, {"fields", fields_json(l)}};
        j["generators"] = gens;
        j["boundaries"] = bounds;
        j["homology"] = homology_json(h, cfg.degree);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "fields: " << l.strategy;
    if (l.seed) out << " (seed " << *l.seed << ")";
    if (!l.given.empty()) {
        out << ", given for";
        for (const auto& g : l.given) out << " " << g;
    }
    out << "\n";
    for (const auto& g : gens)
        out << "D_" << g["degree"] << ": " << g["total"] << " generators (A " << g["from_a"] << ", B " << g["from_b"]
            << ", shifted " << g["shifted"] << ")\n";
    for (const auto& b : bounds)
        out << "boundary " << b["degree"] << ": " << b["rows"] << "x" << b["cols"] << ", " << b["nonzeros"]
            << " nonzero\n";
    homology_text(out, h, cfg.degree);
    return kExitOk;
}

int cmd_trajectories(const RunConfig& cfg, std::ostream& out) {
    const Loaded l = load(cfg);
    const MVGenerator beta = find_generator(l.d, cfg.beta);
    const MVGenerator alpha = find_generator(l.d, cfg.alpha);
    if (beta.degree != alpha.degree + 1)
        throw std::invalid_argument("generator degrees " + std::to_string(beta.degree) + " and " +
                                    std::to_string(alpha.degree) + " do not differ by one");
    const auto ts = enumerate_mv(l.d, beta, alpha);
    long total = 0;
    Json arr = Json::array();
    for (const auto& t : ts) {
        total += t.weight;
        Json seq = Json::array();
        for (const auto& s : t.simplices) seq.push_back(s.str());
        Json item = {{"case", t.mv_case}};
        if (t.mv_case >= 4) {
            item["p"] = t.p;
            item["l"] = t.l;
        }
        item["simplices"] = seq;
        item["weight"] = t.weight;
        arr.push_back(item);
    }
    if (cfg.output == OutputFormat::json) {
        Json j = {{"schema", 1}, {"command", "trajectories"}, {"fields", fields_json(l)}};
        j["beta"] = {{"name", beta.name()}, {"kind", kind_name(beta.kind)}, {"degree", beta.degree}};
        j["alpha"] = {{"name", alpha.name()}, {"kind", kind_name(alpha.kind)}, {"degree", alpha.degree}};
        j["trajectories"] = arr;
        j["total"] = total;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << beta.name() << " (D_" << beta.degree << ") -> " << alpha.name() << " (D_" << alpha.degree << ")\n";
    for (const auto& t : ts) {
        out << "case " << t.mv_case << "  weight " << (t.weight > 0 ? "+1" : "-1") << "  " << t.str() << "\n";
    }
    out << ts.size() << " trajectories, total " << total << "\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Loaded l = load(cfg);
    const Report rep = run_verification(l.d);
    if (cfg.output == OutputFormat::json) {
        Json checks = Json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
        Json j = {{"schema", 1}, {"command", "verify"}, {"fields", fields_json(l)}};
        j["passed"] = rep.passed();
        j["checks"] = checks;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
            for (const auto& s : c.details) out << "  " << s << "\n";
        }
    }
    return rep.passed() ? kExitOk : kExitInternal;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    const auto x = read_complex_file(cfg.complex_path);
    const HomologyResult h = report_degrees(simplicial_homology(x), x.dim());
    if (cfg.output == OutputFormat::json) {
        Json j = {{"schema", 1}, {"command", "oracle"}};
        j["simplices"] = Json::array();
        for (int q = 0; q <= x.dim(); ++q) j["simplices"].push_back(x.count(q));
        j["homology"] = homology_json(h, cfg.degree);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    homology_text(out, h, cfg.degree);
    return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::homology: return cmd_homology(cfg, out);
            case Command::trajectories: return cmd_trajectories(cfg, out);
            case Command::verify: return cmd_verify(cfg, out);
            case Command::oracle: return cmd_oracle(cfg, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ComplexError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DecompositionError& e) {
        err << "invalid decomposition: " << e.what() << "\n";
        return kExitDecomposition;
    } catch (const FieldError& e) {
        err << "invalid decomposition: " << e.what() << "\n";
        return kExitDecomposition;
    } catch (const NotAcyclicError& e) {
        err << "not a gradient field: " << e.what() << "\n";
        return kExitNotAcyclic;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer homology through Mayer-Vietoris trajectories of discrete gradient fields"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string strategy, output = "text";
    std::uint64_t seed = kDefaultSeed;

    auto common = [&](CLI::App* sub, bool needs_decomposition) {
        sub->add_option("--complex", cfg.complex_path, "maximal simplices, one per line")
            ->required()
            ->check(CLI::ExistingFile);
        if (!needs_decomposition) {
            sub->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));
            sub->add_option("--degree", cfg.degree, "report only this degree");
            return;
        }
        sub->add_option("--decomposition", cfg.decomposition_path, "[A], [B] and optional [fields] sections")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--strategy", strategy, "generate all three fields, ignoring the file")
            ->check(CLI::IsMember({"lex", "lexicographic", "random"}));
        sub->add_option("--seed", seed, "seed for the random strategy");
        sub->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--fields-out", cfg.fields_out, "write the fields used as a [fields] section");
    };
    auto* hom = app.add_subcommand("homology", "homology of X from the Mayer-Vietoris chain complex");
    common(hom, true);
    hom->add_option("--degree", cfg.degree, "report only this degree");
    auto* tr = app.add_subcommand("trajectories", "list the MV trajectories between two generators");
    common(tr, true);
    tr->add_option("--beta", cfg.beta, "source generator, e.g. I:v2,v3")->required();
    tr->add_option("--alpha", cfg.alpha, "target generator, e.g. A:v5")->required();
    auto* ver = app.add_subcommand("verify", "check the auxiliary constructions on this instance");
    common(ver, true);
    auto* ora = app.add_subcommand("oracle", "plain simplicial homology");
    common(ora, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (*hom) cfg.command = Command::homology;
    if (*tr) cfg.command = Command::trajectories;
    if (*ver) cfg.command = Command::verify;
    if (*ora) cfg.command = Command::oracle;
    for (auto* sub : {hom, tr, ver}) {
        if (!*sub) continue;
        if (sub->count("--strategy")) cfg.strategy = strategy == "random" ? Strategy::random : Strategy::lexicographic;
        if (sub->count("--seed")) cfg.seed = seed;
    }
    cfg.output = output == "json" ? OutputFormat::json : OutputFormat::text;
    return run(cfg, out, err);
}

}  // namespace mvmorse
