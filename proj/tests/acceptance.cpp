// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mvmorse/errors.hpp"
#include "mvmorse/verify.hpp"
#include "support/corpus.hpp"

using namespace mvmorse;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (failures.size() < 10) failures.push_back(what);
        }
    }
};

int failed = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0) out.expect(secs < limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    char time[32];
    std::snprintf(time, sizeof time, "%.3f s", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << out.note
              << (out.note.empty() ? "" : ", ") << time << "]\n";
    for (const auto& f : out.failures) std::cout << "    " << f << "\n";
    if (!out.ok) ++failed;
}

struct Instance {
    std::string name;
    SimplicialComplex x;
    Decomposition d;
};

// corpus x 5 random covers x 3 seeded random field triples
std::vector<Instance> corpus_instances() {
    std::mt19937_64 rng(20240607);
    std::vector<Instance> out;
    for (const auto& n : corpus::named_complexes())
        for (int cover = 0; cover < 5; ++cover) {
            auto [a, b] = corpus::random_cover(n.complex, rng);
            for (int k = 0; k < 3; ++k)
                out.push_back({n.name, n.complex,
                               build_decomposition(n.complex, a, b, FieldPlan::with_strategy(FieldStrategy::random(rng())))});
        }
    return out;
}

std::string gen_list(const std::vector<MVGenerator>& g) {
    std::string s;
    for (const auto& x : g) s += (s.empty() ? "" : " ") + x.name();
    return "{" + s + "}";
}

std::string run_capture(const std::string& args) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() / ("mvmorse_acceptance_" + std::to_string(counter++) + ".json");
    const std::string cmd = std::string(MVMORSE_CLI) + " " + args + " > " + path.string();
    if (std::system(cmd.c_str()) != 0) return "";
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    std::vector<Instance> instances;

    criterion(1, "worked example reproduced exactly", 1.0, [](Outcome& o) {
        auto p = corpus::worked_example();
        auto d = build_decomposition(p.x, p.a, p.b, p.plan);
        const MVGenerator a5{GeneratorKind::FromA, {"A:v5"}, 0}, b4{GeneratorKind::FromB, {"B:v4"}, 0};
        const MVGenerator c2{GeneratorKind::Shifted, {"I:v2"}, 1}, c23{GeneratorKind::Shifted, {"I:v2", "I:v3"}, 2};
        o.expect(mv_generators(d, 0) == std::vector<MVGenerator>{a5, b4}, "D_0 = " + gen_list(mv_generators(d, 0)));
        o.expect(mv_generators(d, 1) == std::vector<MVGenerator>{c2}, "D_1 = " + gen_list(mv_generators(d, 1)));
        o.expect(mv_generators(d, 2) == std::vector<MVGenerator>{c23}, "D_2 = " + gen_list(mv_generators(d, 2)));
        o.expect(mv_generators(d, 3).empty(), "D_3 nonempty");

        auto p1 = enumerate_mv(d, c2, a5);
        o.expect(p1.size() == 1 && p1[0].simplices == std::vector<Simplex>{{"I:v2"}, {"A:v2", "A:v5"}, {"A:v5"}} &&
                     p1[0].weight == -1,
                 "MV([c2],[a5]) differs");
        auto p2 = enumerate_mv(d, c2, b4);
        o.expect(p2.size() == 1 && p2[0].simplices == std::vector<Simplex>{{"I:v2"}, {"B:v2", "B:v4"}, {"B:v4"}} &&
                     p2[0].weight == 1,
                 "MV([c2],[b4]) differs");
        const std::vector<Simplex> q1{{"I:v2", "I:v3"}, {"I:v2"}};
        const std::vector<Simplex> q2{{"I:v2", "I:v3"}, {"I:v3"}, {"I:v0", "I:v3"}, {"I:v0"},
                                      {"I:v0", "I:v1"}, {"I:v1"}, {"I:v1", "I:v2"}, {"I:v2"}};
        auto q = enumerate_mv(d, c23, c2);
        int seen1 = 0, seen2 = 0;
        for (const auto& t : q) {
            if (t.simplices == q1 && t.weight == 1) ++seen1;
            if (t.simplices == q2 && t.weight == -1) ++seen2;
        }
        o.expect(q.size() == 2 && seen1 == 1 && seen2 == 1, "MV([c2,c3],[c2]) differs");

        auto d1 = mv_boundary(d, 1), d2 = mv_boundary(d, 2);
        o.expect(d1.rows() == 2 && d1.cols() == 1 && d1(0, 0) == -1 && d1(1, 0) == 1, "boundary 1 = " + to_string(d1));
        o.expect(d2.rows() == 1 && d2.cols() == 1 && d2(0, 0) == 0, "boundary 2 = " + to_string(d2));
        auto h = homology(mv_chain_complex(d)).trimmed();
        o.expect(h.str() == "(Z, 0, Z)", "homology " + h.str());
        o.note = "homology " + h.str();
    });

    criterion(2, "MV homology equals the simplicial oracle on the corpus", 60.0, [&](Outcome& o) {
        instances = corpus_instances();
        std::map<std::string, HomologyResult> oracle;
        for (const auto& n : corpus::named_complexes()) {
            oracle[n.name] = simplicial_homology(n.complex);
            o.expect(oracle[n.name] == corpus::expected_homology(n), n.name + ": oracle " + oracle[n.name].str());
        }
        for (const auto& in : instances) {
            auto h = homology(mv_chain_complex(in.d));
            o.expect(h == oracle[in.name], in.name + ": " + h.str() + " vs " + oracle[in.name].str());
        }
        o.note = std::to_string(oracle.size()) + " complexes, " + std::to_string(instances.size()) + " instances";
    });

    criterion(3, "consecutive MV boundaries compose to zero", 0, [&](Outcome& o) {
        auto check = [&](const Decomposition& d, const std::string& name) {
            for (int q = 1; q <= d.x->dim() + 1; ++q) {
                auto prod = mv_boundary(d, q) * mv_boundary(d, q + 1);
                o.expect(prod.is_zero(), name + ": degree " + std::to_string(q));
            }
        };
        for (const auto& in : instances) check(in.d, in.name);
        std::mt19937_64 rng(7);
        for (int i = 0; i < 100; ++i) {
            auto x = corpus::random_complex(rng, 10, 3);
            auto [a, b] = corpus::random_cover(x, rng);
            check(build_decomposition(x, a, b, FieldPlan::with_strategy(FieldStrategy::random(rng()))),
                  "random complex " + std::to_string(i));
        }
        o.note = std::to_string(instances.size()) + " corpus + 100 random instances";
    });

    criterion(4, "Thom-Smale homology and weak Morse inequalities", 0, [](Outcome& o) {
        int fields = 0;
        for (const auto& n : corpus::named_complexes()) {
            auto x = std::make_shared<const SimplicialComplex>(n.complex);
            auto oracle = simplicial_homology(n.complex);
            std::vector<FieldStrategy> strategies{FieldStrategy::lexicographic()};
            for (std::uint64_t s = 1; s <= 10; ++s) strategies.push_back(FieldStrategy::random(s));
            for (const auto& s : strategies) {
                auto g = greedy_gvf(x, s);
                auto h = homology(thom_smale_complex(g));
                o.expect(h == oracle, n.name + ": " + h.str());
                for (int q = 0; q <= n.complex.dim(); ++q)
                    o.expect(g.critical_count(q) >= oracle.betti(q), n.name + ": Morse inequality in degree " + std::to_string(q));
                ++fields;
            }
        }
        o.note = std::to_string(fields) + " fields";
    });

    criterion(5, "V and W constructions, trajectory bijection, boundary equality", 120.0, [&](Outcome& o) {
        auto p = corpus::worked_example();
        std::vector<std::pair<std::string, const Decomposition*>> all;
        auto worked = build_decomposition(p.x, p.a, p.b, p.plan);
        all.emplace_back("worked example", &worked);
        for (const auto& in : instances) all.emplace_back(in.name, &in.d);
        std::size_t checks = 0;
        for (const auto& [name, d] : all) {
            auto r = run_verification(*d);
            for (const auto& c : r.checks) {
                ++checks;
                o.expect(c.passed, name + ": " + c.name + (c.details.empty() ? "" : " " + c.details.front()));
            }
        }
        o.note = std::to_string(all.size()) + " decompositions, " + std::to_string(checks) + " checks";
    });

    criterion(6, "RP2 gives H_1 = Z/2 through the MV pipeline", 0, [](Outcome& o) {
        auto x = corpus::rp2_6();
        std::mt19937_64 rng(2);
        int runs = 0;
        auto check = [&](const SimplicialComplex& a, const SimplicialComplex& b, const FieldPlan& plan) {
            auto h = homology(mv_chain_complex(build_decomposition(x, a, b, plan)));
            o.expect(h.betti(1) == 0 && h.torsion(1) == std::vector<Integer>{2}, "H = " + h.str());
            ++runs;
        };
        for (int i = 0; i < 40; ++i) {
            auto [a, b] = corpus::random_cover(x, rng);
            check(a, b, FieldPlan::with_strategy(FieldStrategy::lexicographic()));
            check(a, b, FieldPlan::with_strategy(FieldStrategy::random(rng())));
        }
        check(x, x, {});
        check(x, build_complex({{"v1"}}), {});
        auto json = run_capture("homology --complex " MVMORSE_DATA "/rp2.txt --decomposition " MVMORSE_DATA
                                "/rp2_split.txt --output json");
        o.expect(json.find("\"torsion\": [\n        2\n      ]") != std::string::npos, "CLI output lacks Z/2");
        o.note = std::to_string(runs) + " decompositions + CLI";
    });

    criterion(7, "JSON reports are byte-identical across runs", 0, [](Outcome& o) {
        const std::string oct = "--complex " MVMORSE_DATA "/octahedron.txt --decomposition " MVMORSE_DATA "/octahedron_split.txt";
        const std::string rp2 = "--complex " MVMORSE_DATA "/rp2.txt --decomposition " MVMORSE_DATA "/rp2_split.txt";
        const std::vector<std::string> runs{
            "homology " + oct + " --output json",
            "homology " + oct + " --strategy random --seed 99 --output json",
            "homology " + rp2 + " --output json",
            "trajectories " + oct + " --beta I:v2,v3 --alpha I:v2 --output json",
            "verify " + rp2 + " --output json",
        };
        for (const auto& args : runs) {
            auto first = run_capture(args), second = run_capture(args);
            o.expect(!first.empty() && first == second, "differs: " + args);
        }
        o.note = std::to_string(runs.size()) + " command lines";
    });

    return failed == 0 ? 0 : 1;
}
