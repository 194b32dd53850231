#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mvmorse/errors.hpp"
#include "mvmorse/verify.hpp"
#include "support/corpus.hpp"

using namespace mvmorse;

namespace {

Decomposition worked() {
    auto p = corpus::worked_example();
    return build_decomposition(p.x, p.a, p.b, p.plan);
}

std::set<Simplex> as_set(const std::vector<Simplex>& v) { return {v.begin(), v.end()}; }

std::vector<Trajectory> all_trajectories(const GradientVectorField& g) {
    std::vector<Trajectory> out;
    for (int q = 1; q <= g.complex().dim(); ++q)
        for (const auto& tau : g.critical_simplices(q))
            for (const auto& sigma : g.critical_simplices(q - 1))
                for (auto& t : enumerate_trajectories(g, tau, sigma)) out.push_back(std::move(t));
    return out;
}

void require_pass(const Report& r) {
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.details.empty() ? std::string() : c.details.front());
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("glued complex of the worked example") {
    auto d = worked();
    auto xt = build_xtilde(d);
    const auto& a = *d.a_bar.complex;
    const auto& b = *d.b_bar.complex;
    // inclusion-exclusion over the three parts; the prism meets each copy in a 4-cycle (4 + 4 simplices)
    CHECK(xt.complex->size() == a.size() + b.size() + xt.prism->complex().size() - 8 - 8);
    CHECK(a.is_subcomplex_of(*xt.complex));
    CHECK(b.is_subcomplex_of(*xt.complex));
    CHECK(xt.interior(0).empty());
    CHECK(xt.interior(1).size() == 8);
    CHECK(xt.interior(2).size() == 8);
    CHECK(xt.is_interior(Simplex{"A:v2", "B:v2"}));
    CHECK(xt.is_interior(Simplex{"A:v0", "B:v0", "B:v3"}));
    CHECK(xt.part(Simplex{"A:v0", "A:v3"}) == XTilde::Part::A);
    CHECK(xt.part(Simplex{"B:v0", "B:v3"}) == XTilde::Part::B);
    CHECK(xt.part(Simplex{"B:v4"}) == XTilde::Part::B);
}

TEST_CASE("glued complex in degenerate cases") {
    auto oct = corpus::octahedron();
    auto d = build_decomposition(oct, oct, oct);
    auto xt = build_xtilde(d);
    // prism over X has 2 copies of X as its sides
    CHECK(xt.complex->size() == xt.prism->complex().size());
    CHECK(xt.prism->complex().count(3) == 8 * 3);

    auto bowtie = build_complex({{"v0", "v1", "v2"}, {"v2", "v3", "v4"}});
    auto dt = build_decomposition(bowtie, build_complex({{"v0", "v1", "v2"}}), build_complex({{"v2", "v3", "v4"}}));
    auto xb = build_xtilde(dt);
    CHECK(xb.prism->complex().maximal() == std::vector<Simplex>{{"A:v2", "B:v2"}});
    CHECK(xb.complex->size() == 7 + 7 + 1);
    CHECK(xb.interior(1) == std::vector<Simplex>{{"A:v2", "B:v2"}});
    CHECK(xb.complex->euler_characteristic() == 1);
}

TEST_CASE("the field V") {
    auto d = worked();
    auto xt = build_xtilde(d);
    auto v = build_v_field(xt);
    CHECK(v.field().contains({"B:v0", "B:v3"}, {"A:v0", "B:v0", "B:v3"}));
    CHECK(v.field().contains({"A:v0", "B:v3"}, {"A:v0", "A:v3", "B:v3"}));
    CHECK(v.field().contains({"B:v2"}, {"A:v2", "B:v2"}));
    CHECK(is_acyclic(v.field(), *xt.complex));

    for (int q = 0; q <= xt.complex->dim(); ++q) {
        std::set<Simplex> expected;
        if (q <= d.a_bar.complex->dim())
            for (const auto& s : d.a_bar.complex->simplices(q)) expected.insert(s);
        if (q <= d.b_bar.complex->dim())
            for (const auto& s : d.b_bar.complex->simplices(q))
                if (!d.iab->contains(d.b_bar.from_copy(s))) expected.insert(s);
        CHECK(as_set(v.critical_simplices(q)) == expected);
    }
}

TEST_CASE("simplicial isomorphism through V") {
    auto xt = build_xtilde(worked());
    require_pass(check_iso_simplicial(xt));

    auto tri = build_complex({{"v0", "v1", "v2"}});
    require_pass(check_iso_simplicial(build_xtilde(build_decomposition(tri, tri, tri))));

    std::mt19937_64 rng(59);
    for (int i = 0; i < 10; ++i) {
        auto x = corpus::random_complex(rng, 8, 3);
        auto [a, b] = corpus::random_cover(x, rng);
        auto r = check_iso_simplicial(build_xtilde(build_decomposition(x, a, b)));
        CHECK(r.passed());
        CHECK(r.find("v_field_acyclic") != nullptr);
    }
}

TEST_CASE("the field W on the worked example") {
    auto d = worked();
    auto xt = build_xtilde(d);
    auto w = build_w_field(xt, d);
    const auto& f = w.field.field();
    CHECK(f.contains({"A:v3", "B:v3"}, {"A:v0", "A:v3", "B:v3"}));
    CHECK(f.contains({"A:v0", "B:v3"}, {"A:v0", "B:v0", "B:v3"}));
    CHECK(w.parts.at({{"A:v3", "B:v3"}, {"A:v0", "A:v3", "B:v3"}}) == Provenance::from_Wprime);
    CHECK(w.parts.at({{"A:v0"}, {"A:v0", "A:v5"}}) == Provenance::from_WA);
    CHECK(w.parts.at({{"B:v0"}, {"B:v0", "B:v4"}}) == Provenance::from_WB);

    std::set<Simplex> interior_crit;
    for (int q = 0; q <= xt.complex->dim(); ++q)
        for (const auto& s : w.field.critical_simplices(q))
            if (xt.is_interior(s)) interior_crit.insert(s);
    CHECK(interior_crit == std::set<Simplex>{{"A:v2", "B:v2"}, {"A:v2", "B:v2", "B:v3"}});
    CHECK(interior_critical(d, {"I:v2"}) == Simplex{"A:v2", "B:v2"});
    CHECK(interior_critical(d, {"I:v2", "I:v3"}) == Simplex{"A:v2", "B:v2", "B:v3"});

    CHECK(w.field.critical_simplices(0) == std::vector<Simplex>{{"A:v5"}, {"B:v4"}});
    for (int q = 0; q <= 3; ++q) CHECK(w.field.critical_count(q) == mv_generators(d, q).size());
    CHECK(f_map(xt, d, w, {"A:v2", "B:v2"}) == mv_generators(d, 1)[0]);
    CHECK_THROWS_AS(f_map(xt, d, w, {"A:v2"}), std::invalid_argument);
}

TEST_CASE("critical counts and f/g inverse on the corpus") {
    std::mt19937_64 rng(61);
    for (const auto& n : corpus::named_complexes()) {
        auto [a, b] = corpus::random_cover(n.complex, rng);
        auto d = build_decomposition(n.complex, a, b, FieldPlan::with_strategy(FieldStrategy::random(rng())));
        auto xt = build_xtilde(d);
        auto w = build_w_field(xt, d);
        CHECK(is_acyclic(w.field.field(), *xt.complex));
        for (int q = 0; q <= xt.complex->dim(); ++q) {
            CHECK(w.field.critical_count(q) == mv_generators(d, q).size());
            for (const auto& g : mv_generators(d, q)) {
                CHECK(w.field.critical(g_map(d, g)));
                CHECK(f_map(xt, d, w, g_map(d, g)) == g);
            }
            for (const auto& s : w.field.critical_simplices(q)) CHECK(g_map(d, f_map(xt, d, w, s)) == s);
        }
    }
}

TEST_CASE("trajectory types") {
    auto d = worked();
    auto xt = build_xtilde(d);
    auto w = build_w_field(xt, d);
    std::set<int> seen;
    for (const auto& t : all_trajectories(w.field)) {
        const int type = classify_w_trajectory(t, xt, w);
        seen.insert(type);
        if (t.initial() == Simplex{"A:v2", "B:v2"} && t.terminal() == Simplex{"A:v5"}) CHECK(type == 4);
        if (t.initial() == Simplex{"A:v2", "B:v2"} && t.terminal() == Simplex{"B:v4"}) CHECK(type == 5);
        if (t.initial() == Simplex{"A:v2", "B:v2", "B:v3"}) CHECK(type == 3);
    }
    CHECK(seen == std::set<int>{3, 4, 5});

    // empty piece fields leave critical simplices inside each copy
    auto p = corpus::worked_example();
    FieldPlan empty;
    empty.a = empty.b = DiscreteVectorField();
    auto de = build_decomposition(p.x, p.a, p.b, empty);
    auto xe = build_xtilde(de);
    auto we = build_w_field(xe, de);
    seen.clear();
    for (const auto& t : all_trajectories(we.field)) {
        const int type = classify_w_trajectory(t, xe, we);
        seen.insert(type);
        if (xe.part(t.initial()) == XTilde::Part::A) CHECK(type == 1);
        if (xe.part(t.initial()) == XTilde::Part::B) CHECK(type == 2);
    }
    CHECK(seen.count(1));
    CHECK(seen.count(2));

    Trajectory stray{{{"A:v1", "A:v2"}, {"A:v2"}, {"A:v2", "A:v3"}, {"A:v3"}}, 1};
    CHECK_THROWS_AS(classify_w_trajectory(stray, xt, w), ConsistencyError);
}

TEST_CASE("main isomorphism checks") {
    auto d = worked();
    auto xt = build_xtilde(d);
    auto r = check_main_iso(xt, d, build_w_field(xt, d));
    require_pass(r);
    for (auto name : {"f_bijection", "trajectory_bijection", "trajectory_types", "w_boundary_matches_mv", "homology_agreement"})
        CHECK(r.find(name) != nullptr);

    for (const auto& n : corpus::named_complexes()) {
        auto vtx = build_complex({{n.complex.vertices().front()}});
        CAPTURE(n.name);
        require_pass(run_verification(build_decomposition(n.complex, n.complex, vtx)));
    }

    std::mt19937_64 rng(67);
    for (int i = 0; i < 25; ++i) {
        auto x = corpus::random_complex(rng, 9, 3);
        auto [a, b] = corpus::random_cover(x, rng);
        auto dd = build_decomposition(x, a, b, FieldPlan::with_strategy(FieldStrategy::random(rng())));
        auto rep = run_verification(dd);
        CHECK(rep.passed());
        CHECK(rep.find("w_field") != nullptr);
    }
}
