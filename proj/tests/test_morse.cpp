#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mvmorse/errors.hpp"
#include "mvmorse/morse.hpp"
#include "support/corpus.hpp"

using namespace mvmorse;
using corpus::v;

namespace {

std::shared_ptr<const SimplicialComplex> share(SimplicialComplex x) {
    return std::make_shared<const SimplicialComplex>(std::move(x));
}

SimplicialComplex four_cycle() {
    return build_complex({{"I:v0", "I:v1"}, {"I:v1", "I:v2"}, {"I:v2", "I:v3"}, {"I:v0", "I:v3"}});
}

DiscreteVectorField four_cycle_field() {
    return DiscreteVectorField({{{"I:v3"}, {"I:v0", "I:v3"}}, {{"I:v0"}, {"I:v0", "I:v1"}}, {{"I:v1"}, {"I:v1", "I:v2"}}});
}

// cone toward apex: every simplex s without the apex pairs with s + apex
DiscreteVectorField cone_field(const SimplicialComplex& x, const Vertex& apex) {
    DiscreteVectorField f;
    for (const auto& s : x.all_simplices())
        if (!s.contains(apex) && x.contains(s.with(apex))) f.add(s, s.with(apex));
    return f;
}

// random matching, not necessarily acyclic
DiscreteVectorField random_matching(const SimplicialComplex& x, std::mt19937_64& rng) {
    DiscreteVectorField f;
    auto all = x.all_simplices();
    std::shuffle(all.begin(), all.end(), rng);
    for (const auto& s : all) {
        if (f.matched(s)) continue;
        std::vector<Simplex> options;
        for (const auto& t : x.all_simplices())
            if (t.dim() == s.dim() + 1 && s.is_face_of(t) && !f.matched(t)) options.push_back(t);
        if (!options.empty() && rng() % 3) f.add(s, options[rng() % options.size()]);
    }
    return f;
}

// closed path exists iff some tau reaches itself in the digraph tau -> up(sigma)
bool brute_has_cycle(const DiscreteVectorField& f, const SimplicialComplex& x) {
    for (int q = 1; q <= x.dim(); ++q) {
        const auto& cells = x.simplices(q);
        const std::size_t n = cells.size();
        std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& s : cells[i].facets()) {
                const Simplex* u = f.up(s);
                if (u && *u != cells[i]) reach[i][x.index_of(*u)] = 1;
            }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (reach[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (reach[k][j]) reach[i][j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][i]) return true;
    }
    return false;
}

// every trajectory from tau to sigma straight from the definition, no pruning
void brute_paths(const DiscreteVectorField& f, std::vector<Simplex>& path, const Simplex& sigma,
                 std::vector<std::vector<Simplex>>& out) {
    const Simplex tau = path.back();
    const Simplex* paired = f.down(tau);
    for (const auto& s : tau.facets()) {
        if (paired && *paired == s) continue;
        if (s == sigma) {
            path.push_back(s);
            out.push_back(path);
            path.pop_back();
        }
        const Simplex* u = f.up(s);
        if (u && *u != tau) {
            path.push_back(s);
            path.push_back(*u);
            brute_paths(f, path, sigma, out);
            path.pop_back();
            path.pop_back();
        }
    }
}

int oracle_weight(const std::vector<Simplex>& seq) {
    int w = 1;
    const std::size_t k = seq.size() / 2 - 1;
    for (std::size_t i = 0; i < k; ++i) w *= -incidence(seq[2 * i], seq[2 * i + 1]) * incidence(seq[2 * i + 2], seq[2 * i + 1]);
    return w * incidence(seq[2 * k], seq[2 * k + 1]);
}

std::vector<std::vector<Simplex>> sequences(const std::vector<Trajectory>& ts) {
    std::vector<std::vector<Simplex>> out;
    for (const auto& t : ts) out.push_back(t.simplices);
    std::sort(out.begin(), out.end());
    return out;
}

IntegerMatrix simplicial_boundary(const SimplicialComplex& x, int q) {
    IntegerMatrix m(x.count(q - 1), x.count(q));
    for (std::size_t c = 0; c < x.count(q); ++c)
        for (std::size_t r = 0; r < x.count(q - 1); ++r) m(r, c) = incidence(x.simplex(q, c), x.simplex(q - 1, r));
    return m;
}

std::vector<GradientVectorField> sample_fields(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::vector<GradientVectorField> out;
    for (const auto& named : corpus::named_complexes()) {
        auto x = share(named.complex);
        out.push_back(greedy_gvf(x, FieldStrategy::random(rng())));
    }
    for (int i = 0; i < n; ++i) {
        auto x = share(corpus::random_complex(rng));
        auto g = greedy_gvf(x, FieldStrategy::random(rng()));
        out.push_back(GradientVectorField::certify(x, corpus::thin(g.field(), rng, 0.6)));
    }
    return out;
}

}  // namespace

TEST_CASE("discrete vector field rejects malformed pairs") {
    DiscreteVectorField f;
    f.add({"v0"}, {"v0", "v1"});
    CHECK(f.contains({"v0"}, {"v0", "v1"}));
    CHECK(*f.up({"v0"}) == Simplex{"v0", "v1"});
    CHECK(*f.down({"v0", "v1"}) == Simplex{"v0"});
    CHECK_THROWS_AS(f.add({"v0"}, {"v0", "v2"}), FieldError);
    CHECK_THROWS_AS(f.add({"v1"}, {"v0", "v1"}), FieldError);
    CHECK_THROWS_AS(f.add({"v2"}, {"v0", "v1"}), FieldError);
    CHECK_THROWS_AS(f.add({"v0"}, {"v0", "v1", "v2"}), FieldError);
    CHECK(f.size() == 1);
}

TEST_CASE("acyclicity examples") {
    for (const auto& n : corpus::named_complexes()) CHECK(is_acyclic(DiscreteVectorField(), n.complex));
    CHECK(is_acyclic(four_cycle_field(), four_cycle()));

    auto tri = corpus::sphere_boundary(1);
    DiscreteVectorField cyc({{{"v0"}, {"v0", "v1"}}, {{"v1"}, {"v1", "v2"}}, {{"v2"}, {"v0", "v2"}}});
    auto rep = check_acyclic(cyc, tri);
    CHECK(!rep.acyclic);
    REQUIRE(rep.witness.size() == 7);
    CHECK(rep.witness.front() == rep.witness.back());
    std::set<Simplex> edges;
    for (std::size_t i = 0; i < rep.witness.size(); i += 2) edges.insert(rep.witness[i]);
    CHECK(edges.size() == 3);
    for (std::size_t i = 1; i + 1 < rep.witness.size(); i += 2) {
        CHECK(rep.witness[i].is_face_of(rep.witness[i - 1]));
        CHECK(cyc.contains(rep.witness[i], rep.witness[i + 1]));
        CHECK(!cyc.contains(rep.witness[i], rep.witness[i - 1]));
    }

    CHECK_THROWS_AS(check_acyclic(DiscreteVectorField({{{"w0"}, {"w0", "w1"}}}), tri), FieldError);
    try {
        GradientVectorField::certify(share(tri), cyc);
        FAIL("certified a cyclic field");
    } catch (const NotAcyclicError& e) {
        CHECK(e.witness().size() == 7);
    }
}

TEST_CASE("acyclicity agrees with brute-force reachability") {
    std::mt19937_64 rng(17);
    int cyclic = 0, acyclic = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto x = trial < 9 ? corpus::named_complexes()[trial].complex : corpus::random_complex(rng, 7, 3);
        auto f = random_matching(x, rng);
        auto rep = check_acyclic(f, x);
        CHECK(rep.acyclic == !brute_has_cycle(f, x));
        (rep.acyclic ? acyclic : cyclic)++;
        if (rep.acyclic) {
            // the certificate orders every edge of the digraph forward
            for (int q = 1; q <= x.dim(); ++q) {
                std::map<Simplex, std::size_t> pos;
                for (std::size_t i = 0; i < rep.order[q].size(); ++i) pos[rep.order[q][i]] = i;
                REQUIRE(pos.size() == x.count(q));
                for (const auto& tau : x.simplices(q))
                    for (const auto& s : tau.facets()) {
                        const Simplex* u = f.up(s);
                        if (u && *u != tau) CHECK(pos[tau] < pos[*u]);
                    }
            }
        }
    }
    CHECK(cyclic > 20);
    CHECK(acyclic > 20);
}

TEST_CASE("critical simplices") {
    auto abar = rename_vertices(build_complex({{"v0", "v1", "v5"}, {"v1", "v2", "v5"}, {"v2", "v3", "v5"},
                                               {"v0", "v3", "v5"}}),
                                [](const Vertex& s) { return "A:" + s; });
    auto wa = GradientVectorField::certify(share(abar), cone_field(abar, "A:v5"));
    CHECK(wa.critical_simplices(0) == std::vector<Simplex>{{"A:v5"}});
    CHECK(wa.critical_simplices(1).empty());
    CHECK(wa.critical_simplices(2).empty());

    auto wi = GradientVectorField::certify(share(four_cycle()), four_cycle_field());
    CHECK(wi.critical_simplices(0) == std::vector<Simplex>{{"I:v2"}});
    CHECK(wi.critical_simplices(1) == std::vector<Simplex>{{"I:v2", "I:v3"}});
    CHECK(critical_simplices(wi, 1) == wi.critical_simplices(1));
    CHECK(wi.critical(Simplex{"I:v2"}));
    CHECK(!wi.critical(Simplex{"I:v0"}));

    auto x = corpus::octahedron();
    auto e = GradientVectorField::certify(share(x), {});
    for (int q = 0; q <= 2; ++q) CHECK(e.critical_count(q) == x.count(q));
}

TEST_CASE("trajectories on the four-cycle") {
    auto wi = GradientVectorField::certify(share(four_cycle()), four_cycle_field());
    auto ts = enumerate_trajectories(wi, {"I:v2", "I:v3"}, {"I:v2"});
    REQUIRE(ts.size() == 2);
    std::vector<Simplex> q1{{"I:v2", "I:v3"}, {"I:v2"}};
    std::vector<Simplex> q2{{"I:v2", "I:v3"}, {"I:v3"}, {"I:v0", "I:v3"}, {"I:v0"}, {"I:v0", "I:v1"},
                            {"I:v1"}, {"I:v1", "I:v2"}, {"I:v2"}};
    CHECK(sequences(ts) == std::vector<std::vector<Simplex>>{q1, q2});
    for (const auto& t : ts) {
        CHECK(validate_trajectory(t, wi) == "");
        CHECK(t.weight == trajectory_weight(t));
        if (t.simplices == q1) {
            CHECK(t.weight == -1);
            CHECK(t.steps() == 0);
        } else {
            CHECK(t.weight == 1);
            CHECK(t.steps() == 3);
        }
    }
    CHECK(thom_smale_boundary(wi, 1).is_zero());
    CHECK(homology(thom_smale_complex(wi)) == simplicial_homology(four_cycle()));
    CHECK_THROWS(enumerate_trajectories(wi, {"I:v0", "I:v1"}, {"I:v2"}));
}

TEST_CASE("trajectory weights") {
    CHECK(trajectory_weight(std::vector<Simplex>{{"v0", "v1"}, {"v0"}}) == -1);
    CHECK(trajectory_weight(std::vector<Simplex>{{"v1", "v2"}, {"v2"}}) == 1);
    Trajectory bad{{{"v0", "v1"}, {"v1"}}, -1};
    auto wi = GradientVectorField::certify(share(build_complex({{"v0", "v1"}})), {});
    CHECK(validate_trajectory(bad, wi) != "");
    bad.weight = 1;
    CHECK(validate_trajectory(bad, wi) == "");
}

TEST_CASE("enumeration agrees with brute force on cone and random fields") {
    std::vector<std::pair<SimplicialComplex, DiscreteVectorField>> cases;
    auto oct = corpus::octahedron();
    cases.emplace_back(oct, cone_field(complex_intersection(oct, build_complex({{"v0", "v1", "v4"}, {"v1", "v2", "v4"}, {"v2", "v3", "v4"}, {"v0", "v3", "v4"}})), "v4"));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        auto x = corpus::random_complex(rng, 8, 3);
        auto g = greedy_gvf(share(x), FieldStrategy::random(rng()));
        cases.emplace_back(x, corpus::thin(g.field(), rng, 0.5));
    }
    for (auto& [x, f] : cases) {
        auto g = GradientVectorField::certify(share(x), f);
        for (int q = 1; q <= x.dim(); ++q)
            for (const auto& tau : g.critical_simplices(q))
                for (const auto& sigma : g.critical_simplices(q - 1)) {
                    std::vector<std::vector<Simplex>> expected;
                    std::vector<Simplex> path{tau};
                    brute_paths(g.field(), path, sigma, expected);
                    std::sort(expected.begin(), expected.end());
                    auto got = enumerate_trajectories(g, tau, sigma);
                    CHECK(sequences(got) == expected);
                    for (const auto& t : got) {
                        CHECK(validate_trajectory(t, g) == "");
                        CHECK(t.weight == oracle_weight(t.simplices));
                        CHECK((t.weight == 1 || t.weight == -1));
                    }
                }
    }
}

TEST_CASE("thom-smale boundary special cases") {
    for (const auto& n : corpus::named_complexes()) {
        auto g = GradientVectorField::certify(share(n.complex), {});
        for (int q = 1; q <= n.complex.dim(); ++q) CHECK(thom_smale_boundary(g, q) == simplicial_boundary(n.complex, q));
    }
    // cone over the octahedron and over a torus
    for (const auto& base : {corpus::octahedron(), corpus::torus7()}) {
        std::vector<std::vector<Vertex>> tops;
        for (const auto& m : base.maximal()) {
            auto t = m.vertices();
            t.push_back("apex");
            tops.push_back(t);
        }
        auto cone = build_complex(tops);
        auto g = GradientVectorField::certify(share(cone), cone_field(cone, "apex"));
        CHECK(g.critical_simplices(0) == std::vector<Simplex>{{"apex"}});
        for (int q = 1; q <= cone.dim(); ++q) {
            CHECK(g.critical_count(q) == 0);
            CHECK(thom_smale_boundary(g, q).is_zero());
        }
    }
}

TEST_CASE("thom-smale boundary equals summed enumeration") {
    for (const auto& g : sample_fields(29, 40)) {
        for (int q = 1; q <= g.complex().dim(); ++q) {
            auto m = thom_smale_boundary(g, q);
            auto cols = g.critical_simplices(q), rows = g.critical_simplices(q - 1);
            REQUIRE(m.rows() == rows.size());
            REQUIRE(m.cols() == cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    long sum = 0;
                    for (const auto& t : enumerate_trajectories(g, cols[c], rows[r])) sum += t.weight;
                    CHECK(m(r, c) == sum);
                }
        }
    }
}

TEST_CASE("thom-smale complex properties") {
    for (const auto& g : sample_fields(31, 80)) {
        const auto& x = g.complex();
        auto c = thom_smale_complex(g);
        CHECK(c.composition_failure() < 0);
        auto h = homology(c);
        auto oracle = simplicial_homology(x);
        CHECK(h == oracle);
        long chi = 0;
        for (int q = 0; q <= x.dim(); ++q) {
            chi += (q % 2 ? -1 : 1) * static_cast<long>(g.critical_count(q));
            CHECK(g.critical_count(q) >= oracle.betti(q));
        }
        CHECK(chi == x.euler_characteristic());
    }
}

TEST_CASE("greedy fields") {
    auto edge = greedy_gvf(share(build_complex({{"v0", "v1"}})), FieldStrategy::lexicographic());
    CHECK(edge.field().pairs() == std::vector<FieldPair>{{{"v1"}, {"v0", "v1"}}});
    CHECK(edge.critical_simplices(0) == std::vector<Simplex>{{"v0"}});

    auto tri = greedy_gvf(share(build_complex({{"v0", "v1", "v2"}})), FieldStrategy::lexicographic());
    CHECK(tri.critical_count(0) == 1);
    CHECK(tri.critical_count(1) == 0);
    CHECK(tri.critical_count(2) == 0);

    std::mt19937_64 rng(37);
    std::set<std::vector<FieldPair>> distinct;
    auto oct = share(corpus::octahedron());
    for (int i = 0; i < 10; ++i) {
        auto a = greedy_gvf(oct, FieldStrategy::random(1000 + i));
        auto b = greedy_gvf(oct, FieldStrategy::random(1000 + i));
        CHECK(a.field().pairs() == b.field().pairs());
        distinct.insert(a.field().pairs());
    }
    CHECK(distinct.size() > 1);
    for (int i = 0; i < 100; ++i) {
        auto x = corpus::random_complex(rng);
        for (auto s : {FieldStrategy::lexicographic(), FieldStrategy::random(rng())}) {
            auto g = greedy_gvf(share(x), s);
            CHECK(is_acyclic(g.field(), x));
        }
    }
}
