#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "mvmorse/morse.hpp"

namespace mvmorse {

// Cells are visited by (dimension, rank); rank is the canonical index or a
// seeded permutation of it. The smallest remaining cell becomes critical, then
// every coface left with a single remaining facet is paired with that facet
// (lowest rank first) until none is left.
GradientVectorField greedy_gvf(std::shared_ptr<const SimplicialComplex> x, FieldStrategy strategy) {
    const auto& c = *x;
    const int top = c.dim();
    std::vector<std::vector<std::size_t>> rank(top + 1), order(top + 1);
    std::mt19937_64 rng(strategy.seed);
    for (int q = 0; q <= top; ++q) {
        order[q].resize(c.count(q));
        std::iota(order[q].begin(), order[q].end(), std::size_t{0});
        if (strategy.kind == Strategy::random) std::shuffle(order[q].begin(), order[q].end(), rng);
        rank[q].resize(c.count(q));
        for (std::size_t r = 0; r < order[q].size(); ++r) rank[q][order[q][r]] = r;
    }

    std::vector<std::vector<char>> removed(top + 1);
    std::vector<std::vector<std::size_t>> live(top + 1);
    for (int q = 0; q <= top; ++q) {
        removed[q].assign(c.count(q), 0);
        live[q].resize(c.count(q));
        for (std::size_t i = 0; i < c.count(q); ++i) live[q][i] = c.facets(q, i).size();
    }

    using Key = std::tuple<int, std::size_t, std::size_t>;  // dim, rank, index
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    auto remove = [&](int q, std::size_t i) {
        removed[q][i] = 1;
        if (q == top) return;
        for (const auto& f : c.cofaces(q, i))
            if (--live[q + 1][f.index] == 1 && !removed[q + 1][f.index])
                ready.emplace(q + 1, rank[q + 1][f.index], f.index);
    };

    DiscreteVectorField v;
    std::vector<std::size_t> cursor(top + 1, 0);
    for (;;) {
        while (!ready.empty()) {
            auto [q, r, t] = ready.top();
            ready.pop();
            if (removed[q][t] || live[q][t] != 1) continue;
            std::size_t s = GradientVectorField::none;
            for (const auto& f : c.facets(q, t))
                if (!removed[q - 1][f.index]) s = f.index;
            v.add(c.simplex(q - 1, s), c.simplex(q, t));
            remove(q, t);
            remove(q - 1, s);
        }
        int q = 0;
        while (q <= top) {
            while (cursor[q] < order[q].size() && removed[q][order[q][cursor[q]]]) ++cursor[q];
            if (cursor[q] < order[q].size()) break;
            ++q;
        }
        if (q > top) break;
        remove(q, order[q][cursor[q]]);
    }
    return GradientVectorField::certify(std::move(x), std::move(v));
}

}  // namespace mvmorse
