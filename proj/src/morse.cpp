#include "mvmorse/morse.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mvmorse/errors.hpp"

namespace mvmorse {

DiscreteVectorField::DiscreteVectorField(const std::vector<FieldPair>& pairs) {
    for (const auto& p : pairs) add(p.lower, p.upper);
}

void DiscreteVectorField::add(const Simplex& lower, const Simplex& upper) {
    if (lower.dim() + 1 != upper.dim() || !lower.is_face_of(upper))
        throw FieldError(lower.str() + " is not a facet of " + upper.str());
    for (const auto* s : {&lower, &upper})
        if (matched(*s)) throw FieldError(s->str() + " appears in more than one pair");
    up_.emplace(lower, upper);
    down_.emplace(upper, lower);
}

std::vector<FieldPair> DiscreteVectorField::pairs() const {
    std::vector<FieldPair> out;
    for (const auto& [l, u] : up_) out.push_back({l, u});
    return out;
}

const Simplex* DiscreteVectorField::up(const Simplex& s) const {
    auto it = up_.find(s);
    return it == up_.end() ? nullptr : &it->second;
}

const Simplex* DiscreteVectorField::down(const Simplex& s) const {
    auto it = down_.find(s);
    return it == down_.end() ? nullptr : &it->second;
}

bool DiscreteVectorField::contains(const Simplex& lower, const Simplex& upper) const {
    const Simplex* u = up(lower);
    return u && *u == upper;
}

namespace {

constexpr std::size_t kNone = GradientVectorField::none;

struct Partners {
    std::vector<std::vector<std::size_t>> up, down;
};

Partners index_field(const DiscreteVectorField& v, const SimplicialComplex& x) {
    Partners p;
    for (int q = 0; q <= x.dim(); ++q) {
        p.up.emplace_back(x.count(q), kNone);
        p.down.emplace_back(x.count(q), kNone);
    }
    for (const auto& [lower, upper] : v.pairs()) {
        const std::size_t l = x.index_of(lower), u = x.index_of(upper);
        p.up[lower.dim()][l] = u;
        p.down[upper.dim()][u] = l;
    }
    return p;
}

int facet_sign(const SimplicialComplex& x, int q, std::size_t tau, std::size_t sigma) {
    for (const auto& f : x.facets(q, tau))
        if (f.index == sigma) return f.sign;
    return 0;
}

}  // namespace

AcyclicityReport check_acyclic(const DiscreteVectorField& v, const SimplicialComplex& x) {
    const Partners p = index_field(v, x);
    AcyclicityReport rep;
    rep.order.resize(static_cast<std::size_t>(std::max(x.dim() + 1, 0)));
    for (int q = 0; q <= x.dim(); ++q) {
        const std::size_t n = x.count(q);
        // 0 white, 1 on stack, 2 done
        std::vector<char> colour(n, 0);
        std::vector<std::size_t> post;
        struct Frame {
            std::size_t node;
            std::size_t next_facet;
            std::size_t via;  // facet used to enter node
        };
        for (std::size_t root = 0; root < n && rep.acyclic; ++root) {
            if (colour[root]) continue;
            std::vector<Frame> stack{{root, 0, kNone}};
            colour[root] = 1;
            while (!stack.empty() && rep.acyclic) {
                Frame& f = stack.back();
                const auto facets = q > 0 ? x.facets(q, f.node) : std::span<const SimplicialComplex::Incidence>{};
                if (f.next_facet == facets.size()) {
                    colour[f.node] = 2;
                    post.push_back(f.node);
                    stack.pop_back();
                    continue;
                }
                const std::size_t sigma = facets[f.next_facet++].index;
                if (sigma == p.down[q][f.node]) continue;
                const std::size_t next = p.up[q - 1][sigma];
                if (next == kNone) continue;
                if (colour[next] == 1) {
                    auto at = std::find_if(stack.begin(), stack.end(),
                                           [&](const Frame& fr) { return fr.node == next; });
                    rep.acyclic = false;
                    for (auto it = at; it != stack.end(); ++it) {
                        if (it != at) rep.witness.push_back(x.simplex(q - 1, it->via));
                        rep.witness.push_back(x.simplex(q, it->node));
                    }
                    rep.witness.push_back(x.simplex(q - 1, sigma));
                    rep.witness.push_back(x.simplex(q, next));
                } else if (colour[next] == 0) {
                    colour[next] = 1;
                    stack.push_back({next, 0, sigma});
                }
            }
        }
        if (!rep.acyclic) {
            rep.order.clear();
            return rep;
        }
        for (auto it = post.rbegin(); it != post.rend(); ++it) rep.order[q].push_back(x.simplex(q, *it));
    }
    return rep;
}

bool is_acyclic(const DiscreteVectorField& v, const SimplicialComplex& x) { return check_acyclic(v, x).acyclic; }

GradientVectorField GradientVectorField::certify(std::shared_ptr<const SimplicialComplex> x,
                                                 DiscreteVectorField v) {
    const auto rep = check_acyclic(v, *x);
    if (!rep.acyclic) {
        std::vector<std::string> w;
        std::string path;
        for (const auto& s : rep.witness) {
            w.push_back(s.str());
            path += (path.empty() ? "" : " ") + s.str();
        }
        throw NotAcyclicError("vector field has a closed trajectory: " + path, std::move(w));
    }
    GradientVectorField g;
    Partners p = index_field(v, *x);
    g.x_ = std::move(x);
    g.v_ = std::move(v);
    g.up_ = std::move(p.up);
    g.down_ = std::move(p.down);
    return g;
}

bool GradientVectorField::critical(const Simplex& s) const { return critical(s.dim(), x_->index_of(s)); }

std::vector<std::size_t> GradientVectorField::critical_indices(int q) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x_->count(q); ++i)
        if (critical(q, i)) out.push_back(i);
    return out;
}

std::vector<Simplex> GradientVectorField::critical_simplices(int q) const {
    std::vector<Simplex> out;
    for (auto i : critical_indices(q)) out.push_back(x_->simplex(q, i));
    return out;
}

std::size_t GradientVectorField::critical_count(int q) const { return critical_indices(q).size(); }

std::vector<Simplex> critical_simplices(const GradientVectorField& v, int q) { return v.critical_simplices(q); }

std::string Trajectory::str() const {
    std::string s;
    for (const auto& x : simplices) s += (s.empty() ? "" : ", ") + x.str();
    return s;
}

int trajectory_weight(const std::vector<Simplex>& seq) {
    if (seq.size() < 2 || seq.size() % 2) throw std::invalid_argument("trajectory has odd length");
    const std::size_t k = seq.size() / 2 - 1;
    int w = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const Simplex& tau = seq[2 * i];
        const Simplex& sigma = seq[2 * i + 1];
        const Simplex& next = seq[2 * i + 2];
        w *= -incidence(tau, sigma) * incidence(next, sigma);
    }
    return w * incidence(seq[2 * k], seq[2 * k + 1]);
}

int trajectory_weight(const Trajectory& t) { return trajectory_weight(t.simplices); }

std::string validate_trajectory(const Trajectory& t, const GradientVectorField& v) {
    const auto& s = t.simplices;
    const auto& x = v.complex();
    if (s.size() < 2 || s.size() % 2) return "sequence length must be even and at least 2";
    const int q = s[0].dim();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].dim() != (i % 2 ? q - 1 : q)) return "wrong dimension at position " + std::to_string(i);
        if (!x.contains(s[i])) return s[i].str() + " is not in the complex";
    }
    if (!v.critical(s.front())) return "initial simplex " + s.front().str() + " is not critical";
    if (!v.critical(s.back())) return "terminal simplex " + s.back().str() + " is not critical";
    const auto& f = v.field();
    const std::size_t k = s.size() / 2 - 1;
    for (std::size_t i = 1; i <= k + 1; ++i) {
        const Simplex& sigma = s[2 * i - 1];
        const Simplex& prev = s[2 * i - 2];
        if (!sigma.is_face_of(prev)) return sigma.str() + " is not a face of " + prev.str();
        if (f.contains(sigma, prev)) return "(" + sigma.str() + ", " + prev.str() + ") is a field pair";
        if (i <= k && !f.contains(sigma, s[2 * i]))
            return "(" + sigma.str() + ", " + s[2 * i].str() + ") is not a field pair";
    }
    if (t.weight != trajectory_weight(s)) return "recorded weight disagrees with the product formula";
    return {};
}

std::vector<Trajectory> enumerate_trajectories(const GradientVectorField& v, const Simplex& tau,
                                               const Simplex& sigma) {
    const auto& x = v.complex();
    const int q = tau.dim();
    if (sigma.dim() + 1 != q) throw std::invalid_argument("enumerate_trajectories: dimension mismatch");
    const std::size_t t0 = x.index_of(tau), target = x.index_of(sigma);
    if (!v.critical(q, t0) || !v.critical(q - 1, target))
        throw std::invalid_argument("enumerate_trajectories: endpoints must be critical");
    std::vector<Trajectory> out;
    std::set<std::size_t> dead;
    std::vector<std::size_t> path{t0};  // alternating tau, sigma indices
    std::function<bool(std::size_t)> walk = [&](std::size_t t) {
        bool found = false;
        for (const auto& f : x.facets(q, t)) {
            if (f.index == v.down(q, t)) continue;
            if (f.index == target) {
                Trajectory tr;
                for (std::size_t i = 0; i < path.size(); ++i) tr.simplices.push_back(x.simplex(q - (i % 2), path[i]));
                tr.simplices.push_back(sigma);
                tr.weight = trajectory_weight(tr.simplices);
                out.push_back(std::move(tr));
                found = true;
                continue;
            }
            const std::size_t next = v.up(q - 1, f.index);
            if (next == kNone || dead.count(next)) continue;
            path.push_back(f.index);
            path.push_back(next);
            if (walk(next))
                found = true;
            else
                dead.insert(next);
            path.resize(path.size() - 2);
        }
        return found;
    };
    walk(t0);
    return out;
}

const FlowCache::Vector& FlowCache::descend(int q, std::size_t i) {
    auto key = std::make_pair(q, i);
    if (auto it = descend_.find(key); it != descend_.end()) return it->second;
    const auto& v = *v_;
    const auto& x = v.complex();
    Vector r;
    if (q > 0)
        for (const auto& f : x.facets(q, i)) {
            if (f.index == v.down(q, i)) continue;
            if (v.critical(q - 1, f.index)) {
                r[f.index] += f.sign;
            } else if (std::size_t t = v.up(q - 1, f.index); t != kNone) {
                const int w = -f.sign * facet_sign(x, q, t, f.index);
                for (const auto& [k, c] : descend(q, t)) r[k] += w * c;
            }
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return descend_.emplace(key, std::move(r)).first->second;
}

const FlowCache::Vector& FlowCache::reach(int q, std::size_t i) {
    auto key = std::make_pair(q, i);
    if (auto it = reach_.find(key); it != reach_.end()) return it->second;
    const auto& v = *v_;
    const auto& x = v.complex();
    Vector r;
    r[i] += 1;
    if (q > 0)
        for (const auto& f : x.facets(q, i)) {
            if (f.index == v.down(q, i)) continue;
            const std::size_t t = v.up(q - 1, f.index);
            if (t == kNone) continue;
            const int w = -f.sign * facet_sign(x, q, t, f.index);
            for (const auto& [k, c] : reach(q, t)) r[k] += w * c;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return reach_.emplace(key, std::move(r)).first->second;
}

const FlowCache::Vector& FlowCache::ascend(int q, std::size_t i) {
    auto key = std::make_pair(q, i);
    if (auto it = ascend_.find(key); it != ascend_.end()) return it->second;
    const auto& v = *v_;
    const auto& x = v.complex();
    Vector r;
    if (v.critical(q, i)) {
        r[i] = 1;
    } else if (std::size_t a = v.up(q, i); a != kNone) {
        const int s = facet_sign(x, q + 1, a, i);
        for (const auto& f : x.facets(q + 1, a)) {
            if (f.index == i) continue;
            const int w = -s * f.sign;
            for (const auto& [k, c] : ascend(q, f.index)) r[k] += w * c;
        }
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return ascend_.emplace(key, std::move(r)).first->second;
}

IntegerMatrix thom_smale_boundary(const GradientVectorField& v, int q) {
    const auto cols = v.critical_indices(q);
    const auto rows = v.critical_indices(q - 1);
    IntegerMatrix m(rows.size(), cols.size());
    if (q <= 0 || cols.empty() || rows.empty()) return m;
    std::vector<std::size_t> row_of(v.complex().count(q - 1), kNone);
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    FlowCache cache(v);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, w] : cache.descend(q, cols[c])) m(row_of[k], c) = w;
    return m;
}

IntegerChainComplex thom_smale_complex(const GradientVectorField& v) {
    std::vector<std::vector<std::string>> labels;
    std::vector<IntegerMatrix> bounds;
    for (int q = 0; q <= v.complex().dim(); ++q) {
        std::vector<std::string> l;
        for (const auto& s : v.critical_simplices(q)) l.push_back(s.str());
        labels.push_back(std::move(l));
        bounds.push_back(thom_smale_boundary(v, q));
    }
    return IntegerChainComplex(std::move(labels), std::move(bounds));
}

}  // namespace mvmorse
