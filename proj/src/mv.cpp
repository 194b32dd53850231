#include "mvmorse/mv.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mvmorse/errors.hpp"

namespace mvmorse {

std::uint64_t piece_seed(std::uint64_t seed, int piece) {
    // splitmix64 step
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(piece + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

GradientVectorField make_field(const RelabeledCopy& copy, const std::optional<DiscreteVectorField>& given,
                               FieldStrategy s, int piece) {
    if (given) return GradientVectorField::certify(copy.complex, *given);
    if (s.kind == Strategy::random) s.seed = piece_seed(s.seed, piece);
    return greedy_gvf(copy.complex, s);
}

const GradientVectorField& field_of(const Decomposition& d, GeneratorKind k) {
    switch (k) {
        case GeneratorKind::FromA: return d.w_a;
        case GeneratorKind::FromB: return d.w_b;
        default: return d.w_i;
    }
}

const RelabeledCopy& copy_of(const Decomposition& d, GeneratorKind k) {
    switch (k) {
        case GeneratorKind::FromA: return d.a_bar;
        case GeneratorKind::FromB: return d.b_bar;
        default: return d.i_bar;
    }
}

// intersection copy -> piece copy
Simplex transfer(const Decomposition& d, const Simplex& s, GeneratorKind piece) {
    return copy_of(d, piece).to_copy(d.i_bar.from_copy(s));
}

std::string join(const std::vector<Simplex>& seq) {
    std::string s;
    for (const auto& x : seq) s += (s.empty() ? "" : ", ") + x.str();
    return s;
}

}  // namespace

Decomposition build_decomposition(const SimplicialComplex& x, const SimplicialComplex& a,
                                  const SimplicialComplex& b, const FieldPlan& plan) {
    if (x.empty()) throw DecompositionError("X is empty");
    if (!a.is_subcomplex_of(x)) throw DecompositionError("A is not a subcomplex of X");
    if (!b.is_subcomplex_of(x)) throw DecompositionError("B is not a subcomplex of X");
    if (!(complex_union(a, b) == x)) throw DecompositionError("A u B differs from X");
    auto iab = complex_intersection(a, b);
    auto a_bar = copy_relabel(a, kTagA);
    auto b_bar = copy_relabel(b, kTagB);
    auto i_bar = copy_relabel(iab, kTagI);
    auto w_a = make_field(a_bar, plan.a, plan.strategy, 0);
    auto w_b = make_field(b_bar, plan.b, plan.strategy, 1);
    auto w_i = make_field(i_bar, plan.i, plan.strategy, 2);
    return Decomposition{std::make_shared<const SimplicialComplex>(x),
                         std::make_shared<const SimplicialComplex>(a),
                         std::make_shared<const SimplicialComplex>(b),
                         std::make_shared<const SimplicialComplex>(std::move(iab)),
                         std::move(a_bar),
                         std::move(b_bar),
                         std::move(i_bar),
                         std::move(w_a),
                         std::move(w_b),
                         std::move(w_i)};
}

std::string MVGenerator::name() const {
    std::string s;
    for (const auto& v : simplex.vertices()) s += (s.empty() ? "" : ",") + v;
    return s;
}

std::vector<MVGenerator> mv_generators(const Decomposition& d, int q) {
    std::vector<MVGenerator> out;
    if (q < 0) return out;
    for (const auto& s : d.w_a.critical_simplices(q)) out.push_back({GeneratorKind::FromA, s, q});
    for (const auto& s : d.w_b.critical_simplices(q)) out.push_back({GeneratorKind::FromB, s, q});
    for (const auto& s : d.w_i.critical_simplices(q - 1)) out.push_back({GeneratorKind::Shifted, s, q});
    return out;
}

MVGenerator find_generator(const Decomposition& d, const std::string& name) {
    std::vector<Vertex> vs;
    std::stringstream ss(name);
    std::string tok;
    std::string tag;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(0, 1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
        if (tok.empty()) throw std::invalid_argument("empty vertex in generator name '" + name + "'");
        for (const auto& t : {kTagA, kTagB, kTagI})
            if (tok.compare(0, t.size(), t) == 0) tag = t;
        if (tag.empty()) throw std::invalid_argument("generator name '" + name + "' needs a tag A:, B: or I:");
        if (tok.compare(0, tag.size(), tag) != 0) tok = tag + tok;
        vs.push_back(tok);
    }
    if (vs.empty()) throw std::invalid_argument("empty generator name");
    Simplex s(vs);
    const GeneratorKind kind =
        tag == kTagA ? GeneratorKind::FromA : tag == kTagB ? GeneratorKind::FromB : GeneratorKind::Shifted;
    const auto& f = field_of(d, kind);
    auto idx = f.complex().find(s);
    if (!idx || !f.critical(s.dim(), *idx))
        throw std::invalid_argument("'" + name + "' is not a critical simplex of the " + tag + " copy");
    return {kind, s, kind == GeneratorKind::Shifted ? s.dim() + 1 : s.dim()};
}

std::string MVTrajectory::str() const { return join(simplices); }

std::vector<Simplex> piece_part(const MVTrajectory& t) {
    if (t.mv_case < 4) return {};
    const std::string& tag = t.mv_case == 4 ? kTagA : kTagB;
    std::vector<Vertex> vs;
    for (const auto& x : t.simplices.at(2 * t.p).vertices()) {
        if (x.compare(0, kTagI.size(), kTagI) != 0) throw std::invalid_argument("crossover simplex is not in the intersection copy");
        vs.push_back(tag + x.substr(kTagI.size()));
    }
    std::vector<Simplex> out{Simplex(vs)};
    out.insert(out.end(), t.simplices.begin() + static_cast<std::ptrdiff_t>(2 * t.p + 1), t.simplices.end());
    return out;
}

Simplex mv_terminal(const MVTrajectory& t) {
    return t.mv_case >= 4 ? piece_part(t).back() : t.simplices.back();
}

int mv_weight(const MVTrajectory& t) {
    switch (t.mv_case) {
        case 1:
        case 2: return trajectory_weight(t.simplices);
        case 3: return -trajectory_weight(t.simplices);
        case 4:
        case 5: {
            const auto& s = t.simplices;
            int w = t.mv_case == 4 ? -1 : 1;
            for (std::size_t i = 0; i < t.p; ++i)
                w *= -incidence(s[2 * i], s[2 * i + 1]) * incidence(s[2 * i + 2], s[2 * i + 1]);
            const auto piece = piece_part(t);
            for (std::size_t i = 0; i < t.l; ++i) {
                const Simplex& alpha = piece[2 * i + 1];
                w *= -incidence(alpha, piece[2 * i]) * incidence(alpha, piece[2 * i + 2]);
            }
            return w;
        }
        default: throw std::invalid_argument("MV trajectory case must be 1..5");
    }
}

std::string validate_mv_trajectory(const Decomposition& d, const MVTrajectory& t) {
    if (t.mv_case < 1 || t.mv_case > 5) return "case out of range";
    if (t.weight != mv_weight(t)) return "recorded weight disagrees with the case formula";
    if (t.mv_case <= 3) {
        const auto kind = t.mv_case == 1 ? GeneratorKind::FromA
                          : t.mv_case == 2 ? GeneratorKind::FromB
                                           : GeneratorKind::Shifted;
        Trajectory raw{t.simplices, trajectory_weight(t.simplices)};
        return validate_trajectory(raw, field_of(d, kind));
    }
    const auto piece = t.mv_case == 4 ? GeneratorKind::FromA : GeneratorKind::FromB;
    const auto& s = t.simplices;
    if (s.size() != 2 * t.p + 2 * t.l + 1) return "sequence length does not match p and l";
    const auto& wi = d.w_i;
    const auto& fi = wi.field();
    const int r = s[0].dim();
    for (std::size_t i = 0; i <= 2 * t.p; ++i) {
        if (s[i].dim() != (i % 2 ? r - 1 : r)) return "wrong dimension in the intersection part";
        if (!wi.complex().contains(s[i])) return s[i].str() + " is not in the intersection copy";
    }
    if (!wi.critical(s[0])) return "initial simplex is not critical";
    for (std::size_t i = 1; i <= t.p; ++i) {
        const Simplex& sigma = s[2 * i - 1];
        if (!sigma.is_face_of(s[2 * i - 2])) return sigma.str() + " is not a face of " + s[2 * i - 2].str();
        if (fi.contains(sigma, s[2 * i - 2])) return "backward pair in the intersection part";
        if (!fi.contains(sigma, s[2 * i])) return "missing pair in the intersection part";
    }
    const auto& wp = field_of(d, piece);
    const auto& fp = wp.field();
    const auto part = piece_part(t);
    if (part.front() != transfer(d, s[2 * t.p], piece)) return "crossover simplex is not the copy of tau_p";
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (part[i].dim() != (i % 2 ? r + 1 : r)) return "wrong dimension in the piece part";
        if (!wp.complex().contains(part[i])) return part[i].str() + " is not in the piece copy";
    }
    for (std::size_t i = 0; i < t.l; ++i) {
        const Simplex& tau = part[2 * i];
        const Simplex& alpha = part[2 * i + 1];
        const Simplex& next = part[2 * i + 2];
        if (!fp.contains(tau, alpha)) return "missing pair in the piece part";
        if (!next.is_face_of(alpha)) return next.str() + " is not a face of " + alpha.str();
        if (fp.contains(next, alpha)) return "backward pair in the piece part";
    }
    if (!wp.critical(part.back())) return "terminal simplex is not critical";
    return {};
}

std::vector<MVTrajectory> enumerate_mv(const Decomposition& d, const MVGenerator& beta,
                                       const MVGenerator& alpha) {
    if (beta.degree != alpha.degree + 1) throw std::invalid_argument("enumerate_mv: degrees must differ by one");
    std::vector<MVTrajectory> out;
    using K = GeneratorKind;
    auto forman = [&](const GradientVectorField& f, int mv_case) {
        for (auto& t : enumerate_trajectories(f, beta.simplex, alpha.simplex)) {
            MVTrajectory m{mv_case, std::move(t.simplices), 0, 0, 0};
            m.weight = mv_weight(m);
            out.push_back(std::move(m));
        }
    };
    if (beta.kind == K::FromA && alpha.kind == K::FromA) forman(d.w_a, 1);
    else if (beta.kind == K::FromB && alpha.kind == K::FromB) forman(d.w_b, 2);
    else if (beta.kind == K::Shifted && alpha.kind == K::Shifted) forman(d.w_i, 3);
    if (beta.kind != K::Shifted || alpha.kind == K::Shifted) return out;

    const int mv_case = alpha.kind == K::FromA ? 4 : 5;
    const auto& wi = d.w_i;
    const auto& ci = wi.complex();
    const auto& wp = field_of(d, alpha.kind);
    const auto& cp = wp.complex();
    const int r = beta.simplex.dim();
    const std::size_t target = cp.index_of(alpha.simplex);
    constexpr auto none = GradientVectorField::none;

    std::vector<std::size_t> ipath{ci.index_of(beta.simplex)};
    std::vector<std::size_t> ppath;
    std::set<std::size_t> dead_piece, dead_i;

    auto emit = [&]() {
        MVTrajectory m;
        m.mv_case = mv_case;
        m.p = ipath.size() / 2;
        m.l = ppath.size() / 2;
        for (std::size_t i = 0; i < ipath.size(); ++i) m.simplices.push_back(ci.simplex(r - int(i % 2), ipath[i]));
        for (std::size_t i = 1; i < ppath.size(); ++i) m.simplices.push_back(cp.simplex(r + int(i % 2), ppath[i]));
        m.weight = mv_weight(m);
        out.push_back(std::move(m));
    };
    std::function<bool(std::size_t)> climb = [&](std::size_t s) {
        if (s == target) {
            emit();
            return true;
        }
        const std::size_t a = wp.up(r, s);
        if (a == none) return false;
        bool found = false;
        for (const auto& f : cp.facets(r + 1, a)) {
            if (f.index == s || dead_piece.count(f.index)) continue;
            ppath.push_back(a);
            ppath.push_back(f.index);
            if (climb(f.index))
                found = true;
            else
                dead_piece.insert(f.index);
            ppath.resize(ppath.size() - 2);
        }
        return found;
    };
    std::function<bool(std::size_t)> walk = [&](std::size_t t) {
        bool found = false;
        auto idx = cp.find(transfer(d, ci.simplex(r, t), alpha.kind));
        if (!idx) throw ConsistencyError("intersection simplex missing from its piece copy");
        if (!dead_piece.count(*idx)) {
            ppath.assign(1, *idx);
            if (climb(*idx))
                found = true;
            else
                dead_piece.insert(*idx);
            ppath.clear();
        }
        if (r > 0)
            for (const auto& f : ci.facets(r, t)) {
                if (f.index == wi.down(r, t)) continue;
                const std::size_t next = wi.up(r - 1, f.index);
                if (next == none || dead_i.count(next)) continue;
                ipath.push_back(f.index);
                ipath.push_back(next);
                if (walk(next))
                    found = true;
                else
                    dead_i.insert(next);
                ipath.resize(ipath.size() - 2);
            }
        return found;
    };
    walk(ipath[0]);
    return out;
}

namespace {

class Engine {
public:
    explicit Engine(const Decomposition& d) : d_(d), ca_(d.w_a), cb_(d.w_b), ci_(d.w_i) {}

    IntegerMatrix boundary(int q) {
        const auto cols = mv_generators(d_, q);
        const auto rows = mv_generators(d_, q - 1);
        IntegerMatrix m(rows.size(), cols.size());
        if (q <= 0 || rows.empty() || cols.empty()) return m;
        // per kind: copy-complex index -> row
        std::map<std::pair<GeneratorKind, std::size_t>, std::size_t> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& g = rows[i];
            row_of[{g.kind, field_of(d_, g.kind).complex().index_of(g.simplex)}] = i;
        }
        auto add = [&](GeneratorKind k, std::size_t idx, std::size_t c, const Integer& w) {
            m(row_of.at({k, idx}), c) += w;
        };
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto& g = cols[c];
            const auto& f = field_of(d_, g.kind);
            const std::size_t j = f.complex().index_of(g.simplex);
            switch (g.kind) {
                case GeneratorKind::FromA:
                    for (const auto& [k, w] : ca_.descend(q, j)) add(GeneratorKind::FromA, k, c, w);
                    break;
                case GeneratorKind::FromB:
                    for (const auto& [k, w] : cb_.descend(q, j)) add(GeneratorKind::FromB, k, c, w);
                    break;
                case GeneratorKind::Shifted: {
                    const int r = q - 1;
                    for (const auto& [k, w] : ci_.descend(r, j)) add(GeneratorKind::Shifted, k, c, -w);
                    for (const auto& [t, gw] : ci_.reach(r, j)) {
                        const Simplex& s = d_.w_i.complex().simplex(r, t);
                        const std::size_t sa = d_.w_a.complex().index_of(transfer(d_, s, GeneratorKind::FromA));
                        const std::size_t sb = d_.w_b.complex().index_of(transfer(d_, s, GeneratorKind::FromB));
                        for (const auto& [k, h] : ca_.ascend(r, sa)) add(GeneratorKind::FromA, k, c, -gw * h);
                        for (const auto& [k, h] : cb_.ascend(r, sb)) add(GeneratorKind::FromB, k, c, gw * h);
                    }
                    break;
                }
            }
        }
        return m;
    }

private:
    const Decomposition& d_;
    FlowCache ca_, cb_, ci_;
};

}  // namespace

IntegerMatrix mv_boundary(const Decomposition& d, int q) { return Engine(d).boundary(q); }

IntegerChainComplex mv_chain_complex(const Decomposition& d) {
    Engine e(d);
    const int top = d.x->dim() + 1;
    std::vector<std::vector<std::string>> labels;
    std::vector<IntegerMatrix> bounds;
    for (int q = 0; q <= top; ++q) {
        std::vector<std::string> l;
        for (const auto& g : mv_generators(d, q)) l.push_back(g.name());
        labels.push_back(std::move(l));
        bounds.push_back(e.boundary(q));
    }
    for (int q = 1; q < top; ++q) {
        const IntegerMatrix p = bounds[q] * bounds[q + 1];
        for (std::size_t r = 0; r < p.rows(); ++r)
            for (std::size_t c = 0; c < p.cols(); ++c)
                if (p(r, c) != 0)
                    throw ConsistencyError("boundary of boundary is nonzero: " + labels[q + 1][c] + " -> " +
                                           labels[q - 1][r] + " has coefficient " + p(r, c).str());
    }
    return IntegerChainComplex(std::move(labels), std::move(bounds));
}

}  // namespace mvmorse
