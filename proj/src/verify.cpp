#include "mvmorse/verify.hpp"

#include <algorithm>
#include <set>

#include "mvmorse/errors.hpp"

namespace mvmorse {

namespace {

constexpr std::size_t kMaxDetails = 20;

void fail(CheckResult& c, const std::string& why) {
    c.passed = false;
    if (c.details.size() < kMaxDetails) c.details.push_back(why);
}

std::string join(const std::vector<Simplex>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].str();
    return out + "}";
}

bool all_tagged(const Simplex& s, const std::string& tag) {
    return std::all_of(s.vertices().begin(), s.vertices().end(),
                       [&](const Vertex& v) { return v.compare(0, tag.size(), tag) == 0; });
}

Simplex strip(const Simplex& s) {
    std::vector<Vertex> out;
    for (const auto& v : s.vertices()) out.push_back(v.substr(v.find(':') + 1));
    return Simplex(std::move(out));
}

// a-copies of base positions `as`, b-copies of base positions `bs`
Simplex mixed(const Simplex& base, std::initializer_list<std::vector<std::size_t>> sides) {
    std::vector<Vertex> out;
    int side = 0;
    for (const auto& positions : sides) {
        for (auto p : positions) out.push_back((side == 0 ? kTagA : kTagB) + base[p]);
        ++side;
    }
    return Simplex(std::move(out));
}

std::vector<std::size_t> range(std::size_t from, std::size_t to_inclusive) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i <= to_inclusive && to_inclusive != static_cast<std::size_t>(-1); ++i)
        out.push_back(i);
    return out;
}

int expected_type(GeneratorKind from, GeneratorKind to) {
    using K = GeneratorKind;
    if (from == K::FromA && to == K::FromA) return 1;
    if (from == K::FromB && to == K::FromB) return 2;
    if (from == K::Shifted && to == K::Shifted) return 3;
    if (from == K::Shifted && to == K::FromA) return 4;
    if (from == K::Shifted && to == K::FromB) return 5;
    return 0;
}

}  // namespace

XTilde::Part XTilde::part(const Simplex& s) const {
    if (all_tagged(s, kTagA)) return Part::A;
    if (all_tagged(s, kTagB)) return Part::B;
    return Part::Interior;
}

std::vector<Simplex> XTilde::interior(int q) const {
    std::vector<Simplex> out;
    for (const auto& s : complex->simplices(q))
        if (is_interior(s)) out.push_back(s);
    return out;
}

XTilde build_xtilde(const Decomposition& d) {
    XTilde xt;
    xt.x = d.x;
    xt.prism = std::make_shared<const PrismComplex>(prism(*d.iab, kTagA, kTagB));
    xt.complex = std::make_shared<const SimplicialComplex>(
        complex_union(complex_union(*d.a_bar.complex, xt.prism->complex()), *d.b_bar.complex));
    return xt;
}

GradientVectorField build_v_field(const XTilde& xt) {
    DiscreteVectorField v;
    const auto& base = xt.prism->base();
    for (const auto& alpha : base.all_simplices())
        for (std::size_t r = 0; r < alpha.size(); ++r)
            v.add(xt.prism->block_simplex(alpha, r, r), xt.prism->block_simplex(alpha, r + 1, r));
    return GradientVectorField::certify(xt.complex, std::move(v));
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Report check_iso_simplicial(const XTilde& xt) {
    Report rep;
    CheckResult acyclic{"v_field_acyclic"}, crit{"v_critical_set"}, gens{"v_generator_bijection"},
        mats{"v_boundary_matches_simplicial"}, hom{"v_homology_matches_simplicial"};
    std::optional<GradientVectorField> v;
    try {
        v = build_v_field(xt);
    } catch (const NotAcyclicError& e) {
        fail(acyclic, e.what());
    }
    if (!v) {
        rep.checks = {acyclic};
        return rep;
    }
    const auto& x = *xt.x;
    const auto& iab = xt.prism->base();
    for (int q = 0; q <= xt.complex->dim(); ++q) {
        std::vector<Simplex> expected;
        for (const auto& s : xt.complex->simplices(q)) {
            const auto part = xt.part(s);
            if (part == XTilde::Part::A || (part == XTilde::Part::B && !iab.contains(strip(s))))
                expected.push_back(s);
        }
        const auto actual = v->critical_simplices(q);
        if (actual != expected)
            fail(crit, "degree " + std::to_string(q) + ": critical " + join(actual) + ", expected " + join(expected));

        std::vector<std::size_t> pos;
        std::set<std::size_t> seen;
        for (const auto& s : actual) {
            auto i = x.find(strip(s));
            if (!i || !seen.insert(*i).second) {
                fail(gens, "degree " + std::to_string(q) + ": " + s.str() + " has no unique image in X");
                continue;
            }
            pos.push_back(*i);
        }
        if (seen.size() != x.count(q))
            fail(gens, "degree " + std::to_string(q) + ": " + std::to_string(seen.size()) + " images for " +
                           std::to_string(x.count(q)) + " simplices of X");
    }
    if (gens.passed)
        for (int q = 1; q <= x.dim(); ++q) {
            const auto cols = v->critical_simplices(q);
            const auto rows = v->critical_simplices(q - 1);
            const IntegerMatrix dv = thom_smale_boundary(*v, q);
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const Simplex tau = strip(cols[j]), sigma = strip(rows[i]);
                    const int want = incidence(tau, sigma);
                    if (dv(i, j) != want)
                        fail(mats, "entry " + cols[j].str() + " -> " + rows[i].str() + " is " + dv(i, j).str() +
                                       ", simplicial boundary gives " + std::to_string(want));
                }
        }
    const auto hv = homology(thom_smale_complex(*v));
    const auto hx = simplicial_homology(x);
    if (!(hv == hx)) fail(hom, "Thom-Smale " + hv.str() + " vs simplicial " + hx.str());
    rep.checks = {acyclic, crit, gens, mats, hom};
    return rep;
}

Simplex interior_critical(const Decomposition& d, const Simplex& gamma) {
    const Simplex base = d.i_bar.from_copy(gamma);
    return mixed(base, {{0}, range(0, base.size() - 1)});
}

WField build_w_field(const XTilde& xt, const Decomposition& d) {
    WField out{GradientVectorField::certify(xt.complex, DiscreteVectorField{}), {}};
    DiscreteVectorField w;
    auto put = [&](const Simplex& lo, const Simplex& hi, Provenance p) {
        w.add(lo, hi);
        out.parts[{lo, hi}] = p;
    };
    for (const auto& [lo, hi] : d.w_a.field().pairs()) put(lo, hi, Provenance::from_WA);
    for (const auto& [lo, hi] : d.w_b.field().pairs()) put(lo, hi, Provenance::from_WB);
    const auto W = Provenance::from_Wprime;
    for (const auto& [alpha_bar, beta_bar] : d.w_i.field().pairs()) {
        const Simplex beta = d.i_bar.from_copy(beta_bar);
        const Simplex alpha = d.i_bar.from_copy(alpha_bar);
        const std::size_t q = beta.size() - 1;
        std::size_t j = 0;
        while (j < alpha.size() && alpha[j] == beta[j]) ++j;
        if (j == 0) {
            put(mixed(beta, {{1}, range(1, q)}), mixed(beta, {{0, 1}, range(1, q)}), W);
            put(mixed(beta, {{0}, range(1, q)}), mixed(beta, {{0}, range(0, q)}), W);
            for (std::size_t r = 1; r + 1 <= q; ++r) {
                put(mixed(beta, {range(0, r), range(r + 1, q)}), mixed(beta, {range(0, r + 1), range(r + 1, q)}), W);
                put(mixed(beta, {range(1, r), range(r + 1, q)}), mixed(beta, {range(1, r + 1), range(r + 1, q)}), W);
            }
        } else {
            auto b_minus_j = range(0, q);
            b_minus_j.erase(b_minus_j.begin() + static_cast<std::ptrdiff_t>(j));
            put(mixed(beta, {{0}, b_minus_j}), mixed(beta, {{0}, range(0, q)}), W);
            for (std::size_t r = 0; r + 1 <= q; ++r)
                put(mixed(beta, {range(0, r), range(r + 1, q)}), mixed(beta, {range(0, r + 1), range(r + 1, q)}), W);
            for (std::size_t r = 0; r + 2 <= q; ++r)
                put(mixed(alpha, {range(0, r), range(r + 1, q - 1)}),
                    mixed(alpha, {range(0, r + 1), range(r + 1, q - 1)}), W);
        }
    }
    for (int r = 0; r <= d.w_i.complex().dim(); ++r)
        for (const auto& gamma_bar : d.w_i.critical_simplices(r)) {
            const Simplex gamma = d.i_bar.from_copy(gamma_bar);
            const std::size_t q = gamma.size() - 1;
            for (std::size_t k = 1; k <= q; ++k)
                put(mixed(gamma, {range(0, k - 1), range(k, q)}), mixed(gamma, {range(0, k), range(k, q)}), W);
        }
    try {
        out.field = GradientVectorField::certify(xt.complex, std::move(w));
    } catch (const NotAcyclicError& e) {
        throw ConsistencyError(std::string("combined field is not acyclic: ") + e.what());
    }
    for (int q = 0; q <= xt.complex->dim(); ++q) {
        std::vector<Simplex> expected = d.w_a.critical_simplices(q);
        for (const auto& s : d.w_b.critical_simplices(q)) expected.push_back(s);
        for (const auto& g : d.w_i.critical_simplices(q - 1)) expected.push_back(interior_critical(d, g));
        std::sort(expected.begin(), expected.end());
        const auto actual = out.field.critical_simplices(q);
        if (actual != expected)
            throw ConsistencyError("critical simplices of the combined field in degree " + std::to_string(q) + ": " +
                                   join(actual) + ", expected " + join(expected));
    }
    return out;
}

MVGenerator f_map(const XTilde& xt, const Decomposition& d, const WField& w, const Simplex& s) {
    if (!w.field.critical(s)) throw std::invalid_argument(s.str() + " is not critical");
    switch (xt.part(s)) {
        case XTilde::Part::A: return {GeneratorKind::FromA, s, s.dim()};
        case XTilde::Part::B: return {GeneratorKind::FromB, s, s.dim()};
        default: {
            const Simplex gamma = d.i_bar.to_copy(xt.prism->ground(s));
            if (interior_critical(d, gamma) != s)
                throw std::invalid_argument(s.str() + " is not of the form [a0,b0,...,bq]");
            return {GeneratorKind::Shifted, gamma, s.dim()};
        }
    }
}

Simplex g_map(const Decomposition& d, const MVGenerator& g) {
    return g.kind == GeneratorKind::Shifted ? interior_critical(d, g.simplex) : g.simplex;
}

int classify_w_trajectory(const Trajectory& t, const XTilde& xt, const WField& w) {
    const auto& s = t.simplices;
    const std::size_t k = s.size() / 2 - 1;
    using P = XTilde::Part;
    auto provenance = [&](std::size_t i) {  // of the pair (sigma_i, tau_i), 1 <= i <= k
        auto it = w.parts.find({s[2 * i - 1], s[2 * i]});
        if (it == w.parts.end()) throw ConsistencyError("trajectory step is not a field pair: " + t.str());
        return it->second;
    };
    auto pairs_from = [&](Provenance p) {
        for (std::size_t i = 1; i <= k; ++i)
            if (provenance(i) != p) return false;
        return true;
    };
    const P start = xt.part(s.front()), end = xt.part(s.back());
    if (start == P::A && end == P::A && pairs_from(Provenance::from_WA)) return 1;
    if (start == P::B && end == P::B && pairs_from(Provenance::from_WB)) return 2;
    if (start == P::Interior) {
        if (end == P::Interior && pairs_from(Provenance::from_Wprime)) return 3;
        for (P side : {P::A, P::B}) {
            std::size_t r = 1;
            while (r <= k + 1 && xt.part(s[2 * r - 1]) != side) ++r;
            if (r > k + 1) continue;
            bool ok = true;
            for (std::size_t i = r; i <= k + 1 && ok; ++i) ok = xt.part(s[2 * i - 1]) == side;
            for (std::size_t i = 0; i < r && ok; ++i) ok = xt.part(s[2 * i]) == P::Interior;
            if (ok) return side == P::A ? 4 : 5;
        }
    }
    throw ConsistencyError("trajectory fits none of the five types: " + t.str());
}

Report check_main_iso(const XTilde& xt, const Decomposition& d, const WField& w) {
    CheckResult bij{"f_bijection"}, traj{"trajectory_bijection"}, types{"trajectory_types"},
        mats{"w_boundary_matches_mv"}, hom{"homology_agreement"};
    const int top = std::max(xt.complex->dim(), d.x->dim() + 1);
    std::vector<std::vector<Simplex>> crit(top + 1);
    std::vector<std::vector<MVGenerator>> gens(top + 1);
    std::vector<std::vector<std::size_t>> col_of(top + 1);  // crit index -> generator index
    for (int q = 0; q <= top; ++q) {
        crit[q] = w.field.critical_simplices(q);
        gens[q] = mv_generators(d, q);
        std::set<std::size_t> hit;
        for (const auto& s : crit[q]) {
            MVGenerator g = f_map(xt, d, w, s);
            if (g_map(d, g) != s) fail(bij, "g(f(" + s.str() + ")) != " + s.str());
            auto it = std::find(gens[q].begin(), gens[q].end(), g);
            if (it == gens[q].end()) {
                fail(bij, "f(" + s.str() + ") = " + g.name() + " is not in D_" + std::to_string(q));
                col_of[q].push_back(GradientVectorField::none);
                continue;
            }
            const auto idx = static_cast<std::size_t>(it - gens[q].begin());
            if (!hit.insert(idx).second) fail(bij, "f is not injective at " + s.str());
            col_of[q].push_back(idx);
        }
        for (const auto& g : gens[q]) {
            auto s = g_map(d, g);
            if (!xt.complex->contains(s) || !w.field.critical(s) || !(f_map(xt, d, w, s) == g))
                fail(bij, "f(g(" + g.name() + ")) != " + g.name());
        }
        if (hit.size() != gens[q].size())
            fail(bij, "degree " + std::to_string(q) + ": " + std::to_string(crit[q].size()) + " critical simplices, " +
                          std::to_string(gens[q].size()) + " generators");
    }
    if (!bij.passed) return Report{{bij}};

    const IntegerChainComplex dmv = mv_chain_complex(d);
    for (int q = 1; q <= top; ++q) {
        const IntegerMatrix dw = thom_smale_boundary(w.field, q);
        const IntegerMatrix dd = dmv.boundary(q);
        for (std::size_t j = 0; j < crit[q].size(); ++j) {
            const MVGenerator beta = gens[q][col_of[q][j]];
            for (std::size_t i = 0; i < crit[q - 1].size(); ++i) {
                const MVGenerator alpha = gens[q - 1][col_of[q - 1][i]];
                const auto gamma = enumerate_trajectories(w.field, crit[q][j], crit[q - 1][i]);
                const auto mv = enumerate_mv(d, beta, alpha);
                std::vector<int> wg, wm;
                const int want_type = expected_type(beta.kind, alpha.kind);
                for (const auto& t : gamma) {
                    wg.push_back(t.weight);
                    if (auto why = validate_trajectory(t, w.field); !why.empty()) fail(types, why + ": " + t.str());
                    int type = 0;
                    try {
                        type = classify_w_trajectory(t, xt, w);
                    } catch (const ConsistencyError& e) {
                        fail(types, e.what());
                    }
                    if (type != want_type)
                        fail(types, "type " + std::to_string(type) + " for " + beta.name() + " -> " + alpha.name() +
                                        ": " + t.str());
                }
                for (const auto& m : mv) {
                    wm.push_back(m.weight);
                    if (auto why = validate_mv_trajectory(d, m); !why.empty()) fail(types, why + ": " + m.str());
                }
                std::sort(wg.begin(), wg.end());
                std::sort(wm.begin(), wm.end());
                if (wg != wm) {
                    std::string msg = crit[q][j].str() + " -> " + crit[q - 1][i].str() + ": " +
                                      std::to_string(gamma.size()) + " field trajectories vs " +
                                      std::to_string(mv.size()) + " MV trajectories (" + beta.name() + " -> " +
                                      alpha.name() + ")";
                    for (const auto& t : gamma) msg += "\n  field " + std::to_string(t.weight) + ": " + t.str();
                    for (const auto& m : mv)
                        msg += "\n  mv case " + std::to_string(m.mv_case) + " " + std::to_string(m.weight) + ": " + m.str();
                    fail(traj, msg);
                }
                if (dw(i, j) != dd(col_of[q - 1][i], col_of[q][j]))
                    fail(mats, "entry " + beta.name() + " -> " + alpha.name() + ": field " + dw(i, j).str() + ", mv " +
                                   dd(col_of[q - 1][i], col_of[q][j]).str());
            }
        }
    }
    const auto hw = homology(thom_smale_complex(w.field));
    const auto hd = homology(dmv);
    const auto hx = simplicial_homology(*d.x);
    if (!(hw == hd) || !(hd == hx))
        fail(hom, "field " + hw.str() + ", mv " + hd.str() + ", simplicial " + hx.str());
    return Report{{bij, traj, types, mats, hom}};
}

Report run_verification(const Decomposition& d) {
    const XTilde xt = build_xtilde(d);
    Report rep = check_iso_simplicial(xt);
    CheckResult wf{"w_field"};
    std::optional<WField> w;
    try {
        w = build_w_field(xt, d);
    } catch (const ConsistencyError& e) {
        fail(wf, e.what());
    }
    rep.checks.push_back(wf);
    if (w) {
        Report main = check_main_iso(xt, d, *w);
        rep.checks.insert(rep.checks.end(), main.checks.begin(), main.checks.end());
    }
    return rep;
}

}  // namespace mvmorse
