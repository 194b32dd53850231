#include "mvmorse/prism.hpp"

#include <set>

#include "mvmorse/errors.hpp"

namespace mvmorse {

namespace {

bool has_prefix(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

}  // namespace

PrismComplex::PrismComplex(std::shared_ptr<const SimplicialComplex> base, std::string a_prefix,
                           std::string b_prefix)
    : base_(std::move(base)), a_prefix_(std::move(a_prefix)), b_prefix_(std::move(b_prefix)) {
    if (a_prefix_.empty() || b_prefix_.empty() || !(a_prefix_ < b_prefix_) ||
        has_prefix(b_prefix_, a_prefix_))
        throw ComplexError("prism prefixes must be nonempty, ordered and prefix-free: '" + a_prefix_ +
                           "', '" + b_prefix_ + "'");
    std::vector<Simplex> tops;
    for (const auto& alpha : base_->maximal())
        for (std::size_t r = 0; r < alpha.size(); ++r) tops.push_back(block_simplex(alpha, r + 1, r));
    complex_ = std::make_shared<const SimplicialComplex>(
        base_->empty() ? SimplicialComplex() : SimplicialComplex::closure(tops));
}

Simplex PrismComplex::block_simplex(const Simplex& alpha, std::size_t a_count, std::size_t b_from) const {
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < a_count && k < alpha.size(); ++k) out.push_back(a(alpha[k]));
    for (std::size_t k = b_from; k < alpha.size(); ++k) out.push_back(b(alpha[k]));
    return Simplex(std::move(out));
}

std::vector<Simplex> PrismComplex::upper_block(const Simplex& alpha) const {
    std::vector<Simplex> out;
    for (std::size_t r = 0; r < alpha.size(); ++r) out.push_back(block_simplex(alpha, r + 1, r));
    return out;
}

std::vector<Simplex> PrismComplex::lower_block(const Simplex& alpha) const {
    std::vector<Simplex> out;
    for (std::size_t k = 0; k <= alpha.size(); ++k) out.push_back(block_simplex(alpha, k, k));
    return out;
}

bool PrismComplex::is_a_vertex(const Vertex& v) const { return has_prefix(v, a_prefix_); }
bool PrismComplex::is_b_vertex(const Vertex& v) const { return has_prefix(v, b_prefix_); }

Simplex PrismComplex::ground(const Simplex& sigma) const {
    if (!complex_->contains(sigma)) throw FieldError(sigma.str() + " is not a prism simplex");
    std::set<Vertex> g;
    for (const auto& v : sigma.vertices())
        g.insert(is_a_vertex(v) ? v.substr(a_prefix_.size()) : v.substr(b_prefix_.size()));
    return Simplex(std::vector<Vertex>(g.begin(), g.end()));
}

bool PrismComplex::on_boundary(const Simplex& sigma) const {
    bool any_a = false, any_b = false;
    for (const auto& v : sigma.vertices()) (is_a_vertex(v) ? any_a : any_b) = true;
    return !(any_a && any_b);
}

PrismComplex prism(const SimplicialComplex& y, std::string a_prefix, std::string b_prefix) {
    for (const auto& v : y.vertices())
        if (has_prefix(v, a_prefix) || has_prefix(v, b_prefix))
            throw ComplexError("prism prefix collides with base vertex '" + v + "'");
    return PrismComplex(std::make_shared<const SimplicialComplex>(y), std::move(a_prefix),
                        std::move(b_prefix));
}

Simplex ground_simplex(const PrismComplex& p, const Simplex& sigma) { return p.ground(sigma); }

OrientedSimplex ground_simplex(const PrismComplex& p, const OrientedSimplex& sigma) {
    return OrientedSimplex(p.ground(sigma.simplex), sigma.sign);
}

}  // namespace mvmorse
