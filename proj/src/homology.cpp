#include "mvmorse/homology.hpp"

#include <sstream>

#include "mvmorse/errors.hpp"

namespace mvmorse {

bool IntegerMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : data_)
        if (x != 0) ++n;
    return n;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntegerMatrix IntegerMatrix::permuted(const std::vector<std::size_t>& row_order,
                                      const std::vector<std::size_t>& col_order) const {
    IntegerMatrix p(row_order.size(), col_order.size());
    for (std::size_t i = 0; i < row_order.size(); ++i)
        for (std::size_t j = 0; j < col_order.size(); ++j) p(i, j) = (*this)(row_order[i], col_order[j]);
    return p;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntegerMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) p(i, j) += x * b(k, j);
        }
    return p;
}

std::string to_string(const IntegerMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src], columns from `from` on
void row_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t c = from; c < m.cols(); ++c)
        if (m(src, c) != 0) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t r = from; r < m.rows(); ++r)
        if (m(r, src) != 0) m(r, dst) -= q * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
    SmithForm out;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        std::size_t pi = rows, pj = cols;
        Integer best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pi == rows || abs(m(i, j)) < best)) {
                    best = abs(m(i, j));
                    pi = i;
                    pj = j;
                    if (best == 1) goto found;
                }
    found:
        if (pi == rows) break;
        swap_rows(m, t, pi);
        swap_cols(m, t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Integer q = m(i, t) / m(t, t);
                row_axpy(m, i, t, q, t);
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Integer q = m(t, j) / m(t, t);
                col_axpy(m, j, t, q, t);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot survived; move it to the pivot
                std::size_t bi = t, bj = t;
                Integer b = abs(m(t, t));
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (m(i, t) != 0 && abs(m(i, t)) < b) b = abs(m(i, t)), bi = i, bj = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(t, j) != 0 && abs(m(t, j)) < b) b = abs(m(t, j)), bi = t, bj = j;
                swap_rows(m, t, bi);
                swap_cols(m, t, bj);
                continue;
            }
            if (abs(m(t, t)) == 1) break;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) != 0 && m(i, j) % m(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_axpy(m, t, bad, Integer(-1), t);
        }
        out.factors.push_back(abs(m(t, t)));
    }
    out.rank = out.factors.size();
    return out;
}

IntegerChainComplex::IntegerChainComplex(std::vector<std::vector<std::string>> labels,
                                         std::vector<IntegerMatrix> boundaries)
    : labels_(std::move(labels)), boundaries_(std::move(boundaries)) {
    boundaries_.resize(labels_.size());
    if (!labels_.empty()) boundaries_[0] = IntegerMatrix(0, labels_[0].size());
    for (std::size_t q = 1; q < labels_.size(); ++q) {
        const auto& d = boundaries_[q];
        if (d.rows() != labels_[q - 1].size() || d.cols() != labels_[q].size())
            throw std::invalid_argument("boundary " + std::to_string(q) + " has shape " +
                                        std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                        ", expected " + std::to_string(labels_[q - 1].size()) + "x" +
                                        std::to_string(labels_[q].size()));
    }
}

std::size_t IntegerChainComplex::rank(int q) const {
    if (q < 0 || q > top_degree()) return 0;
    return labels_[q].size();
}

const std::vector<std::string>& IntegerChainComplex::labels(int q) const {
    static const std::vector<std::string> none;
    if (q < 0 || q > top_degree()) return none;
    return labels_[q];
}

IntegerMatrix IntegerChainComplex::boundary(int q) const {
    if (q >= 0 && q <= top_degree()) return boundaries_[q];
    return IntegerMatrix(rank(q - 1), rank(q));
}

int IntegerChainComplex::composition_failure() const {
    for (int q = 1; q < top_degree(); ++q)
        if (!(boundaries_[q] * boundaries_[q + 1]).is_zero()) return q;
    return -1;
}

const DegreeHomology& HomologyResult::at(int q) const {
    static const DegreeHomology trivial;
    for (const auto& d : degrees)
        if (d.degree == q) return d;
    return trivial;
}

std::size_t HomologyResult::betti(int q) const { return at(q).betti; }
std::vector<Integer> HomologyResult::torsion(int q) const { return at(q).torsion; }

HomologyResult HomologyResult::trimmed() const {
    HomologyResult r = *this;
    while (!r.degrees.empty() && r.degrees.back().betti == 0 && r.degrees.back().torsion.empty())
        r.degrees.pop_back();
    return r;
}

bool operator==(const HomologyResult& a, const HomologyResult& b) {
    return a.trimmed().degrees == b.trimmed().degrees;
}

std::string HomologyResult::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ", ";
        const auto& d = degrees[i];
        bool first = true;
        if (d.betti > 0) {
            os << 'Z';
            if (d.betti > 1) os << '^' << d.betti;
            first = false;
        }
        for (const auto& t : d.torsion) {
            os << (first ? "" : "+") << "Z/" << t;
            first = false;
        }
        if (first) os << '0';
    }
    os << ')';
    return os.str();
}

HomologyResult homology(const IntegerChainComplex& c) {
    if (int q = c.composition_failure(); q >= 0)
        throw ConsistencyError("boundary " + std::to_string(q) + " composed with boundary " +
                               std::to_string(q + 1) + " is not zero");
    const int top = c.top_degree();
    std::vector<SmithForm> snf(static_cast<std::size_t>(top + 2));
    for (int q = 1; q <= top; ++q) snf[q] = smith_normal_form(c.boundary(q));
    HomologyResult h;
    for (int q = 0; q <= top; ++q) {
        DegreeHomology d;
        d.degree = q;
        d.betti = c.rank(q) - snf[q].rank - snf[q + 1].rank;
        for (const auto& f : snf[q + 1].factors)
            if (f > 1) d.torsion.push_back(f);
        h.degrees.push_back(std::move(d));
    }
    return h;
}

IntegerChainComplex simplicial_chain_complex(const SimplicialComplex& x) {
    std::vector<std::vector<std::string>> labels;
    std::vector<IntegerMatrix> bounds;
    for (int q = 0; q <= x.dim(); ++q) {
        std::vector<std::string> l;
        for (const auto& s : x.simplices(q)) l.push_back(s.str());
        labels.push_back(std::move(l));
        IntegerMatrix d(x.count(q - 1), x.count(q));
        if (q > 0)
            for (std::size_t j = 0; j < x.count(q); ++j)
                for (const auto& f : x.facets(q, j)) d(f.index, j) = f.sign;
        bounds.push_back(std::move(d));
    }
    return IntegerChainComplex(std::move(labels), std::move(bounds));
}

HomologyResult simplicial_homology(const SimplicialComplex& x) { return homology(simplicial_chain_complex(x)); }

}  // namespace mvmorse
