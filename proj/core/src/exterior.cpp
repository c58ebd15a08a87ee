#include "fo52/exterior.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

namespace fo52 {

std::vector<unsigned> mask_indices(ExtMask m) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < 16; ++i)
        if (m & (ExtMask(1) << i)) out.push_back(i);
    return out;
}

ExtMask mask_of(std::initializer_list<unsigned> idx) {
    ExtMask m = 0;
    for (unsigned i : idx) {
        const ExtMask bit = ExtMask(1) << i;
        if (m & bit) throw std::invalid_argument("mask_of: repeated index");
        m |= bit;
    }
    return m;
}

ExtMask mask_of(const std::vector<unsigned>& idx) {
    ExtMask m = 0;
    for (unsigned i : idx) {
        const ExtMask bit = ExtMask(1) << i;
        if (m & bit) throw std::invalid_argument("mask_of: repeated index");
        m |= bit;
    }
    return m;
}

int merge_sign(ExtMask a, ExtMask b) {
    if (a & b) return 0;
    // Inversions of (a-tuple, b-tuple): for each i in b, count members of a
    // above i.
    int inv = 0;
    for (unsigned i = 0; i < 16; ++i)
        if (b & (ExtMask(1) << i)) inv += std::popcount(static_cast<unsigned>(a >> (i + 1)));
    return (inv & 1) ? -1 : 1;
}

ExtBasis::ExtBasis(unsigned n, unsigned k) : n_(n), k_(k), pos_(std::size_t(1) << n, -1) {
    if (k > n) return;
    // k-subsets in lex order of the increasing index tuples.
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        ExtMask m = 0;
        for (unsigned i : idx) m |= ExtMask(1) << i;
        pos_[m] = static_cast<int>(masks_.size());
        masks_.push_back(m);
        if (k == 0) break;
        int j = static_cast<int>(k) - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (unsigned t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

std::size_t ExtBasis::pos_of(ExtMask m) const {
    const int p = pos_[m];
    if (p < 0) throw std::invalid_argument("ExtBasis::pos_of: mask not in basis");
    return static_cast<std::size_t>(p);
}

const ExtBasis& ExtBasis::get(unsigned n, unsigned k) {
    static std::map<std::pair<unsigned, unsigned>, ExtBasis> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find({n, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, k), ExtBasis(n, k)).first;
    return it->second;
}

ExtVec ExtVec::basis_element(unsigned ambient_n, ExtMask m) {
    ExtVec v(ambient_n, static_cast<unsigned>(std::popcount(static_cast<unsigned>(m))));
    v.set(m, Rat(1));
    return v;
}

ExtVec ExtVec::from_vector(const std::vector<Rat>& v) {
    ExtVec out(static_cast<unsigned>(v.size()), 1);
    for (unsigned i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out.set(ExtMask(1) << i, v[i]);
    return out;
}

ExtVec ExtVec::from_dense(unsigned ambient_n, unsigned grade, const std::vector<Rat>& coords) {
    const ExtBasis& basis = ExtBasis::get(ambient_n, grade);
    if (coords.size() != basis.size()) throw std::invalid_argument("from_dense: size mismatch");
    ExtVec out(ambient_n, grade);
    for (std::size_t p = 0; p < coords.size(); ++p)
        if (sgn(coords[p]) != 0) out.set(basis.mask_at(p), coords[p]);
    return out;
}

Rat ExtVec::get(ExtMask m) const {
    const auto it = c_.find(m);
    return it == c_.end() ? Rat(0) : it->second;
}

void ExtVec::set(ExtMask m, const Rat& v) {
    if (sgn(v) == 0)
        c_.erase(m);
    else
        c_[m] = v;
}

void ExtVec::add(ExtMask m, const Rat& v) {
    if (sgn(v) == 0) return;
    auto it = c_.find(m);
    if (it == c_.end()) {
        c_.emplace(m, v);
        return;
    }
    it->second += v;
    if (sgn(it->second) == 0) c_.erase(it);
}

ExtVec& ExtVec::operator+=(const ExtVec& o) {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("ExtVec+=: shape mismatch");
    for (const auto& [m, v] : o.c_) add(m, v);
    return *this;
}

ExtVec& ExtVec::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [m, v] : c_) v *= s;
    return *this;
}

std::vector<Rat> ExtVec::dense() const {
    const ExtBasis& basis = ExtBasis::get(n_, k_);
    std::vector<Rat> out(basis.size());
    for (const auto& [m, v] : c_) out[basis.pos_of(m)] = v;
    return out;
}

ExtVec wedge(const ExtVec& a, const ExtVec& b) {
    if (a.ambient_n() != b.ambient_n()) throw std::invalid_argument("wedge: ambient mismatch");
    ExtVec out(a.ambient_n(), a.grade() + b.grade());
    if (a.grade() + b.grade() > a.ambient_n()) return out;
    for (const auto& [ma, ca] : a.coeffs()) {
        for (const auto& [mb, cb] : b.coeffs()) {
            const int s = merge_sign(ma, mb);
            if (s == 0) continue;
            out.add(ma | mb, Rat(ca * cb * s));
        }
    }
    return out;
}

Rat vol5(const ExtVec& a) {
    if (a.ambient_n() != 5 || a.grade() != 5) throw std::invalid_argument("vol5: need grade 5 over Q^5");
    return a.get(ExtMask(0b11111));
}

ExtVec plucker_of_plane(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    if (u.size() != 5 || v.size() != 5) throw std::invalid_argument("plucker_of_plane: need Q^5 vectors");
    const ExtVec w = wedge(ExtVec::from_vector(u), ExtVec::from_vector(v));
    if (w.is_zero()) throw DependentVectors("plucker_of_plane: vectors are dependent");
    return w;
}

bool is_decomposable(const ExtVec& omega) {
    return wedge(omega, omega).is_zero();
}

QMat induced_wedge_map(const QMat& f, unsigned k) {
    const ExtBasis& rows = ExtBasis::get(static_cast<unsigned>(f.rows()), k);
    const ExtBasis& cols = ExtBasis::get(static_cast<unsigned>(f.cols()), k);
    QMat out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::vector<unsigned> ri = mask_indices(rows.mask_at(r));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const std::vector<unsigned> ci = mask_indices(cols.mask_at(c));
            QMat sub(k, k);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) sub.at(i, j) = f.at(ri[i], ci[j]);
            out.at(r, c) = qmat_det(sub);
        }
    }
    return out;
}

std::size_t pivot_index(const std::vector<Rat>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) return i;
    throw ZeroVector("pivot_index: zero vector");
}

QMat quotient_map_at(const std::vector<Rat>& x) {
    if (x.size() != 5) throw std::invalid_argument("quotient_map_at: need Q^5 point");
    const std::size_t p = pivot_index(x);
    // Projection along x onto the span of the non-pivot coordinates.
    QMat proj(4, 5);
    std::size_t r = 0;
    const Rat inv = Rat(-1) / x[p];
    for (std::size_t j = 0; j < 5; ++j) {
        if (j == p) continue;
        proj.at(r, j) = 1;
        proj.at(r, p) = x[j] * inv;
        ++r;
    }
    return induced_wedge_map(proj, 2);
}

WSubspace WSubspace::from_span(const QMat& rows) {
    WSubspace w;
    w.space = QSubspace::from_rows(rows);
    if (w.space.ambient_dim() != 10 || w.space.dim() != 5)
        throw std::invalid_argument("WSubspace: need a 5-dim subspace of Q^10");
    ExtVec p = ExtVec::from_vector(w.space.basis().row(0));
    for (std::size_t i = 1; i < 5; ++i) p = wedge(p, ExtVec::from_vector(w.space.basis().row(i)));
    w.plucker = p;
    return w;
}

ExtVec bivector_from_coords(const std::vector<Rat>& coords10) {
    return ExtVec::from_dense(5, 2, coords10);
}

} // namespace fo52
