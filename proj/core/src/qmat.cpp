#include "fo52/qmat.hpp"

#include <stdexcept>

namespace fo52 {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return QMat();
    QMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMat QMat::vstack(const QMat& a, const QMat& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    QMat m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

std::vector<Rat> QMat::row(std::size_t i) const {
    std::vector<Rat> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void QMat::set_row(std::size_t i, const std::vector<Rat>& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

QMat QMat::mul(const QMat& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("mul: shape mismatch");
    QMat out(rows_, rhs.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (rat_is_zero(a)) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                const Rat& b = rhs.at(k, j);
                if (rat_is_zero(b)) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

std::vector<Rat> QMat::mul_vec(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mul_vec: size mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (!rat_is_zero(a) && !rat_is_zero(v[j])) acc += a * v[j];
        }
        out[i] = acc;
    }
    return out;
}

QMat QMat::transpose() const {
    QMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool QMat::is_zero() const {
    for (const Rat& x : e_)
        if (sgn(x) != 0) return false;
    return true;
}

namespace {

// Scales a row in place to a primitive integer vector (positive scale only,
// so sign patterns survive). Keeps entries small during elimination.
void row_make_primitive(QMat& m, std::size_t i) {
    const std::size_t n = m.cols();
    mpz_class den_lcm(1), num_gcd(0);
    for (std::size_t j = 0; j < n; ++j) {
        const Rat& x = m.at(i, j);
        if (sgn(x) == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (den_lcm != 1) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat& x = m.at(i, j);
            if (sgn(x) == 0) continue;
            x *= den_lcm;
            x.canonicalize();
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Rat& x = m.at(i, j);
        if (sgn(x) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        if (num_gcd == 1) break;
    }
    if (num_gcd > 1) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat& x = m.at(i, j);
            if (sgn(x) == 0) continue;
            x /= num_gcd;
        }
    }
}

} // namespace

RrefResult rref(const QMat& m) {
    RrefResult res;
    res.mat = m;
    QMat& a = res.mat;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && sgn(a.at(piv, c)) == 0) ++piv;
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = 0; j < nc; ++j) swap(a.at(r, j), a.at(piv, j));
        const Rat inv = Rat(1) / a.at(r, c);
        a.at(r, c) = 1;
        for (std::size_t j = c + 1; j < nc; ++j)
            if (sgn(a.at(r, j)) != 0) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            const Rat f = a.at(i, c);
            if (sgn(f) == 0) continue;
            a.at(i, c) = 0;
            for (std::size_t j = c + 1; j < nc; ++j) {
                const Rat& p = a.at(r, j);
                if (sgn(p) != 0) a.at(i, j) -= f * p;
            }
            if (i > r) row_make_primitive(a, i);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

Rat qmat_det(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("qmat_det: not square");
    QMat a = m;
    const std::size_t n = a.rows();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(a.at(piv, c)) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) swap(a.at(c, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(c, c);
        const Rat inv = Rat(1) / a.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rat f = a.at(i, c) * inv;
            if (sgn(f) == 0) continue;
            for (std::size_t j = c; j < n; ++j)
                if (sgn(a.at(c, j)) != 0) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

QSubspace QSubspace::full(std::size_t ambient) {
    return from_rows(QMat::identity(ambient));
}

QSubspace QSubspace::from_rows(const QMat& rows) {
    QSubspace s;
    s.ambient_ = rows.cols();
    RrefResult r = rref(rows);
    QMat b(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = r.mat.at(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
}

std::vector<Rat> QSubspace::reduce(std::vector<Rat> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: ambient mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Rat f = v[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) {
            const Rat& b = basis_.at(i, j);
            if (sgn(b) != 0) v[j] -= f * b;
        }
    }
    return v;
}

bool QSubspace::contains(const std::vector<Rat>& v) const {
    const std::vector<Rat> r = reduce(v);
    for (const Rat& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

bool QSubspace::contains_subspace(const QSubspace& other) const {
    if (other.ambient_dim() != ambient_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

QSubspace kernel(const QMat& m) {
    const RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    QMat basis(nc - r.rank, nc);
    std::size_t row = 0;
    for (std::size_t j = 0; j < nc; ++j) {
        if (is_pivot[j]) continue;
        basis.at(row, j) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            basis.at(row, r.pivot_cols[i]) = -r.mat.at(i, j);
        ++row;
    }
    return QSubspace::from_rows(basis);
}

QSubspace subspace_meet(const QSubspace& a, const QSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("meet: ambient mismatch");
    // a = null(Ka), b = null(Kb)  =>  a ∩ b = null(stack(Ka, Kb)).
    const QSubspace ka = kernel(a.basis());
    const QSubspace kb = kernel(b.basis());
    if (a.dim() == 0 || b.dim() == 0) return QSubspace::zero(a.ambient_dim());
    return kernel(QMat::vstack(ka.basis(), kb.basis()));
}

QSubspace subspace_join(const QSubspace& a, const QSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("join: ambient mismatch");
    return QSubspace::from_rows(QMat::vstack(a.basis(), b.basis()));
}

} // namespace fo52
