#pragma once

#include <cstddef>
#include <vector>

#include "fo52/rat.hpp"

namespace fo52 {

// Dense exact rational matrix, row-major.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static QMat identity(std::size_t n);
    static QMat from_rows(const std::vector<std::vector<Rat>>& rows);
    static QMat vstack(const QMat& a, const QMat& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rat>& v);

    QMat mul(const QMat& rhs) const;
    std::vector<Rat> mul_vec(const std::vector<Rat>& v) const;
    QMat transpose() const;
    bool is_zero() const;

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

struct RrefResult {
    QMat mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Unique reduced row echelon form. Deterministic first-nonzero pivoting;
// rows are rescaled to primitive integer vectors during elimination to keep
// entries small, and pivot rows to pivot = 1 at the end.
RrefResult rref(const QMat& m);

// Exact determinant (Gaussian elimination); square input required.
Rat qmat_det(const QMat& m);

// Canonical subspace of Q^n: row space held in RREF with zero rows dropped.
// Equality of subspaces is literal equality of canonical bases.
class QSubspace {
public:
    QSubspace() = default;
    explicit QSubspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static QSubspace zero(std::size_t ambient) { return QSubspace(ambient); }
    static QSubspace full(std::size_t ambient);
    static QSubspace from_rows(const QMat& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // v minus its projection onto this subspace along pivot coordinates:
    // the residue has zeros at every pivot column. Membership <=> residue 0.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    bool contains(const std::vector<Rat>& v) const;
    bool contains_subspace(const QSubspace& other) const;

    bool operator==(const QSubspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    std::size_t ambient_ = 0;
    QMat basis_{0, 0};
    std::vector<std::size_t> pivots_;
};

// Null space {v : m v = 0}, dim = cols - rank, canonical basis.
QSubspace kernel(const QMat& m);

QSubspace subspace_meet(const QSubspace& a, const QSubspace& b);
QSubspace subspace_join(const QSubspace& a, const QSubspace& b);

} // namespace fo52
