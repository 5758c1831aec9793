#pragma once

#include "orbicalc/cyclotomic.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

namespace orb {

using CycVec = std::vector<Cyclotomic>;

// Dense matrix over Q(zeta_N), exact arithmetic only.
class CycMatrix {
  public:
    CycMatrix() : n_(1), rows_(0), cols_(0) {}
    CycMatrix(long conductor, long rows, long cols)
        : n_(conductor), rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows * cols), Cyclotomic(conductor)) {
        if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    }

    static CycMatrix identity(long conductor, long n) {
        CycMatrix m(conductor, n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(conductor);
        return m;
    }
    static CycMatrix diagonal(long conductor, const CycVec& d) {
        CycMatrix m(conductor, static_cast<long>(d.size()), static_cast<long>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }
    static CycMatrix from_columns(long conductor, long dim, const std::vector<CycVec>& cols) {
        CycMatrix m(conductor, dim, static_cast<long>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (static_cast<long>(cols[j].size()) != dim)
                throw InputError("column length mismatch");
            for (long i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    long conductor() const { return n_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Cyclotomic& at(long i, long j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Cyclotomic& at(long i, long j) const {
        return data_[static_cast<std::size_t>(i * cols_ + j)];
    }

    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.data_ == b.data_;
    }
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
        a.check_same_shape(b);
        CycMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
        a.check_same_shape(b);
        CycMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch in product");
        CycMatrix r(a.n_, a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const Cyclotomic& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (long j = 0; j < b.cols_; ++j) {
                    const Cyclotomic& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    CycVec apply(const CycVec& v) const {
        if (static_cast<long>(v.size()) != cols_)
            throw InputError("vector length mismatch in matrix apply");
        CycVec r(static_cast<std::size_t>(rows_), Cyclotomic(n_));
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero() || v[j].is_zero()) continue;
                r[i] += at(i, j) * v[j];
            }
        return r;
    }

    // Reduced row echelon form in place. Pivot choice is fixed for
    // reproducibility: leftmost column, first nonzero row from the top.
    struct Echelon {
        long rank = 0;
        std::vector<long> pivot_cols;  // pivot column of row r, r < rank
    };
    Echelon rref() {
        Echelon e;
        long row = 0;
        for (long col = 0; col < cols_ && row < rows_; ++col) {
            long pr = -1;
            for (long r = row; r < rows_; ++r)
                if (!at(r, col).is_zero()) { pr = r; break; }
            if (pr < 0) continue;
            if (pr != row)
                for (long j = 0; j < cols_; ++j) std::swap(at(row, j), at(pr, j));
            Cyclotomic inv = at(row, col).inverse();
            for (long j = col; j < cols_; ++j)
                if (!at(row, j).is_zero()) at(row, j) *= inv;
            for (long r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                Cyclotomic f = at(r, col);
                for (long j = col; j < cols_; ++j) {
                    if (at(row, j).is_zero()) continue;
                    at(r, j) -= f * at(row, j);
                }
            }
            e.pivot_cols.push_back(col);
            ++row;
        }
        e.rank = row;
        return e;
    }

    long rank() const {
        CycMatrix tmp = *this;
        return tmp.rref().rank;
    }

    /*
     * Kernel basis with the fixed emission convention: one vector per free
     * column, free columns visited in increasing order, each vector scaled
     * so its first nonzero coordinate is 1.
     */
    std::vector<CycVec> kernel_basis() const {
        CycMatrix r = *this;
        Echelon e = r.rref();
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (long c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
        std::vector<CycVec> basis;
        for (long f = 0; f < cols_; ++f) {
            if (is_pivot[static_cast<std::size_t>(f)]) continue;
            CycVec v(static_cast<std::size_t>(cols_), Cyclotomic(n_));
            v[static_cast<std::size_t>(f)] = Cyclotomic::one(n_);
            for (long pr = 0; pr < e.rank; ++pr)
                v[static_cast<std::size_t>(e.pivot_cols[pr])] = -r.at(pr, f);
            for (long i = 0; i < cols_; ++i) {
                if (v[static_cast<std::size_t>(i)].is_zero()) continue;
                Cyclotomic lead_inv = v[static_cast<std::size_t>(i)].inverse();
                for (long j = i; j < cols_; ++j)
                    if (!v[static_cast<std::size_t>(j)].is_zero())
                        v[static_cast<std::size_t>(j)] *= lead_inv;
                break;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Cyclotomic determinant() const {
        if (!is_square()) throw InputError("determinant of non-square matrix");
        CycMatrix m = *this;
        Cyclotomic det = Cyclotomic::one(n_);
        long sign = 1;
        for (long col = 0; col < cols_; ++col) {
            long pr = -1;
            for (long r = col; r < rows_; ++r)
                if (!m.at(r, col).is_zero()) { pr = r; break; }
            if (pr < 0) return Cyclotomic::zero(n_);
            if (pr != col) {
                for (long j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pr, j));
                sign = -sign;
            }
            det *= m.at(col, col);
            Cyclotomic inv = m.at(col, col).inverse();
            for (long r = col + 1; r < rows_; ++r) {
                if (m.at(r, col).is_zero()) continue;
                Cyclotomic f = m.at(r, col) * inv;
                for (long j = col; j < cols_; ++j) {
                    if (m.at(col, j).is_zero()) continue;
                    m.at(r, j) -= f * m.at(col, j);
                }
            }
        }
        if (sign < 0) det = -det;
        return det;
    }

    CycMatrix inverse() const {
        if (!is_square()) throw InputError("inverse of non-square matrix");
        if (rows_ == 0) return *this;
        CycMatrix aug(n_, rows_, 2 * cols_);
        for (long i = 0; i < rows_; ++i) {
            for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = Cyclotomic::one(n_);
        }
        Echelon e = aug.rref();
        if (e.rank < rows_ || e.pivot_cols.back() >= cols_)
            throw InputError("matrix is singular");
        CycMatrix inv(n_, rows_, cols_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

    bool is_scalar() const {
        if (!is_square() || rows_ == 0) return false;
        const Cyclotomic& d = at(0, 0);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) {
                if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return false;
            }
        return true;
    }

    // total order compatible with equality; the canonical cyclotomic
    // representation makes this a plain lexicographic compare
    friend bool operator<(const CycMatrix& a, const CycMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            if (a.data_[i] != b.data_[i]) return a.data_[i] < b.data_[i];
        }
        return false;
    }

  private:
    void check_same_shape(const CycMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || n_ != o.n_)
            throw InputError("matrix shape or conductor mismatch");
    }

    long n_;
    long rows_, cols_;
    std::vector<Cyclotomic> data_;
};

// index of the single unit entry when v is a standard coordinate vector,
// -1 otherwise
inline long coordinate_index(const CycVec& v) {
    long idx = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (idx >= 0 || !v[i].is_one()) return -1;
        idx = static_cast<long>(i);
    }
    return idx;
}

// all-coordinate spans can skip elimination entirely; the sorted unique
// index set is exactly the RREF row set
inline bool coordinate_indices(const std::vector<CycVec>& vectors,
                               std::vector<long>& out) {
    out.clear();
    for (const auto& v : vectors) {
        long idx = coordinate_index(v);
        if (idx < 0) return false;
        out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return true;
}

inline std::vector<CycVec> coordinate_basis(long conductor, long dim,
                                            const std::vector<long>& indices) {
    std::vector<CycVec> basis;
    for (long idx : indices) {
        CycVec v(static_cast<std::size_t>(dim), Cyclotomic(conductor));
        v[static_cast<std::size_t>(idx)] = Cyclotomic::one(conductor);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Canonical basis of the span of the given vectors: RREF rows of the matrix
// whose rows are the inputs. Deterministic and order-insensitive.
inline std::vector<CycVec> canonical_span(long conductor, long dim,
                                          const std::vector<CycVec>& vectors) {
    if (vectors.empty()) return {};
    std::vector<long> idx;
    if (coordinate_indices(vectors, idx)) return coordinate_basis(conductor, dim, idx);
    CycMatrix m(conductor, static_cast<long>(vectors.size()), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<long>(vectors[i].size()) != dim)
            throw InputError("vector length mismatch in span");
        for (long j = 0; j < dim; ++j) m.at(static_cast<long>(i), j) = vectors[i][j];
    }
    auto e = m.rref();
    std::vector<CycVec> basis;
    for (long r = 0; r < e.rank; ++r) {
        CycVec v(static_cast<std::size_t>(dim), Cyclotomic(conductor));
        for (long j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] = m.at(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Intersection of subspaces given by spanning sets; solves A x = B y via the
// kernel of [A | -B] and canonicalizes the result.
inline std::vector<CycVec> intersect_subspaces(long conductor, long dim,
                                               const std::vector<std::vector<CycVec>>& bases) {
    if (bases.empty()) throw InputError("intersect_subspaces needs at least one subspace");
    std::vector<CycVec> acc = canonical_span(conductor, dim, bases[0]);
    for (std::size_t b = 1; b < bases.size(); ++b) {
        std::vector<CycVec> other = canonical_span(conductor, dim, bases[b]);
        if (acc.empty() || other.empty()) return {};
        std::vector<long> ia, ib;
        if (coordinate_indices(acc, ia) && coordinate_indices(other, ib)) {
            std::vector<long> common;
            std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                                  std::back_inserter(common));
            acc = coordinate_basis(conductor, dim, common);
            if (acc.empty()) return {};
            continue;
        }
        long k1 = static_cast<long>(acc.size()), k2 = static_cast<long>(other.size());
        CycMatrix m(conductor, dim, k1 + k2);
        for (long j = 0; j < k1; ++j)
            for (long i = 0; i < dim; ++i) m.at(i, j) = acc[j][i];
        for (long j = 0; j < k2; ++j)
            for (long i = 0; i < dim; ++i) m.at(i, k1 + j) = -other[j][i];
        std::vector<CycVec> combos;
        for (const CycVec& w : m.kernel_basis()) {
            CycVec v(static_cast<std::size_t>(dim), Cyclotomic(conductor));
            for (long j = 0; j < k1; ++j) {
                if (w[static_cast<std::size_t>(j)].is_zero()) continue;
                for (long i = 0; i < dim; ++i) {
                    if (acc[j][i].is_zero()) continue;
                    v[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(j)] * acc[j][i];
                }
            }
            combos.push_back(std::move(v));
        }
        acc = canonical_span(conductor, dim, combos);
    }
    return acc;
}

}  // namespace orb
