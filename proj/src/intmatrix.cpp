#include "acampo/intmatrix.hpp"

#include <stdexcept>

#include "acampo/errors.hpp"

namespace acampo {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
}

IntMatrix IntMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::ShapeError, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = BigInt(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::ShapeError, "matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeError, "matrix sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const BigInt& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const BigInt& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw Error(ErrorKind::ShapeError, "determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return BigInt(1);
    IntMatrix m = *this;
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k).is_zero()) ++p;
            if (p == n) return BigInt(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    BigInt d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::size_t IntMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return smith_normal_form(*this).num_nonzero();
}

std::vector<std::vector<long long>> IntMatrix::to_int_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_int64();
    return out;
}

std::vector<BigInt> SmithForm::invariant_factors() const {
    std::size_t n = std::min(D.rows(), D.cols());
    std::vector<BigInt> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(D.at(i, i));
    return out;
}

std::size_t SmithForm::num_nonzero() const {
    std::size_t c = 0;
    for (const auto& d : invariant_factors())
        if (!d.is_zero()) ++c;
    return c;
}

namespace {

// Pivot choice: smallest nonzero |entry| in the trailing submatrix,
// ties broken by lowest (row, col). Fixed rule keeps snapshots stable.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const BigInt& v = m.at(i, j);
            if (v.is_zero()) continue;
            BigInt a = v.abs();
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    SmithForm sf;
    sf.U = IntMatrix::identity(A.rows());
    sf.V = IntMatrix::identity(A.cols());
    sf.D = A;
    IntMatrix& M = sf.D;
    IntMatrix& U = sf.U;
    IntMatrix& V = sf.V;

    std::size_t n = std::min(A.rows(), A.cols());
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(M, t, pi, pj)) break;
        M.swap_rows(t, pi);
        U.swap_rows(t, pi);
        M.swap_cols(t, pj);
        V.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            // clear column t below/above via division with remainder
            for (std::size_t i = t + 1; i < M.rows(); ++i) {
                if (M.at(i, t).is_zero()) continue;
                BigInt q = M.at(i, t) / M.at(t, t);
                M.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (!M.at(i, t).is_zero()) {
                    // remainder strictly smaller than pivot: promote it
                    M.swap_rows(t, i);
                    U.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < M.cols(); ++j) {
                if (M.at(t, j).is_zero()) continue;
                BigInt q = M.at(t, j) / M.at(t, t);
                M.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (!M.at(t, j).is_zero()) {
                    M.swap_cols(t, j);
                    V.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // pivot must divide the whole trailing block for the chain to hold
            bool fixed = false;
            for (std::size_t i = t + 1; i < M.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < M.cols() && !fixed; ++j) {
                    if ((M.at(i, j) % M.at(t, t)).is_zero()) continue;
                    M.add_row_multiple(t, i, BigInt(1));
                    U.add_row_multiple(t, i, BigInt(1));
                    fixed = true;
                }
            if (!fixed) break;
        }
        if (M.at(t, t).is_negative()) {
            M.negate_row(t);
            U.negate_row(t);
        }
    }
    return sf;
}

IntMatrix integer_kernel_basis(const IntMatrix& A) {
    if (A.cols() == 0) return IntMatrix(0, 0);
    if (A.rows() == 0) return IntMatrix::identity(A.cols());
    SmithForm sf = smith_normal_form(A);
    std::size_t r = sf.num_nonzero();
    std::size_t dim = A.cols() - r;
    IntMatrix basis(dim, A.cols());
    // x = V y with y supported on the zero-diagonal coordinates
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < A.cols(); ++i)
            basis.at(k, i) = sf.V.at(i, r + k);
    return basis;
}

bool row_lattice_contains(const IntMatrix& B, const std::vector<BigInt>& v) {
    if (v.size() != B.cols()) throw Error(ErrorKind::ShapeError, "vector length mismatch");
    if (B.rows() == 0) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    // x B = v solvable over Z iff (v V) clears the Smith diagonal of B
    SmithForm sf = smith_normal_form(B);
    std::size_t m = B.cols();
    std::vector<BigInt> w(m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) w[j] += v[i] * sf.V.at(i, j);
    std::size_t diag = std::min(B.rows(), m);
    for (std::size_t j = 0; j < m; ++j) {
        if (j < diag && !sf.D.at(j, j).is_zero()) {
            if (!(w[j] % sf.D.at(j, j)).is_zero()) return false;
        } else if (!w[j].is_zero()) {
            return false;
        }
    }
    return true;
}

bool same_row_lattice(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.cols()) return false;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::vector<BigInt> row(A.cols());
        for (std::size_t j = 0; j < A.cols(); ++j) row[j] = A.at(i, j);
        if (!row_lattice_contains(B, row)) return false;
    }
    for (std::size_t i = 0; i < B.rows(); ++i) {
        std::vector<BigInt> row(B.cols());
        for (std::size_t j = 0; j < B.cols(); ++j) row[j] = B.at(i, j);
        if (!row_lattice_contains(A, row)) return false;
    }
    return true;
}

IntMatrix saturate_rows(const IntMatrix& A) {
    // double orthogonal: saturation = ker(ker(A-row-space))
    return integer_kernel_basis(integer_kernel_basis(A));
}

FinAbPresentation FinAbPresentation::from_relations(std::size_t ambient_rank, const IntMatrix& relations) {
    if (relations.rows() > 0 && relations.cols() != ambient_rank)
        throw Error(ErrorKind::ShapeError, "relation matrix width must equal ambient rank");
    FinAbPresentation p;
    p.ambient_rank = ambient_rank;
    p.relation_matrix = relations;
    std::vector<BigInt> nontrivial;
    std::size_t nz = 0;
    if (relations.rows() > 0) {
        SmithForm sf = smith_normal_form(relations);
        for (const auto& d : sf.invariant_factors()) {
            if (d.is_zero()) continue;
            ++nz;
            if (!(d == BigInt(1))) nontrivial.push_back(d);
        }
    }
    p.invariant_factors = std::move(nontrivial);
    for (std::size_t i = nz; i < ambient_rank; ++i) p.invariant_factors.push_back(BigInt(0));
    return p;
}

std::size_t FinAbPresentation::free_rank() const {
    std::size_t r = 0;
    for (const auto& d : invariant_factors)
        if (d.is_zero()) ++r;
    return r;
}

BigInt FinAbPresentation::order() const {
    if (!is_finite()) throw Error(ErrorKind::ShapeError, "group is infinite");
    BigInt o(1);
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

}  // namespace acampo
