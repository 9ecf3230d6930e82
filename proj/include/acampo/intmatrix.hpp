#pragma once

#include <cstddef>
#include <vector>

#include "acampo/bigint.hpp"

namespace acampo {

// Dense integer matrix over BigInt, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const BigInt& c);
    // col_i += c * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const BigInt& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    // Fraction-free Gaussian elimination (Bareiss); square matrices only.
    BigInt determinant() const;

    // Rank over Q (via Smith normal form of a copy).
    std::size_t rank() const;

    std::vector<std::vector<long long>> to_int_rows() const;  // throws on overflow

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_k >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::vector<BigInt> invariant_factors() const;  // diagonal of D, zeros included
    std::size_t num_nonzero() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

// Basis of { x : A x = 0 } as rows; saturated (primitive) in Z^cols.
IntMatrix integer_kernel_basis(const IntMatrix& A);

// Is the row vector v in the lattice spanned by the rows of B?
bool row_lattice_contains(const IntMatrix& B, const std::vector<BigInt>& v);

// Do A and B span the same lattice (as subsets of Z^cols)?
bool same_row_lattice(const IntMatrix& A, const IntMatrix& B);

// Saturation of the row lattice: (Q-span of rows) intersected with Z^cols.
IntMatrix saturate_rows(const IntMatrix& A);

// Finitely presented abelian group Z^ambient_rank / row-span(relation_matrix).
struct FinAbPresentation {
    std::size_t ambient_rank = 0;
    IntMatrix relation_matrix;               // rows are relations
    std::vector<BigInt> invariant_factors;   // nontrivial d_i first, then one 0 per free rank

    static FinAbPresentation from_relations(std::size_t ambient_rank, const IntMatrix& relations);
    std::size_t free_rank() const;
    bool is_finite() const { return free_rank() == 0; }
    BigInt order() const;  // throws if infinite
};

}  // namespace acampo
