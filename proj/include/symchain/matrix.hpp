#pragma once

/* Dense exact matrices over one coefficient backend, plus the elimination
 * kernels everything else is built on: rref with a tracked transform (fields),
 * Smith normal form with all four transforms (Z), kernel bases, certified
 * linear solving, inversion and lattice/column-space bases.  0 x n and n x 0
 * matrices are first-class throughout.
 */

#include "symchain/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace symchain {

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Matrix {
  public:
    Matrix() = default;
    Matrix(CoefficientSpec spec, std::size_t rows, std::size_t cols)
        : spec_(spec), rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix zero(CoefficientSpec spec, std::size_t rows, std::size_t cols) {
        return Matrix(spec, rows, cols);
    }
    static Matrix identity(CoefficientSpec spec, std::size_t n);
    /* Convenience for tests/fixtures: build from integer literals. */
    static Matrix from_int_rows(CoefficientSpec spec, const std::vector<std::vector<long>>& rows);

    const CoefficientSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v) {
        a_[i * cols_ + j] = canonical_value(spec_, v);
    }
    Scalar entry(std::size_t i, std::size_t j) const {
        Scalar s; s.spec = spec_; s.value = at(i, j);
        return s;
    }

    bool is_zero() const;
    bool operator==(const Matrix&) const = default;

    /* Unchecked raw access for the elimination kernels (values stay canonical). */
    Rational& raw(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  private:
    CoefficientSpec spec_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& m);
Matrix scale(const Scalar& c, const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix submatrix(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
Matrix column(const Matrix& m, std::size_t j);
/* Kronecker product; vec/unvec use column-major stacking so that
 * vec(P x Q) = kron(transpose(Q), P) * vec(x). */
Matrix kron(const Matrix& a, const Matrix& b);
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

struct RrefResult {
    Matrix R;                         // reduced row echelon form
    Matrix T;                         // invertible, T * A = R
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/* Fields only; throws MathError over Z. */
RrefResult rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/* Columns form a basis of ker(a).  Over fields a vector-space basis; over Z a
 * basis of the kernel lattice (saturated: a direct summand of Z^cols). */
Matrix kernel_basis(const Matrix& a);

/* Solve a * X = b exactly.  nullopt means certified unsolvable (over Z via the
 * Smith form divisibility argument, over fields via rank).  Free coordinates
 * are set to zero, so the result is deterministic. */
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

struct SnfResult {
    Matrix U, Uinv;  // unimodular, U * Uinv = I
    Matrix D;        // diagonal, nonnegative, d_i | d_{i+1}
    Matrix V, Vinv;
};

/* Integer backend only.  Postcondition U*A*V == D is checked internally. */
SnfResult smith_normal_form(const Matrix& a);

/* Square inverse; over Z only unimodular matrices are invertible. */
std::optional<Matrix> inverse(const Matrix& a);

/* Basis for the span of the columns: subspace basis over fields, lattice basis
 * over Z (same column span as a sublattice of Z^rows). */
Matrix column_space_basis(const Matrix& a);

}  // namespace symchain
