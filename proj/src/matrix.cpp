#include "symchain/matrix.hpp"

#include <algorithm>

namespace symchain {

Matrix Matrix::identity(CoefficientSpec spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

Matrix Matrix::from_int_rows(CoefficientSpec spec, const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(spec, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(rows[i][j]));
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v == 0; });
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
    require_same_backend(a.spec(), b.spec());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix shapes differ: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.spec(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.raw(i, j) = raw_add(a.spec(), a.at(i, j), b.at(i, j));
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.spec(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.raw(i, j) = raw_sub(a.spec(), a.at(i, j), b.at(i, j));
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_backend(a.spec(), b.spec());
    if (a.cols() != b.rows())
        throw ShapeError("inner dimensions differ: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    Matrix r(a.spec(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                r.raw(i, j) = raw_add(a.spec(), r.at(i, j), raw_mul(a.spec(), a.at(i, k), b.at(k, j)));
            }
        }
    return r;
}

Matrix operator-(const Matrix& m) {
    Matrix r(m.spec(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.raw(i, j) = raw_neg(m.spec(), m.at(i, j));
    return r;
}

Matrix scale(const Scalar& c, const Matrix& m) {
    require_same_backend(c.spec, m.spec());
    Matrix r(m.spec(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.raw(i, j) = raw_mul(m.spec(), c.value, m.at(i, j));
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix r(m.spec(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.raw(j, i) = m.at(i, j);
    return r;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    require_same_backend(a.spec(), b.spec());
    if (a.rows() != b.rows()) throw ShapeError("hcat: row counts differ");
    Matrix r(a.spec(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.raw(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.raw(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
    require_same_backend(a.spec(), b.spec());
    if (a.cols() != b.cols()) throw ShapeError("vcat: column counts differ");
    Matrix r(a.spec(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.raw(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.raw(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

Matrix submatrix(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    if (r0 + nr > m.rows() || c0 + nc > m.cols()) throw ShapeError("submatrix out of range");
    Matrix r(m.spec(), nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.raw(i, j) = m.at(r0 + i, c0 + j);
    return r;
}

Matrix column(const Matrix& m, std::size_t j) { return submatrix(m, 0, j, m.rows(), 1); }

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_backend(a.spec(), b.spec());
    Matrix r(a.spec(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (a.at(i1, j1) == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r.raw(i1 * b.rows() + i2, j1 * b.cols() + j2) = raw_mul(a.spec(), a.at(i1, j1), b.at(i2, j2));
        }
    return r;
}

Matrix vec(const Matrix& m) {
    Matrix v(m.spec(), m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v.raw(j * m.rows() + i, 0) = m.at(i, j);
    return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw ShapeError("unvec: size mismatch");
    Matrix m(v.spec(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m.raw(i, j) = v.at(j * rows + i, 0);
    return m;
}

RrefResult rref(const Matrix& a) {
    if (!a.spec().is_field()) throw MathError("rref requires a field backend (use the Smith form over Z)");
    const auto spec = a.spec();
    RrefResult res{a, Matrix::identity(spec, a.rows()), {}};
    Matrix& R = res.R;
    Matrix& T = res.T;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && R.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(R.raw(lead, j), R.raw(piv, j));
            for (std::size_t j = 0; j < a.rows(); ++j) std::swap(T.raw(lead, j), T.raw(piv, j));
        }
        Rational inv = raw_inv(spec, R.at(lead, col));
        for (std::size_t j = 0; j < a.cols(); ++j) R.raw(lead, j) = raw_mul(spec, R.at(lead, j), inv);
        for (std::size_t j = 0; j < a.rows(); ++j) T.raw(lead, j) = raw_mul(spec, T.at(lead, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || R.at(i, col) == 0) continue;
            Rational f = R.at(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                R.raw(i, j) = raw_sub(spec, R.at(i, j), raw_mul(spec, f, R.at(lead, j)));
            for (std::size_t j = 0; j < a.rows(); ++j)
                T.raw(i, j) = raw_sub(spec, T.at(i, j), raw_mul(spec, f, T.at(lead, j)));
        }
        res.pivots.push_back(col);
        ++lead;
    }
    return res;
}

/* --- Smith normal form ------------------------------------------------- */

namespace {

struct SnfWork {
    Matrix D, U, Uinv, V, Vinv;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D.raw(i, c), D.raw(j, c));
        for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U.raw(i, c), U.raw(j, c));
        for (std::size_t r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.raw(r, i), Uinv.raw(r, j));
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < D.cols(); ++c) D.raw(i, c) = -D.at(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U.raw(i, c) = -U.at(i, c);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.raw(r, i) = -Uinv.at(r, i);
    }
    /* row i += q * row j */
    void row_add(std::size_t i, std::size_t j, const Rational& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < D.cols(); ++c) D.raw(i, c) += q * D.at(j, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U.raw(i, c) += q * U.at(j, c);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.raw(r, j) -= q * Uinv.at(r, i);
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D.raw(r, i), D.raw(r, j));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V.raw(r, i), V.raw(r, j));
        for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.raw(i, c), Vinv.raw(j, c));
    }
    void col_negate(std::size_t j) {
        for (std::size_t r = 0; r < D.rows(); ++r) D.raw(r, j) = -D.at(r, j);
        for (std::size_t r = 0; r < V.rows(); ++r) V.raw(r, j) = -V.at(r, j);
        for (std::size_t c = 0; c < Vinv.cols(); ++c) Vinv.raw(j, c) = -Vinv.at(j, c);
    }
    /* col j += q * col i */
    void col_add(std::size_t j, std::size_t i, const Rational& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < D.rows(); ++r) D.raw(r, j) += q * D.at(r, i);
        for (std::size_t r = 0; r < V.rows(); ++r) V.raw(r, j) += q * V.at(r, i);
        for (std::size_t c = 0; c < Vinv.cols(); ++c) Vinv.raw(i, c) -= q * Vinv.at(j, c);
    }
};

Rational rat_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

/* Truncated integer quotient of integer-valued rationals. */
Rational int_quot(const Rational& a, const Rational& b) {
    return Rational(as_integer(a) / as_integer(b));
}

bool int_divides(const Rational& d, const Rational& v) {
    return as_integer(v) % as_integer(d) == 0;
}

}  // namespace

SnfResult smith_normal_form(const Matrix& a) {
    if (a.spec().kind != CoeffKind::Integers)
        throw MathError("smith_normal_form requires the integer backend");
    const std::size_t r = a.rows(), c = a.cols();
    SnfWork w{a, Matrix::identity(a.spec(), r), Matrix::identity(a.spec(), r),
              Matrix::identity(a.spec(), c), Matrix::identity(a.spec(), c)};

    /* minimal-|value| nonzero entry of D[t.., t..]; ties by lowest (row, col) */
    auto locate_pivot = [&w, r, c](std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        Rational best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                const Rational& v = w.D.at(i, j);
                if (v == 0) continue;
                Rational av = rat_abs(v);
                if (!found || av < best) { found = true; best = av; pi = i; pj = j; }
            }
        return found;
    };

    const std::size_t diag = std::min(r, c);
    for (std::size_t t = 0; t < diag; ++t) {
        std::size_t pi = t, pj = t;
        if (!locate_pivot(t, pi, pj)) break;

        for (;;) {
            w.row_swap(t, pi);
            w.col_swap(t, pj);
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.D.at(i, t) == 0) continue;
                w.row_add(i, t, -int_quot(w.D.at(i, t), w.D.at(t, t)));
                if (w.D.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.D.at(t, j) == 0) continue;
                w.col_add(j, t, -int_quot(w.D.at(t, j), w.D.at(t, t)));
                if (w.D.at(t, j) != 0) dirty = true;
            }
            if (!dirty) {
                /* pivot must divide the whole remaining block for the d_i | d_{i+1} chain */
                bool fixed = true;
                for (std::size_t i = t + 1; i < r && fixed; ++i)
                    for (std::size_t j = t + 1; j < c && fixed; ++j)
                        if (w.D.at(i, j) != 0 && !int_divides(w.D.at(t, t), w.D.at(i, j))) {
                            w.row_add(t, i, Rational(1));
                            fixed = false;
                        }
                if (fixed) break;
            }
            locate_pivot(t, pi, pj);
        }
        if (w.D.at(t, t) < 0) w.row_negate(t);
    }

    SnfResult res{w.U, w.Uinv, w.D, w.V, w.Vinv};
    if (!(res.U * a * res.V == res.D) || !(res.U * res.Uinv == Matrix::identity(a.spec(), r)) ||
        !(res.V * res.Vinv == Matrix::identity(a.spec(), c)))
        throw MathError("smith_normal_form: internal verification failed");
    return res;
}

std::size_t rank(const Matrix& a) {
    if (a.spec().is_field()) return rref(a).pivots.size();
    auto snf = smith_normal_form(a);
    std::size_t n = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (snf.D.at(i, i) != 0) ++n;
    return n;
}

Matrix kernel_basis(const Matrix& a) {
    if (a.spec().is_field()) {
        auto rr = rref(a);
        std::vector<std::size_t> free_cols;
        std::vector<std::size_t> pivot_of_col(a.cols(), SIZE_MAX);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) pivot_of_col[rr.pivots[i]] = i;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (pivot_of_col[j] == SIZE_MAX) free_cols.push_back(j);
        Matrix K(a.spec(), a.cols(), free_cols.size());
        for (std::size_t t = 0; t < free_cols.size(); ++t) {
            std::size_t j = free_cols[t];
            K.set(j, t, Rational(1));
            for (std::size_t i = 0; i < rr.pivots.size(); ++i)
                K.raw(rr.pivots[i], t) = raw_neg(a.spec(), rr.R.at(i, j));
        }
        return K;
    }
    auto snf = smith_normal_form(a);
    const std::size_t diag = std::min(a.rows(), a.cols());
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (j >= diag || snf.D.at(j, j) == 0) zero_cols.push_back(j);
    Matrix K(a.spec(), a.cols(), zero_cols.size());
    for (std::size_t t = 0; t < zero_cols.size(); ++t)
        for (std::size_t i = 0; i < a.cols(); ++i) K.raw(i, t) = snf.V.at(i, zero_cols[t]);
    return K;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    require_same_backend(a.spec(), b.spec());
    if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
    if (a.spec().is_field()) {
        auto rr = rref(a);
        Matrix tb = rr.T * b;
        for (std::size_t i = rr.pivots.size(); i < a.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (tb.at(i, j) != 0) return std::nullopt;
        Matrix x(a.spec(), a.cols(), b.cols());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) x.raw(rr.pivots[i], j) = tb.at(i, j);
        return x;
    }
    auto snf = smith_normal_form(a);
    Matrix ub = snf.U * b;
    const std::size_t diag = std::min(a.rows(), a.cols());
    Matrix y(a.spec(), a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational d = (i < diag) ? snf.D.at(i, i) : Rational(0);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (d == 0) {
                if (ub.at(i, j) != 0) return std::nullopt;
            } else {
                if (!int_divides(d, ub.at(i, j))) return std::nullopt;
                if (i < a.cols()) y.raw(i, j) = int_quot(ub.at(i, j), d);
            }
        }
    }
    return snf.V * y;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse: matrix not square");
    if (a.spec().is_field()) {
        auto rr = rref(a);
        if (rr.pivots.size() != a.rows()) return std::nullopt;
        return rr.T;
    }
    auto snf = smith_normal_form(a);
    if (!(snf.D == Matrix::identity(a.spec(), a.rows()))) return std::nullopt;
    return snf.V * snf.U;
}

Matrix column_space_basis(const Matrix& a) {
    if (a.spec().is_field()) {
        auto rr = rref(a);
        Matrix basis(a.spec(), a.rows(), rr.pivots.size());
        for (std::size_t t = 0; t < rr.pivots.size(); ++t)
            for (std::size_t i = 0; i < a.rows(); ++i) basis.raw(i, t) = a.at(i, rr.pivots[t]);
        return basis;
    }
    auto snf = smith_normal_form(a);
    const std::size_t diag = std::min(a.rows(), a.cols());
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < diag; ++i)
        if (snf.D.at(i, i) != 0) nz.push_back(i);
    Matrix basis(a.spec(), a.rows(), nz.size());
    for (std::size_t t = 0; t < nz.size(); ++t)
        for (std::size_t i = 0; i < a.rows(); ++i)
            basis.raw(i, t) = snf.Uinv.at(i, nz[t]) * snf.D.at(nz[t], nz[t]);
    return basis;
}

}  // namespace symchain
