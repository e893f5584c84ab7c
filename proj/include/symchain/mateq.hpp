#pragma once

/* Builder for simultaneous linear matrix equations over one backend:
 * each block is  sum_t A_t * X_{u_t} * B_t = C  for matrix unknowns X_u,
 * plus optional scalar entry constraints.  Solving is exact; nullopt means
 * certified unsolvable. */

#include "symchain/matrix.hpp"

#include <optional>
#include <vector>

namespace symchain {

class MatEqBuilder {
  public:
    explicit MatEqBuilder(CoefficientSpec spec) : spec_(spec) {}

    std::size_t add_unknown(std::size_t rows, std::size_t cols);

    struct Term {
        Matrix left;
        std::size_t unknown;
        Matrix right;
    };
    void add_equation(const std::vector<Term>& terms, const Matrix& rhs);

    struct EntryRef {
        std::size_t unknown, row, col;
        Rational coef;
    };
    void add_entry_equation(const std::vector<EntryRef>& refs, const Rational& rhs);

    std::optional<std::vector<Matrix>> solve_all() const;

  private:
    struct Shape {
        std::size_t rows, cols, offset;
    };
    CoefficientSpec spec_;
    std::vector<Shape> unknowns_;
    std::size_t total_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
};

}  // namespace symchain
