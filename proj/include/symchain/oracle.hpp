#pragma once

// Brute-force ground truth over finite prime fields.
//
// Everything here is built directly from the commuting-square and
// homotopy-boundary linear systems on raw stacked matrix entries — not from
// the canonicalized mapping complex — so counts and class partitions obtained
// here independently validate the algebraic path.  Enumeration iterates over
// kernel bases of the constraint systems (never raw entry space) and refuses,
// rather than truncates, when a solution-space dimension exceeds the budget.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symchain/symmetry.hpp"
#include "symchain/two_category.hpp"

namespace symchain {

struct EnumerationBudget {
    // Largest solution-space dimension that will be enumerated; 0 picks the
    // backend default (14 over F_2, 9 over F_3, p^dim <= 2^14 otherwise).
    std::size_t max_dim_override = 0;
    // Cap on the object count of the concrete 2-group.
    Int max_objects = 4096;

    std::size_t max_dim(const CoefficientSpec& spec) const;
};

struct BudgetExceeded : MathError {
    using MathError::MathError;
};

// All F_p-points of the chain-map space A -> B; count = p^(kernel dimension
// of the commuting-square system).  Deterministic order (kernel-coefficient
// mixed radix).  Throws BudgetExceeded / invalid_argument on a non-prime-field
// backend.
std::vector<ChainMap> enumerate_chain_maps(const ChainComplex& a, const ChainComplex& b,
                                           const EnumerationBudget& budget = {});

// Homotopy-class partition of all chain maps A -> B.  Classes are cosets of
// the boundary space {d.h + h.d}; the canonical class key is the coset
// reduction of the stacked entry vector against a column echelon basis.
struct MapClasses {
    std::vector<ChainMap> maps;
    std::vector<std::size_t> class_of_map;   // map index -> class index
    std::vector<std::size_t> class_rep;      // class index -> index of its representative
    std::vector<std::string> class_keys;     // canonical reduced-coordinate keys

    std::size_t class_count() const { return class_rep.size(); }
};

MapClasses enumerate_classes(const ChainComplex& a, const ChainComplex& b,
                             const EnumerationBudget& budget = {});

// A 2-cell of the concrete 2-group: a homotopy class of homotopies between
// two enumerated self-equivalences, stored as the coset-reduced stacked
// entry vector of a degree-1 witness.
struct OracleCell {
    std::size_t src = 0, dst = 0;  // object indices
    Matrix h;                      // reduced stacked coordinates (canonical)
};

// The symmetry 2-group of A realized concretely: objects are all enumerated
// self-equivalences (maps in unit classes, serialized-matrix lexicographic
// order), hom-sets are homotopy classes of connecting homotopies, tensor is
// composition of maps / variant-A horizontal composition of cells.
class ConcreteTwoGroup {
  public:
    const ChainComplex& complex() const { return a_; }
    const std::vector<ChainMap>& objects() const { return objects_; }
    std::size_t unit_object() const { return unit_; }

    std::size_t object_index(const ChainMap& f) const;
    std::size_t tensor(std::size_t i, std::size_t j) const;  // [i] compose [j]

    // components (homotopy classes of objects)
    std::size_t component_of(std::size_t i) const { return comp_of_[i]; }
    std::size_t component_count() const { return comp_count_; }
    std::size_t component_rep(std::size_t c) const;  // an object in component c

    OracleCell identity_cell_at(std::size_t i) const;
    std::vector<OracleCell> cells_between(std::size_t i, std::size_t j) const;
    bool cells_equal(const OracleCell& x, const OracleCell& y) const;

    OracleCell vcompose_cells(const OracleCell& b, const OracleCell& a) const;
    OracleCell vinverse_cell(const OracleCell& c) const;
    // left tensor right, variant-A witness
    OracleCell tensor_cells(const OracleCell& left, const OracleCell& right) const;
    OracleCell whisker_object_cell(std::size_t i, const OracleCell& c) const;
    OracleCell whisker_cell_object(const OracleCell& c, std::size_t i) const;

    // reconstruct an actual homotopy witness from a cell (for external checks)
    Homotopy cell_witness(const OracleCell& c) const;
    TwoCell cell_as_two_cell(const OracleCell& c) const;

    friend ConcreteTwoGroup build_equiv_2group(const ChainComplex& a, const EnumerationBudget& budget);

  private:
    ChainComplex a_;
    EnumerationBudget budget_;
    std::vector<ChainMap> objects_;
    std::vector<std::string> object_keys_;  // aligned, sorted
    std::size_t unit_ = 0;
    std::vector<std::size_t> comp_of_;
    std::size_t comp_count_ = 0;
    // composition results; tensor() is pure, so cache hits are exact replays
    mutable std::unordered_map<std::uint64_t, std::size_t> tensor_cache_;
    // raw entry-space operators for degree 1 homotopies
    Matrix b1_;        // degree-1 entries -> degree-0 entries, h |-> d.h + h.d
    Matrix b1_kernel_; // kernel basis of b1_
    Matrix e2_;        // column echelon basis of the degree-2 boundary image
    std::vector<std::size_t> h_offsets_;  // stacked layout of degree-1 components

    Matrix reduce_cell(const Matrix& v) const;
    Matrix vec_map(const ChainMap& f) const;
};

ConcreteTwoGroup build_equiv_2group(const ChainComplex& a, const EnumerationBudget& budget = {});

/* ---- cross-check report ------------------------------------------------------ */

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CrossCheckReport {
    AnalysisStatus status = AnalysisStatus::ok;  // unresolved when budgets refuse
    std::string note;
    std::vector<CheckItem> checks;

    Int map_count = 0;        // |chain maps A -> A|
    Int end_class_count = 0;  // |H0(End A)| by enumeration
    Int pi0_order = 0;        // unit classes by enumeration
    Int pi1_order = 0;        // |H0(Hom(A, A[1]))| by enumeration

    bool all_pass() const;
};

// Compare every oracle-computable invariant of A against the algebraic path:
// class counts, unit group, pi1, the action, and (when A splits) the
// homology-level formulas.
CrossCheckReport cross_check(const ChainComplex& a, const EnumerationBudget& budget = {},
                             const EnumLimits& lim = {});

}  // namespace symchain
