#pragma once

// The symmetry 2-group of a chain complex.
//
// pi0 is the group of homotopy classes of self-equivalences: the unit group
// of the monoid H_0(End A) under composition.  pi1 is the abelian group
// H_0(Hom(A, A[1])) of homotopy classes of chain maps A -> A[1] (these are
// the 2-cells on the identity), with vertical composition = addition.  pi0
// acts on pi1 by [f] act [g] = [f*[1] . g . f] for a quasi-inverse f* of f.
//
// For canonical split complexes everything collapses onto homology: pi0 is
// the product of Aut(H_k), pi1 the product of Hom(H_k, H_{k+1}), the action
// is degreewise conjugation, and the extension of pi0 by pi1 is trivial
// (both canonical sections of the projection are multiplicative on the
// nose).  This header provides the generic computations, the split-path
// computations, and the comparison report between the two.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symchain/blocks.hpp"
#include "symchain/hom_complex.hpp"
#include "symchain/two_category.hpp"

namespace symchain {

// Status of a computation that refuses rather than guesses.
enum class AnalysisStatus { ok, unresolved, not_applicable };
std::string to_string(AnalysisStatus s);

// Outcome of a verification check.
enum class CheckOutcome { pass, fail, not_applicable, unresolved };
std::string to_string(CheckOutcome c);

struct EnumLimits {
    Int max_classes = 4096;   // cap on explicitly enumerated class sets
    Int max_pairs = 65536;    // cap on pairwise checks; above it, sample
    std::uint64_t seed = 1;   // deterministic sampling seed
};

// A finite group presented by an explicit multiplication table.
struct GroupTable {
    std::vector<std::string> keys;               // canonical element keys
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> mult;  // mult[i][j] = index of e_i * e_j
    std::vector<std::size_t> inverse;

    std::size_t order() const { return keys.size(); }
    bool is_abelian() const;
};

// Check the table data itself: closure shape, identity, inverses, associativity.
bool valid_group_table(const GroupTable& t);

// Canonical printable key for an integer coordinate column.
std::string coord_key(const Matrix& y);

// H_0(Hom(A, A[n])) with exact class arithmetic; n = 0 gives endomorphism
// classes, n >= 1 the higher symmetry groups.
class HomClasses {
  public:
    HomClasses(const ChainComplex& a, int n);

    int shift() const { return n_; }
    const ChainComplex& source() const { return hc_.dom(); }
    const ChainComplex& target() const { return hc_.cod(); }
    const HomComplexData& hom_data() const { return hc_; }
    const HomologyData& h0_data() const { return h0_; }

    const CoeffObject& group() const { return h0_.quotient; }
    bool finite() const { return h0_.quotient.is_finite(); }
    Int class_count() const { return h0_.quotient.element_count(); }

    // Class coordinates of a chain map A -> A[n]; exact.
    Matrix class_of(const ChainMap& f) const;
    // Cycle representative of a class (canonical choice).
    ChainMap rep_of(const Matrix& y) const;
    // One representative per canonical generator of group().
    std::vector<ChainMap> generator_reps() const;
    // All class coordinate columns, deterministic order.  Throws MathError
    // if infinite or beyond the budget.
    std::vector<Matrix> enumerate(const Int& budget) const;

  private:
    int n_;
    HomComplexData hc_;
    HomologyData h0_;
};

// The unit group of the composition monoid on H_0(End A), found by exhaustive
// pairing of classes against the identity class.  status != ok when the class
// set is infinite or larger than the budget.
struct UnitGroup {
    AnalysisStatus status = AnalysisStatus::ok;
    std::string note;
    GroupTable table;
    std::vector<Matrix> coords;   // class coordinates, aligned with table
    std::vector<ChainMap> reps;   // cycle representatives, aligned with table

    // Index of the class with the given coordinates; throws MathError if the
    // class is not a unit.
    std::size_t index_of(const Matrix& y) const;
};

UnitGroup unit_group(const HomClasses& end_classes, const EnumLimits& lim = {});

// The additive group of H_0(Hom(A, A[n])) as an explicit table (same budget
// discipline; the group object itself is always available via HomClasses).
struct AdditiveClasses {
    AnalysisStatus status = AnalysisStatus::ok;
    std::string note;
    GroupTable table;
    std::vector<Matrix> coords;
    std::vector<ChainMap> reps;

    std::size_t index_of(const Matrix& y) const;
};

AdditiveClasses additive_classes(const HomClasses& cls, const EnumLimits& lim = {});

// [f] act [g] = [f_inv[1] . g . f] where f_inv represents the inverse class.
Matrix act_on_class(const HomClasses& shift_classes, const ChainMap& f, const ChainMap& f_inv,
                    const ChainMap& g);

// Full action table: entry [i][j] = pi1 index of (pi0 element i act pi1
// element j).  Requires both tables resolved.
std::vector<std::vector<std::size_t>> action_table(const HomClasses& shift_classes,
                                                   const UnitGroup& pi0, const AdditiveClasses& pi1);

/* ---- homology-level invariants (any complex) ----------------------------- */

// H_lo .. H_hi of a.
std::vector<CoeffObject> homology_objects(const ChainComplex& a);

// H_k(f) for f : a -> a, all k in the window, in a's homology coordinates.
std::vector<ModuleMap> homology_action(const ChainMap& f);

// H_k -> H_{k+1} induced by g : a -> a[1], all k in the window.
std::vector<ModuleMap> homology_shift_action(const ChainMap& g);

/* ---- split path ----------------------------------------------------------- */

struct SplitSymmetry {
    SplitData data;                  // canonical form with conjugating isomorphisms
    std::vector<CoeffObject> h;      // H_lo .. H_hi (slot-1 objects of the shape)
    std::vector<HomGroup> hom_next;  // Hom(H_k, H_{k+1}) for k = lo .. hi
    AutCount pi0_count;              // product of |Aut(H_k)|
    bool pi1_finite = false;
    Int pi1_order = 0;
};

// nullopt when a does not split.
std::optional<SplitSymmetry> split_symmetry(const ChainComplex& a, const Int& aut_budget = Int(1) << 20);

// Blocks of f (an endomorphism of a) after conjugation to the canonical form.
EndoBlocks endo_blocks_of(const SplitSymmetry& s, const ChainMap& f);
// The homology block psi = (H_k-component) of f; this is the value of the
// projection H_0(End A) -> prod End(H_k).
std::vector<ModuleMap> psi_of(const SplitSymmetry& s, const ChainMap& f);
// The homology block xi of g : a -> a[1]; value of H_0(Hom(A, A[1])) ->
// prod Hom(H_k, H_{k+1}).
std::vector<ModuleMap> xi_of(const SplitSymmetry& s, const ChainMap& g);

// All automorphism tuples (psi_k) / all hom tuples (xi_k); deterministic
// order.  Throws MathError when infinite or beyond budget.
std::vector<std::vector<ModuleMap>> enumerate_psi_tuples(const SplitSymmetry& s, const Int& budget);
std::vector<std::vector<ModuleMap>> enumerate_xi_tuples(const SplitSymmetry& s, const Int& budget);

// Degreewise conjugation (psi act xi)_k = psi_{k+1}^{-1} . xi_k . psi_k.
std::vector<ModuleMap> conj_action(const SplitSymmetry& s, const std::vector<ModuleMap>& psi,
                                   const std::vector<ModuleMap>& xi);

// The two canonical sections of the projection onto psi-blocks:
// s1(psi) = (id, psi, 0, 0, 0) lands in automorphisms,
// s0(psi) = (0, psi, 0, 0, 0) in non-strictly invertible self-equivalences.
// Both are multiplicative on the nose.
EndoBlocks section_s1(const SplitShape& sh, const std::vector<ModuleMap>& psi);
EndoBlocks section_s0(const SplitShape& sh, const std::vector<ModuleMap>& psi);

// The canonical representative f_psi = s1(psi) assembled on the shape.
ChainMap functor_object(const SplitShape& sh, const std::vector<ModuleMap>& psi);
// The 2-cell F(xi, psi) : f_psi => f_psi whose witness has middle block
// psi_{k+1} . xi_k and zeros elsewhere.
TwoCell functor_cell(const SplitShape& sh, const std::vector<ModuleMap>& xi,
                     const std::vector<ModuleMap>& psi);
// The canonical 2-cell iota_f : f => f_psi(f) (identity cell when f = f_psi).
TwoCell iota_cell(const SplitShape& sh, const EndoBlocks& f);

struct PostnikovWitness {
    CheckOutcome outcome = CheckOutcome::unresolved;
    std::string note;
    std::size_t pairs_checked = 0;
};

// Certifies triviality of the pi0-by-pi1 extension for split complexes by
// verifying both sections multiplicative on all (or budget-sampled) pairs.
PostnikovWitness postnikov_witness(const ChainComplex& a, const EnumLimits& lim = {});

/* ---- reports --------------------------------------------------------------- */

struct GroupInfo {
    AnalysisStatus status = AnalysisStatus::ok;
    std::string note;
    bool finite = false;
    Int order = 0;            // meaningful when finite
    std::string description;  // canonical structure / factor description
};

// Size and description of H_0(Hom(A, A[n])) (n >= 1).
GroupInfo pin_info(const ChainComplex& a, int n);

struct TheoremReport {
    bool split = false;
    GroupInfo pi0_generic, pi1_generic;
    GroupInfo pi0_split, pi1_split;  // meaningful when split
    CheckOutcome pi0_match = CheckOutcome::unresolved;
    CheckOutcome pi1_match = CheckOutcome::unresolved;
    CheckOutcome action_match = CheckOutcome::unresolved;
    std::size_t action_pairs_checked = 0;
    PostnikovWitness postnikov;
    CheckOutcome theorem = CheckOutcome::unresolved;
    std::vector<std::string> notes;
};

// Compare the split-path description (product of Aut(H_k), product of
// Hom(H_k, H_{k+1}), conjugation action, trivial extension) against the
// generic path on one complex.
TheoremReport theorem_verify(const ChainComplex& a, const EnumLimits& lim = {});

}  // namespace symchain
