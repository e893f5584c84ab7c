#pragma once

/* Coefficient objects and their maps.
 *
 * Over a field backend an object is a finite-dimensional vector space
 * described by its dimension.  Over Z it is a finitely generated abelian
 * group in canonical form: free rank plus invariant factors n_1 | n_2 | ...
 * (each >= 2).  Canonical generator order everywhere: torsion generators
 * first (in invariant-factor order), then free generators.
 *
 * A ModuleMap is a matrix on canonical generators; over Z rows indexed by a
 * torsion generator of order n are reduced into [0, n), and construction
 * rejects assignments that are not well defined (a generator of order n must
 * land in the n-torsion of the codomain).
 *
 * Subquotient is the workhorse: given a basis L of a sublattice/subspace of
 * the ambient generator space and columns W inside span(L), it computes the
 * canonical structure of span(L)/span(W) together with exact project/lift
 * maps.  Homology, hom-group canonicalization and direct-sum bookkeeping are
 * all instances of it.
 */

#include "symchain/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symchain {

struct CoeffObject {
    CoefficientSpec spec;
    std::size_t rank = 0;       // field: dimension; Z: free rank
    std::vector<Int> torsion;   // Z only; invariant factors, ascending divisibility, each >= 2

    static CoeffObject vector_space(CoefficientSpec spec, std::size_t dim);
    static CoeffObject z_module(std::size_t rank, std::vector<Int> torsion);
    static CoeffObject zero(CoefficientSpec spec);

    std::size_t gen_count() const { return rank + torsion.size(); }
    /* Order of the i-th canonical generator; 0 means free (or a field gen). */
    Int gen_order(std::size_t i) const {
        return i < torsion.size() ? torsion[i] : Int(0);
    }
    bool is_zero() const { return gen_count() == 0; }
    /* Finitely many elements? (F_p: always; Q: dim 0; Z: rank 0.) */
    bool is_finite() const;
    Int element_count() const;  // throws MathError if infinite

    bool operator==(const CoeffObject&) const = default;
    std::string describe() const;

    /* Diagonal relation matrix: one column n_i * e_i per torsion generator
     * (gen_count() x torsion.size(); empty over fields). */
    Matrix relation_matrix() const;
};

struct ModuleMap {
    CoeffObject domain, codomain;
    Matrix m;  // codomain.gen_count() x domain.gen_count(), canonical

    ModuleMap() = default;
    ModuleMap(CoeffObject dom, CoeffObject cod, Matrix mat);

    static ModuleMap zero(const CoeffObject& dom, const CoeffObject& cod);
    static ModuleMap identity(const CoeffObject& obj);

    bool is_zero() const { return m.is_zero(); }
    bool operator==(const ModuleMap&) const = default;
};

/* Reduce each row of a raw coordinate matrix modulo the row's generator order
 * (canonical representative in [0, n)).  Identity over fields. */
Matrix reduce_rows(const CoeffObject& cod, Matrix mat);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap operator+(const ModuleMap& f, const ModuleMap& g);
ModuleMap operator-(const ModuleMap& f, const ModuleMap& g);
ModuleMap operator-(const ModuleMap& f);

/* Is the ModuleMap an isomorphism?  (Field: invertible matrix; Z: bijective,
 * decided exactly.)  inverse_map returns nullopt otherwise. */
bool is_isomorphism(const ModuleMap& f);
std::optional<ModuleMap> inverse_map(const ModuleMap& f);

/* --- subquotients -------------------------------------------------------- */

struct Subquotient {
    CoeffObject obj;      // canonical structure of span(L)/span(W)
    Matrix L;             // ambient_gens x z basis (columns independent)
    Matrix U, Uinv;       // z x z change of basis diagonalizing the quotient
    std::vector<std::size_t> kept;  // positions of surviving coordinates (torsion first, then free)

    /* x: ambient coordinate column(s) of elements lying in span(L) (over Z any
     * representative works as long as span(W) contains the ambient relations
     * used).  Returns canonical coordinates of the class. */
    Matrix project(const Matrix& x) const;
    /* Canonical coordinates -> ambient representative. */
    Matrix lift(const Matrix& y) const;
};

/* pre: columns of W lie in span(L); columns of L independent. */
Subquotient quotient_structure(const Matrix& L, const Matrix& W);

/* Structure of the quotient Z^n (or F^n) modulo span(W): convenience for
 * presentations; equals quotient_structure(I_n, W). */
Subquotient cokernel_structure(const CoefficientSpec& spec, std::size_t n, const Matrix& W);

/* --- direct sums ---------------------------------------------------------- */

struct DirectSum {
    CoeffObject total;                 // canonical form of the concatenated sum
    std::vector<ModuleMap> incl;       // part i -> total
    std::vector<ModuleMap> proj;       // total -> part i;  proj_i . incl_j = delta_ij
};

DirectSum direct_sum(const std::vector<CoeffObject>& parts);

/* --- hom groups ----------------------------------------------------------- */

struct HomGroup {
    CoeffObject dom, cod;
    CoeffObject obj;                   // canonical structure of Hom(dom, cod)
    std::vector<ModuleMap> generators; // one per canonical generator of obj

    /* Coordinates of a map in the canonical generators, and back. */
    Matrix coords(const ModuleMap& f) const;
    ModuleMap map_from_coords(const Matrix& y) const;

  /* internal layout */
    struct Summand { std::size_t dom_gen, cod_gen; Int order; Int scale; };
    std::vector<Summand> summands;     // raw coordinates, one per summand
    Subquotient canon;                 // raw -> canonical
};

HomGroup hom_group(const CoeffObject& dom, const CoeffObject& cod);

/* --- enumeration ----------------------------------------------------------

 * Deterministic element enumeration (coordinate columns, lexicographic with
 * the last coordinate fastest).  Throws MathError if the object is infinite
 * or exceeds the budget. */
std::vector<Matrix> enumerate_elements(const CoeffObject& obj, const Int& budget);

struct AutCount {
    bool finite = false;
    Int order = 0;
};

/* Order of the automorphism group.  Exact closed form over fields; exact
 * counts over Z for rank <= 1 (brute force on torsion within budget);
 * finite=false for infinite groups. */
AutCount aut_group_order(const CoeffObject& obj, const Int& budget);

Int gl_order(std::int64_t p, std::size_t n);

}  // namespace symchain
