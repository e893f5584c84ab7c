#pragma once

// Finite 2-groups in skeletal (semidirect-product) form and the extraction of
// that form from a concretely presented finite 2-group.
//
// A skeletal model is a finite group G, a finite abelian group A, an action of
// G on A by automorphisms, and a normalized 3-cocycle z: G^3 -> A.  Morphisms
// are pairs (a, g): g -> g with composition (a', g).(a, g) = (a' + a, g),
// tensor (a, g) (x) (a', g') = (a + g<|a', g g'), and associator (z(g,g',g''),
// g g' g'') on objects.  Elements of A and G are addressed by serial numbers
// so every structure map is an explicit table.
//
// Extraction follows the classical skeletalization: pick one representative
// object per component (the unit representing its own component), pick one
// connecting 2-cell iota_y: y -> x_[y] per object (identity on the chosen
// representatives), and read off the action and the associator cochain from
// the failure of the representatives to be closed under tensor.

#include <optional>
#include <string>
#include <vector>

#include "symchain/oracle.hpp"

namespace symchain {

/* ---- finite abelian groups by invariant factors -------------------------------- */

// Elements are serial numbers 0..order-1 in mixed radix over the factors with
// the last coordinate fastest (matching enumerate_elements).
struct FinAbGroup {
    std::vector<Int> factors;  // each >= 1

    Int order() const;
    std::size_t serial_count() const;  // order() as size_t; throws when too large

    std::vector<Int> coords_of(std::size_t serial) const;
    std::size_t serial_of(const std::vector<Int>& coords) const;

    std::size_t add(std::size_t x, std::size_t y) const;
    std::size_t neg(std::size_t x) const;
    std::size_t sub(std::size_t x, std::size_t y) const { return add(x, neg(y)); }
};

/* ---- the skeletal model --------------------------------------------------------- */

using ActionTable = std::vector<std::vector<std::size_t>>;           // [g][a] -> a
using CochainTable2 = std::vector<std::vector<std::size_t>>;         // [g][g'] -> a
using CochainTable3 = std::vector<std::vector<std::vector<std::size_t>>>;  // [g][g'][g''] -> a

struct SkeletalTwoGroup {
    GroupTable g;
    FinAbGroup a;
    ActionTable act;
    CochainTable3 z;
};

// A morphism of the skeletal model: (a, g): g -> g.
struct SkelMor {
    std::size_t a = 0;
    std::size_t g = 0;
    bool operator==(const SkelMor&) const = default;
};

// Structural validity: g a group table, act an action by automorphisms,
// z normalized and closed.  Returns an empty string when valid, otherwise a
// description of the first violation.
std::string skeletal_validate(const SkeletalTwoGroup& t);

SkelMor skel_identity(const SkeletalTwoGroup& t, std::size_t g);
SkelMor skel_compose(const SkeletalTwoGroup& t, const SkelMor& after, const SkelMor& first);
SkelMor skel_inverse(const SkeletalTwoGroup& t, const SkelMor& m);
std::size_t skel_tensor_obj(const SkeletalTwoGroup& t, std::size_t g1, std::size_t g2);
SkelMor skel_tensor(const SkeletalTwoGroup& t, const SkelMor& m1, const SkelMor& m2);
SkelMor skel_associator(const SkeletalTwoGroup& t, std::size_t g1, std::size_t g2, std::size_t g3);

// Pentagon instance at (g1,g2,g3,g4), evaluated with the model's own
// composition/tensor.  True for every 4-tuple iff z is a 3-cocycle.
bool skel_pentagon_holds(const SkeletalTwoGroup& t, std::size_t g1, std::size_t g2,
                         std::size_t g3, std::size_t g4);

/* ---- cocycle calculus ------------------------------------------------------------ */

// Standard 3-cocycle condition for (G, A, act):
//   g1<|z(g2,g3,g4) - z(g1g2,g3,g4) + z(g1,g2g3,g4) - z(g1,g2,g3g4) + z(g1,g2,g3) = 0.
bool cocycle_check(const SkeletalTwoGroup& t, const CochainTable3& z);
bool cocycle_check(const SkeletalTwoGroup& t);  // the model's own z

bool cochain_normalized(const SkeletalTwoGroup& t, const CochainTable3& z);

// (delta c)(g1,g2,g3) = g1<|c(g2,g3) - c(g1g2,g3) + c(g1,g2g3) - c(g1,g2).
CochainTable3 coboundary_of(const SkeletalTwoGroup& t, const CochainTable2& c);

enum class SearchVerdict { yes, no, undecided };
std::string to_string(SearchVerdict v);

struct CohomologousResult {
    SearchVerdict verdict = SearchVerdict::undecided;
    std::optional<CochainTable2> witness;  // z1 - z2 = coboundary_of(witness)
    std::string note;
};

// Bounded exhaustive search for a 2-cochain c with z1 - z2 = delta c.  When
// the full cochain space fits the bound it is searched outright; otherwise
// the search is restricted to normalized cochains (complete for normalized
// inputs, which is noted in the result); above that, undecided.
CohomologousResult cohomologous_check(const SkeletalTwoGroup& t, const CochainTable3& z1,
                                      const CochainTable3& z2, const Int& bound = Int(1) << 20);

/* ---- unit-loop transport on a concrete 2-group ----------------------------------- */

// delta_x(u) = u (x) id_x and gamma_x(u) = id_x (x) u turn automorphisms of the
// unit object into automorphisms of the object x.  The inverses conjugate
// through a chosen pseudoinverse of x:
//   gamma_x^{-1}(phi) = eps . (id_{x*} (x) phi) . eps^{-1},  eps: x* (x) x -> I,
//   delta_x^{-1}(phi) = eta . (phi (x) id_{x*}) . eta^{-1},  eta: x (x) x* -> I.
// The composite gamma_x^{-1}(delta_x(u)) is the action of the component [x]
// on unit automorphisms; it does not depend on the chosen x* or cell.
OracleCell delta_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& u);
OracleCell gamma_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& u);
OracleCell delta_inverse_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& phi);
OracleCell gamma_inverse_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& phi);
OracleCell component_action_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& u);

/* ---- extraction ------------------------------------------------------------------- */

struct SinhChoices {
    std::vector<std::size_t> rep;   // component serial -> object index
    std::vector<OracleCell> iota;   // object index -> cell: object -> its representative
};

struct SinhExtraction {
    SkeletalTwoGroup model;
    SinhChoices choices;
    std::vector<OracleCell> loop;                // A serial -> unit automorphism
    std::vector<std::vector<OracleCell>> mu;     // mu[g][g']: x_{gg'} -> x_g (x) x_{g'}
};

// Deterministic skeletalization of a concrete 2-group: representatives are
// the serialization-minimal objects of each component (the unit for its own
// component), iota the first cell found by the deterministic solver, mu the
// inverted iota at tensor products of representatives, and z solved from the
// transition square with the strict associator.
SinhExtraction sinh_extract(const ConcreteTwoGroup& c);

struct SinhReport {
    std::vector<CheckItem> checks;
    bool all_pass() const;
};

// Exhaustive verification that the extraction is a 2-group equivalence:
// model validity, z normalized/closed, the skeletal pentagon, both round
// trips, naturality of the choice cells, naturality and coherence of mu,
// and functoriality on morphisms.
SinhReport verify_equivalence(const SinhExtraction& e, const ConcreteTwoGroup& c);

}  // namespace symchain
