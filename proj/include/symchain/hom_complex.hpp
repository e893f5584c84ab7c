#pragma once

/* The mapping complex Hom(A, B).
 *
 * The degree-n piece collects the graded maps (h_k : A_k -> B_{k+n}); the
 * boundary of a degree-n element is d(h)_k = d^B . h_k - (-1)^n h_{k-1} . d^A.
 * Degree-0 cycles are exactly the chain maps A -> B, degree-0 boundaries the
 * null-homotopic ones, so H_0 classifies maps up to homotopy; degree-1
 * elements are the homotopy witnesses and degree-2 elements relate homotopies.
 *
 * Each piece is canonicalized into a CoeffObject; the Coord tables record the
 * raw summand layout (over Z the summand for a pair of generators of orders
 * a, b is cyclic of order gcd(a,b), embedded with scale b/gcd(a,b)).
 */

#include "symchain/complex.hpp"

#include <optional>
#include <vector>

namespace symchain {

class HomComplexData {
  public:
    struct Coord {
        int k;                        // source degree: a map A_k -> B_{k+n}
        std::size_t dom_gen, cod_gen;
        Int order;                    // summand order (0 = free / field)
        Int scale;                    // matrix entry = scale * coordinate
    };

    const ChainComplex& dom() const { return dom_; }
    const ChainComplex& cod() const { return cod_; }
    /* The complex whose degree-n object is the canonicalized piece. */
    const ChainComplex& hom() const { return hom_; }

    const std::vector<Coord>& coords_at(int n) const;
    const Subquotient& canon_at(int n) const;

    /* Graded components <-> canonical piece coordinates. */
    Matrix component_coords(int n, const std::vector<ModuleMap>& comps) const;
    std::vector<ModuleMap> components_from_coords(int n, const Matrix& y) const;

    Matrix map_coords(const ChainMap& f) const;
    ChainMap map_from_coords(const Matrix& y) const;
    Matrix homotopy_coords(const Homotopy& h) const;
    Homotopy homotopy_from_coords(int degree, const Matrix& y) const;

    /* Is a degree-n coordinate vector a cycle? */
    bool is_cycle(int n, const Matrix& y) const;
    /* Solve d(x) = target with target in piece n, x in piece n+1 (exact; the
     * piece relations are taken into account).  nullopt = certified empty. */
    std::optional<Matrix> solve_boundary(int n, const Matrix& target) const;

    friend HomComplexData hom_complex(const ChainComplex& a, const ChainComplex& b);

  private:
    ChainComplex dom_, cod_, hom_;
    std::vector<std::vector<Coord>> coords_;  // per degree n - hom_.lo()
    std::vector<Subquotient> canon_;          // raw -> canonical per degree

    Matrix raw_from_components(int n, const std::vector<ModuleMap>& comps) const;
    std::vector<ModuleMap> components_from_raw(int n, const Matrix& raw) const;
};

HomComplexData hom_complex(const ChainComplex& a, const ChainComplex& b);

/* Homotopy g - f = d(h); nullopt is a certified "not homotopic". */
std::optional<Homotopy> homotopy_between(const HomComplexData& hc, const ChainMap& f, const ChainMap& g);
std::optional<Homotopy> null_homotopy(const HomComplexData& hc, const ChainMap& f);

/* Degree-1 witnesses with equal endpoints, equivalent when their difference
 * bounds a degree-2 element. */
bool homotopies_equivalent(const HomComplexData& hc, const Homotopy& h1, const Homotopy& h2);

}  // namespace symchain
