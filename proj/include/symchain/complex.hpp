#pragma once

/* Bounded chain complexes of coefficient objects, chain maps, homotopies,
 * translation, homology with exact projection/lift data, splittings and the
 * canonical split normal form.
 *
 * Index convention: a complex lives on the window [lo, hi]; d_k maps A_{k+1}
 * to A_k and exists for k in [lo, hi-1].  Objects/maps outside the window are
 * zero, and accessors hand those out so callers never special-case edges.
 */

#include "symchain/coeff.hpp"

#include <optional>
#include <vector>

namespace symchain {

class ChainComplex {
  public:
    ChainComplex() : spec_(CoefficientSpec::integers()), lo_(0), hi_(0), objects_{CoeffObject::zero(spec_)} {}

    /* objects: A_lo .. A_hi;  diffs: d_lo .. d_{hi-1} with d_k : A_{k+1} -> A_k.
     * Checks shapes and d . d = 0. */
    static ChainComplex build(CoefficientSpec spec, int lo, int hi, std::vector<CoeffObject> objects,
                              std::vector<ModuleMap> diffs);
    /* All differentials zero. */
    static ChainComplex with_zero_diffs(CoefficientSpec spec, int lo, int hi, std::vector<CoeffObject> objects);

    const CoefficientSpec& spec() const { return spec_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool in_window(int k) const { return k >= lo_ && k <= hi_; }

    CoeffObject object_at(int k) const {
        return in_window(k) ? objects_[static_cast<std::size_t>(k - lo_)] : CoeffObject::zero(spec_);
    }
    /* d_k : A_{k+1} -> A_k (zero map outside [lo, hi-1]). */
    ModuleMap diff(int k) const {
        if (k >= lo_ && k < hi_) return diffs_[static_cast<std::size_t>(k - lo_)];
        return ModuleMap::zero(object_at(k + 1), object_at(k));
    }

    bool operator==(const ChainComplex&) const = default;

  private:
    CoefficientSpec spec_;
    int lo_, hi_;
    std::vector<CoeffObject> objects_;
    std::vector<ModuleMap> diffs_;
};

/* A[n]_k = A_{k+n}, window [lo-n, hi-n], differentials scaled by (-1)^n. */
ChainComplex translate(const ChainComplex& a, int n);

class ChainMap {
  public:
    ChainMap() = default;
    /* comps: f_k for k in [dom.lo, dom.hi]; targets cod.object_at(k).
     * Checks the commuting squares cod.d_k . f_{k+1} == f_k . dom.d_k. */
    static ChainMap build(ChainComplex dom, ChainComplex cod, std::vector<ModuleMap> comps);
    static ChainMap zero(const ChainComplex& dom, const ChainComplex& cod);
    static ChainMap identity(const ChainComplex& a);

    const ChainComplex& dom() const { return dom_; }
    const ChainComplex& cod() const { return cod_; }
    ModuleMap comp(int k) const {
        if (k >= dom_.lo() && k <= dom_.hi()) return comps_[static_cast<std::size_t>(k - dom_.lo())];
        return ModuleMap::zero(dom_.object_at(k), cod_.object_at(k));
    }
    bool is_zero() const;
    bool operator==(const ChainMap&) const = default;

  private:
    ChainComplex dom_, cod_;
    std::vector<ModuleMap> comps_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& f, const ChainMap& g);
ChainMap operator-(const ChainMap& f, const ChainMap& g);
ChainMap operator-(const ChainMap& f);
/* Componentwise shift: f[n] between the translated complexes, (f[n])_k = f_{k+n}. */
ChainMap translate_map(const ChainMap& f, int n);

/* Degree-n homotopy data: h_k : dom_k -> cod_{k+n} for k in [dom.lo, dom.hi].
 * No cycle condition is imposed here; it is just graded map data. */
class Homotopy {
  public:
    Homotopy() = default;
    static Homotopy build(ChainComplex dom, ChainComplex cod, int degree, std::vector<ModuleMap> comps);
    static Homotopy zero(const ChainComplex& dom, const ChainComplex& cod, int degree);

    const ChainComplex& dom() const { return dom_; }
    const ChainComplex& cod() const { return cod_; }
    int degree() const { return degree_; }
    ModuleMap comp(int k) const {
        if (k >= dom_.lo() && k <= dom_.hi()) return comps_[static_cast<std::size_t>(k - dom_.lo())];
        return ModuleMap::zero(dom_.object_at(k), cod_.object_at(k + degree_));
    }
    bool is_zero() const;
    bool operator==(const Homotopy&) const = default;

  private:
    ChainComplex dom_, cod_;
    int degree_ = 1;
    std::vector<ModuleMap> comps_;
};

Homotopy operator+(const Homotopy& a, const Homotopy& b);
Homotopy operator-(const Homotopy& a);
/* Conjugate a homotopy on B by chain maps u: A -> B, v: B -> A (components
 * v_{k+n} . h_k . u_k); used to transport witnesses along isomorphisms. */
Homotopy conjugate_homotopy(const Homotopy& h, const ChainMap& u, const ChainMap& v);

/* --- homology -------------------------------------------------------------- */

struct HomologyData {
    int degree = 0;
    CoeffObject cycles, boundaries, quotient;  // Z_k, B_k, H_k canonical objects
    Subquotient Hq;                            // project/lift between A_k coords and H_k coords
};

HomologyData homology(const ChainComplex& a, int k);

/* Induced map H_k(f) : H_k(dom) -> H_k(cod); pass precomputed homology data. */
ModuleMap induced_map(const ChainMap& f, int k, const HomologyData& dom_h, const HomologyData& cod_h);

/* Induced map of g viewed with target degree k+n (for maps A -> A[n] handed
 * as componentwise data g_k : A_k -> A_{k+n}). */
ModuleMap induced_shift_map(const ModuleMap& g_comp, const HomologyData& from_h, const HomologyData& to_h);

/* --- canonical split form --------------------------------------------------- */

/* Canonical split complex on [lo, hi]: A_k = B_k + H_k + B_{k-1} with
 * d_k = (include B_k) . (project slot 3 of A_{k+1}); slot objects B_k vanish
 * outside [lo, hi-1].  Slot order: 0 = B_k, 1 = H_k, 2 = B_{k-1}. */
class SplitShape {
  public:
    ChainComplex cx;
    std::vector<DirectSum> sums;  // per degree k - lo, three parts each

    CoeffObject boundary_obj(int k) const;  // B_k (zero outside [lo, hi-1])
    CoeffObject homology_obj(int k) const;  // H_k (zero outside window)
    const ModuleMap& incl(int k, int slot) const;
    const ModuleMap& proj(int k, int slot) const;
};

/* B: B_lo .. B_{hi-1};  H: H_lo .. H_hi. */
SplitShape make_split_shape(CoefficientSpec spec, int lo, int hi, const std::vector<CoeffObject>& B,
                            const std::vector<CoeffObject>& H);

/* Degreewise splitting maps s_k : A_k -> A_{k+1} with d_k s_k d_k = d_k for
 * every k; nullopt is a certified "no splitting exists". */
std::optional<std::vector<ModuleMap>> find_splitting(const ChainComplex& a);

struct SplitData {
    SplitShape shape;
    ChainMap to_canonical;    // strict iso A -> shape.cx
    ChainMap from_canonical;  // strict inverse
    std::vector<ModuleMap> splitting;  // the s_k used (k - lo indexing, k in [lo, hi-1])
};

std::optional<SplitData> split_normal_form(const ChainComplex& a);

}  // namespace symchain
