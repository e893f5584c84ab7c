#pragma once

/* 2-cells between chain maps: a cell is a source map together with a degree-1
 * homotopy witness; its target is src + d.h + h.d.  Vertical composition adds
 * witnesses; horizontal composition has two interchangeable witness formulas
 * (A and B) that agree up to equivalence of witnesses.  Cells are compared
 * either strictly (same witness) or as classes (witnesses differing by a
 * degree-2 boundary). */

#include "symchain/complex.hpp"
#include "symchain/hom_complex.hpp"

namespace symchain {

struct TwoCell {
    ChainMap src;
    Homotopy h;  // degree 1, dom = src.dom(), cod = src.cod()
};

TwoCell make_cell(ChainMap src, Homotopy h);
TwoCell identity_cell(const ChainMap& f);

/* Target chain map: (src + d^cod . h + h . d^dom). */
ChainMap cell_target(const TwoCell& t);

/* t2 after t1 vertically; requires cell_target(t1) == t2.src strictly. */
TwoCell vcompose(const TwoCell& t2, const TwoCell& t1);
TwoCell vinverse(const TwoCell& t);

enum class HVariant { A, B };

/* Horizontal composite of t' (over g : B -> C) with t (over f : A -> B),
 * a cell over g . f; the two variants differ by an equivalent witness. */
TwoCell hcompose(const TwoCell& tp, const TwoCell& t, HVariant variant = HVariant::A);

/* Whisker shorthands: map . cell and cell . map. */
TwoCell whisker_left(const ChainMap& g, const TwoCell& t);
TwoCell whisker_right(const TwoCell& t, const ChainMap& f);

/* Same endpoints and equivalent witnesses (uses the hom complex of the
 * endpoints; pass one in when calling repeatedly). */
bool cells_equal(const TwoCell& a, const TwoCell& b);
bool cells_equal(const HomComplexData& hc, const TwoCell& a, const TwoCell& b);

}  // namespace symchain
