#include "symchain/two_category.hpp"

#include <stdexcept>

namespace symchain {

TwoCell make_cell(ChainMap src, Homotopy h) {
    if (!(h.dom() == src.dom()) || !(h.cod() == src.cod()) || h.degree() != 1)
        throw std::invalid_argument("make_cell: witness endpoints or degree do not match the source map");
    return TwoCell{std::move(src), std::move(h)};
}

TwoCell identity_cell(const ChainMap& f) { return TwoCell{f, Homotopy::zero(f.dom(), f.cod(), 1)}; }

ChainMap cell_target(const TwoCell& t) {
    const ChainComplex& A = t.src.dom();
    const ChainComplex& B = t.src.cod();
    std::vector<ModuleMap> comps;
    for (int k = A.lo(); k <= A.hi(); ++k) {
        ModuleMap c = t.src.comp(k) + compose(B.diff(k), t.h.comp(k)) + compose(t.h.comp(k - 1), A.diff(k - 1));
        comps.push_back(std::move(c));
    }
    return ChainMap::build(A, B, std::move(comps));
}

TwoCell vcompose(const TwoCell& t2, const TwoCell& t1) {
    if (!(cell_target(t1) == t2.src))
        throw std::invalid_argument("vcompose: target of the first cell is not the source of the second");
    return TwoCell{t1.src, t1.h + t2.h};
}

TwoCell vinverse(const TwoCell& t) { return TwoCell{cell_target(t), -t.h}; }

TwoCell hcompose(const TwoCell& tp, const TwoCell& t, HVariant variant) {
    const ChainMap& f = t.src;   // A -> B
    const ChainMap& g = tp.src;  // B -> C
    if (!(f.cod() == g.dom())) throw std::invalid_argument("hcompose: cells are not composable");
    const ChainComplex& A = f.dom();
    const ChainComplex& B = f.cod();
    const ChainComplex& C = g.cod();
    std::vector<ModuleMap> comps;
    for (int k = A.lo(); k <= A.hi(); ++k) {
        const ModuleMap hk = t.h.comp(k);          // A_k -> B_{k+1}
        const ModuleMap hpk = tp.h.comp(k);        // B_k -> C_{k+1}
        ModuleMap c = compose(hpk, f.comp(k)) + compose(hpk, compose(B.diff(k), hk));
        if (variant == HVariant::A) {
            c = c + compose(hpk, compose(t.h.comp(k - 1), A.diff(k - 1))) + compose(g.comp(k + 1), hk);
        } else {
            c = c + compose(g.comp(k + 1), hk) + compose(C.diff(k + 1), compose(tp.h.comp(k + 1), hk));
        }
        comps.push_back(std::move(c));
    }
    return TwoCell{compose(g, f), Homotopy::build(A, C, 1, std::move(comps))};
}

TwoCell whisker_left(const ChainMap& g, const TwoCell& t) { return hcompose(identity_cell(g), t); }

TwoCell whisker_right(const TwoCell& t, const ChainMap& f) { return hcompose(t, identity_cell(f)); }

bool cells_equal(const HomComplexData& hc, const TwoCell& a, const TwoCell& b) {
    if (!(a.src == b.src)) return false;
    if (!(cell_target(a) == cell_target(b))) return false;
    return homotopies_equivalent(hc, a.h, b.h);
}

bool cells_equal(const TwoCell& a, const TwoCell& b) {
    if (!(a.src == b.src)) return false;
    HomComplexData hc = hom_complex(a.src.dom(), a.src.cod());
    return cells_equal(hc, a, b);
}

}  // namespace symchain
