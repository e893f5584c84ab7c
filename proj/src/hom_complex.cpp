#include "symchain/hom_complex.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace symchain {

namespace {

/* Summand order and embedding scale for a pair of generator orders (0 = free).
 * Returns false if the summand is trivial (torsion source into a free target). */
bool summand_shape(const CoefficientSpec& spec, const Int& dom_order, const Int& cod_order, Int& order, Int& scale) {
    if (spec.is_field()) {
        order = 0;
        scale = 1;
        return true;
    }
    if (dom_order == 0) {  // free source: full copy of the target generator's group
        order = cod_order;
        scale = 1;
        return true;
    }
    if (cod_order == 0) return false;  // no nonzero map from torsion to free
    const Int g = boost::multiprecision::gcd(dom_order, cod_order);
    order = g;
    scale = cod_order / g;
    return true;
}

Rational exact_div(const Rational& a, const Int& b) {
    Rational q = a / Rational(b);
    if (boost::multiprecision::denominator(q) != 1)
        throw MathError("hom coordinates: entry not divisible by the summand scale");
    return q;
}

}  // namespace

const std::vector<HomComplexData::Coord>& HomComplexData::coords_at(int n) const {
    static const std::vector<Coord> empty;
    if (!hom_.in_window(n)) return empty;
    return coords_[static_cast<std::size_t>(n - hom_.lo())];
}

const Subquotient& HomComplexData::canon_at(int n) const {
    if (!hom_.in_window(n)) throw std::out_of_range("HomComplexData: degree outside the window");
    return canon_[static_cast<std::size_t>(n - hom_.lo())];
}

Matrix HomComplexData::raw_from_components(int n, const std::vector<ModuleMap>& comps) const {
    const auto& cs = coords_at(n);
    Matrix raw(dom_.spec(), cs.size(), 1);
    for (std::size_t t = 0; t < cs.size(); ++t) {
        const Coord& c = cs[t];
        const ModuleMap& comp = comps[static_cast<std::size_t>(c.k - dom_.lo())];
        Rational e = comp.m.at(c.cod_gen, c.dom_gen);
        if (c.scale != 1) e = exact_div(e, c.scale);
        raw.set(t, 0, e);
    }
    return raw;
}

std::vector<ModuleMap> HomComplexData::components_from_raw(int n, const Matrix& raw) const {
    const auto& cs = coords_at(n);
    if (raw.rows() != cs.size() || raw.cols() != 1)
        throw std::invalid_argument("hom coordinates: wrong raw vector shape");
    std::vector<Matrix> mats;
    for (int k = dom_.lo(); k <= dom_.hi(); ++k)
        mats.push_back(Matrix::zero(dom_.spec(), cod_.object_at(k + n).gen_count(), dom_.object_at(k).gen_count()));
    for (std::size_t t = 0; t < cs.size(); ++t) {
        const Coord& c = cs[t];
        Matrix& m = mats[static_cast<std::size_t>(c.k - dom_.lo())];
        m.set(c.cod_gen, c.dom_gen, raw_mul(dom_.spec(), raw.at(t, 0), Rational(c.scale)));
    }
    std::vector<ModuleMap> comps;
    for (int k = dom_.lo(); k <= dom_.hi(); ++k)
        comps.emplace_back(dom_.object_at(k), cod_.object_at(k + n), mats[static_cast<std::size_t>(k - dom_.lo())]);
    return comps;
}

Matrix HomComplexData::component_coords(int n, const std::vector<ModuleMap>& comps) const {
    if (!hom_.in_window(n)) {
        for (const auto& c : comps)
            if (!c.is_zero()) throw std::invalid_argument("hom coordinates: nonzero data outside the window");
        return Matrix(dom_.spec(), 0, 1);
    }
    return canon_at(n).project(raw_from_components(n, comps));
}

std::vector<ModuleMap> HomComplexData::components_from_coords(int n, const Matrix& y) const {
    if (!hom_.in_window(n)) {
        if (!y.is_zero()) throw std::invalid_argument("hom coordinates: nonzero coordinates outside the window");
        std::vector<ModuleMap> comps;
        for (int k = dom_.lo(); k <= dom_.hi(); ++k)
            comps.push_back(ModuleMap::zero(dom_.object_at(k), cod_.object_at(k + n)));
        return comps;
    }
    return components_from_raw(n, canon_at(n).lift(y));
}

Matrix HomComplexData::map_coords(const ChainMap& f) const {
    if (!(f.dom() == dom_) || !(f.cod() == cod_))
        throw std::invalid_argument("map_coords: endpoints do not match the hom complex");
    std::vector<ModuleMap> comps;
    for (int k = dom_.lo(); k <= dom_.hi(); ++k) comps.push_back(f.comp(k));
    return component_coords(0, comps);
}

ChainMap HomComplexData::map_from_coords(const Matrix& y) const {
    return ChainMap::build(dom_, cod_, components_from_coords(0, y));
}

Matrix HomComplexData::homotopy_coords(const Homotopy& h) const {
    if (!(h.dom() == dom_) || !(h.cod() == cod_))
        throw std::invalid_argument("homotopy_coords: endpoints do not match the hom complex");
    std::vector<ModuleMap> comps;
    for (int k = dom_.lo(); k <= dom_.hi(); ++k) comps.push_back(h.comp(k));
    return component_coords(h.degree(), comps);
}

Homotopy HomComplexData::homotopy_from_coords(int degree, const Matrix& y) const {
    return Homotopy::build(dom_, cod_, degree, components_from_coords(degree, y));
}

bool HomComplexData::is_cycle(int n, const Matrix& y) const {
    Matrix image = hom_.diff(n - 1).m * y;
    return reduce_rows(hom_.object_at(n - 1), image).is_zero();
}

std::optional<Matrix> HomComplexData::solve_boundary(int n, const Matrix& target) const {
    const CoeffObject piece = hom_.object_at(n);
    const CoeffObject above = hom_.object_at(n + 1);
    if (target.rows() != piece.gen_count() || target.cols() != 1)
        throw std::invalid_argument("solve_boundary: wrong target shape");
    const Matrix d = hom_.diff(n).m;
    const Matrix rel = piece.relation_matrix();
    auto sol = solve(hcat(d, rel), target);
    if (!sol) return std::nullopt;
    return submatrix(*sol, 0, 0, above.gen_count(), 1);
}

HomComplexData hom_complex(const ChainComplex& a, const ChainComplex& b) {
    require_same_backend(a.spec(), b.spec());
    const CoefficientSpec spec = a.spec();
    HomComplexData hc;
    hc.dom_ = a;
    hc.cod_ = b;
    const int lo = b.lo() - a.hi();
    const int hi = b.hi() - a.lo();

    std::vector<CoeffObject> pieces;
    for (int n = lo; n <= hi; ++n) {
        std::vector<HomComplexData::Coord> cs;
        for (int k = a.lo(); k <= a.hi(); ++k) {
            const CoeffObject dom_obj = a.object_at(k);
            const CoeffObject cod_obj = b.object_at(k + n);
            for (std::size_t j = 0; j < dom_obj.gen_count(); ++j) {
                for (std::size_t i = 0; i < cod_obj.gen_count(); ++i) {
                    Int order, scl;
                    if (!summand_shape(spec, dom_obj.gen_order(j), cod_obj.gen_order(i), order, scl)) continue;
                    if (order == 1) continue;  // trivial summand
                    cs.push_back({k, j, i, order, scl});
                }
            }
        }
        std::size_t torsion = 0;
        for (const auto& c : cs)
            if (c.order > 0) ++torsion;
        Matrix rel(spec, cs.size(), torsion);
        std::size_t col = 0;
        for (std::size_t t = 0; t < cs.size(); ++t)
            if (cs[t].order > 0) rel.set(t, col++, Rational(cs[t].order));
        hc.canon_.push_back(cokernel_structure(spec, cs.size(), rel));
        pieces.push_back(hc.canon_.back().obj);
        hc.coords_.push_back(std::move(cs));
    }

    // phase 1: window/coords available for the component translators
    hc.hom_ = ChainComplex::with_zero_diffs(spec, lo, hi, pieces);

    // phase 2: the boundary of each canonical generator of piece n+1,
    // d(h)_k = d^B . h_k - (-1)^deg h_{k-1} . d^A  (deg = n+1)
    std::vector<ModuleMap> diffs;
    for (int n = lo; n < hi; ++n) {
        const CoeffObject& src = pieces[static_cast<std::size_t>(n + 1 - lo)];
        const CoeffObject& dst = pieces[static_cast<std::size_t>(n - lo)];
        const int deg = n + 1;
        Matrix dm(spec, dst.gen_count(), src.gen_count());
        for (std::size_t g = 0; g < src.gen_count(); ++g) {
            Matrix e(spec, src.gen_count(), 1);
            e.set(g, 0, Rational(1));
            std::vector<ModuleMap> comps = hc.components_from_coords(deg, e);
            std::vector<ModuleMap> image;
            for (int k = a.lo(); k <= a.hi(); ++k) {
                ModuleMap term = compose(b.diff(k + n), comps[static_cast<std::size_t>(k - a.lo())]);
                if (k - 1 >= a.lo()) {
                    ModuleMap t2 = compose(comps[static_cast<std::size_t>(k - 1 - a.lo())], a.diff(k - 1));
                    Matrix signed_m = (deg % 2 == 0) ? -t2.m : t2.m;
                    term = term + ModuleMap(t2.domain, t2.codomain, signed_m);
                }
                image.push_back(term);
            }
            Matrix icoords = hc.component_coords(n, image);
            for (std::size_t i = 0; i < dst.gen_count(); ++i) dm.set(i, g, icoords.at(i, 0));
        }
        diffs.push_back(ModuleMap(src, dst, dm));
    }
    hc.hom_ = ChainComplex::build(spec, lo, hi, std::move(pieces), std::move(diffs));
    return hc;
}

std::optional<Homotopy> homotopy_between(const HomComplexData& hc, const ChainMap& f, const ChainMap& g) {
    Matrix target = hc.map_coords(g) - hc.map_coords(f);
    if (!hc.hom().in_window(0)) return Homotopy::zero(hc.dom(), hc.cod(), 1);
    auto x = hc.solve_boundary(0, target);
    if (!x) return std::nullopt;
    return hc.homotopy_from_coords(1, *x);
}

std::optional<Homotopy> null_homotopy(const HomComplexData& hc, const ChainMap& f) {
    return homotopy_between(hc, ChainMap::zero(hc.dom(), hc.cod()), f);
}

bool homotopies_equivalent(const HomComplexData& hc, const Homotopy& h1, const Homotopy& h2) {
    if (h1.degree() != 1 || h2.degree() != 1)
        throw std::invalid_argument("homotopies_equivalent: expected degree-1 witnesses");
    if (!hc.hom().in_window(1)) return true;
    Matrix target = hc.homotopy_coords(h2) - hc.homotopy_coords(h1);
    return hc.solve_boundary(1, target).has_value();
}

}  // namespace symchain
