#include "symchain/complex.hpp"

#include "symchain/mateq.hpp"

#include <stdexcept>
#include <utility>

namespace symchain {

namespace {

void require_same_complex(const ChainComplex& a, const ChainComplex& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": complexes do not match");
}

}  // namespace

ChainComplex ChainComplex::build(CoefficientSpec spec, int lo, int hi, std::vector<CoeffObject> objects,
                                 std::vector<ModuleMap> diffs) {
    if (hi < lo) throw std::invalid_argument("ChainComplex: window upper bound below lower bound");
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    if (objects.size() != n) throw std::invalid_argument("ChainComplex: object count does not match window");
    if (diffs.size() != n - 1) throw std::invalid_argument("ChainComplex: differential count does not match window");
    for (const auto& o : objects) require_same_backend(spec, o.spec);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(diffs[i].domain == objects[i + 1]) || !(diffs[i].codomain == objects[i]))
            throw std::invalid_argument("ChainComplex: differential endpoints do not match objects");
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        if (!compose(diffs[i], diffs[i + 1]).is_zero())
            throw std::invalid_argument("ChainComplex: d . d != 0");
    }
    ChainComplex c;
    c.spec_ = spec;
    c.lo_ = lo;
    c.hi_ = hi;
    c.objects_ = std::move(objects);
    c.diffs_ = std::move(diffs);
    return c;
}

ChainComplex ChainComplex::with_zero_diffs(CoefficientSpec spec, int lo, int hi, std::vector<CoeffObject> objects) {
    std::vector<ModuleMap> diffs;
    for (std::size_t i = 0; i + 1 < objects.size(); ++i)
        diffs.push_back(ModuleMap::zero(objects[i + 1], objects[i]));
    return build(spec, lo, hi, std::move(objects), std::move(diffs));
}

ChainComplex translate(const ChainComplex& a, int n) {
    const bool flip = (n % 2) != 0;
    std::vector<CoeffObject> objects;
    std::vector<ModuleMap> diffs;
    for (int k = a.lo() - n; k <= a.hi() - n; ++k) objects.push_back(a.object_at(k + n));
    for (int k = a.lo() - n; k < a.hi() - n; ++k) {
        ModuleMap d = a.diff(k + n);
        diffs.push_back(flip ? -d : d);
    }
    return ChainComplex::build(a.spec(), a.lo() - n, a.hi() - n, std::move(objects), std::move(diffs));
}

ChainMap ChainMap::build(ChainComplex dom, ChainComplex cod, std::vector<ModuleMap> comps) {
    require_same_backend(dom.spec(), cod.spec());
    const std::size_t n = static_cast<std::size_t>(dom.hi() - dom.lo() + 1);
    if (comps.size() != n) throw std::invalid_argument("ChainMap: component count does not match window");
    ChainMap f;
    f.dom_ = std::move(dom);
    f.cod_ = std::move(cod);
    f.comps_ = std::move(comps);
    for (int k = f.dom_.lo(); k <= f.dom_.hi(); ++k) {
        const ModuleMap& c = f.comps_[static_cast<std::size_t>(k - f.dom_.lo())];
        if (!(c.domain == f.dom_.object_at(k)) || !(c.codomain == f.cod_.object_at(k)))
            throw std::invalid_argument("ChainMap: component endpoints do not match complexes");
    }
    for (int k = f.dom_.lo() - 1; k <= f.dom_.hi(); ++k) {
        if (!(compose(f.cod_.diff(k), f.comp(k + 1)) == compose(f.comp(k), f.dom_.diff(k))))
            throw std::invalid_argument("ChainMap: squares do not commute with the differentials");
    }
    return f;
}

ChainMap ChainMap::zero(const ChainComplex& dom, const ChainComplex& cod) {
    std::vector<ModuleMap> comps;
    for (int k = dom.lo(); k <= dom.hi(); ++k)
        comps.push_back(ModuleMap::zero(dom.object_at(k), cod.object_at(k)));
    return build(dom, cod, std::move(comps));
}

ChainMap ChainMap::identity(const ChainComplex& a) {
    std::vector<ModuleMap> comps;
    for (int k = a.lo(); k <= a.hi(); ++k) comps.push_back(ModuleMap::identity(a.object_at(k)));
    return build(a, a, std::move(comps));
}

bool ChainMap::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    require_same_complex(g.dom(), f.cod(), "compose(ChainMap)");
    std::vector<ModuleMap> comps;
    for (int k = f.dom().lo(); k <= f.dom().hi(); ++k) comps.push_back(compose(g.comp(k), f.comp(k)));
    return ChainMap::build(f.dom(), g.cod(), std::move(comps));
}

ChainMap operator+(const ChainMap& f, const ChainMap& g) {
    require_same_complex(f.dom(), g.dom(), "ChainMap+");
    require_same_complex(f.cod(), g.cod(), "ChainMap+");
    std::vector<ModuleMap> comps;
    for (int k = f.dom().lo(); k <= f.dom().hi(); ++k) comps.push_back(f.comp(k) + g.comp(k));
    return ChainMap::build(f.dom(), f.cod(), std::move(comps));
}

ChainMap operator-(const ChainMap& f, const ChainMap& g) { return f + (-g); }

ChainMap operator-(const ChainMap& f) {
    std::vector<ModuleMap> comps;
    for (int k = f.dom().lo(); k <= f.dom().hi(); ++k) comps.push_back(-f.comp(k));
    return ChainMap::build(f.dom(), f.cod(), std::move(comps));
}

ChainMap translate_map(const ChainMap& f, int n) {
    ChainComplex dom = translate(f.dom(), n);
    ChainComplex cod = translate(f.cod(), n);
    std::vector<ModuleMap> comps;
    for (int k = dom.lo(); k <= dom.hi(); ++k) comps.push_back(f.comp(k + n));
    return ChainMap::build(std::move(dom), std::move(cod), std::move(comps));
}

Homotopy Homotopy::build(ChainComplex dom, ChainComplex cod, int degree, std::vector<ModuleMap> comps) {
    require_same_backend(dom.spec(), cod.spec());
    const std::size_t n = static_cast<std::size_t>(dom.hi() - dom.lo() + 1);
    if (comps.size() != n) throw std::invalid_argument("Homotopy: component count does not match window");
    Homotopy h;
    h.dom_ = std::move(dom);
    h.cod_ = std::move(cod);
    h.degree_ = degree;
    h.comps_ = std::move(comps);
    for (int k = h.dom_.lo(); k <= h.dom_.hi(); ++k) {
        const ModuleMap& c = h.comps_[static_cast<std::size_t>(k - h.dom_.lo())];
        if (!(c.domain == h.dom_.object_at(k)) || !(c.codomain == h.cod_.object_at(k + degree)))
            throw std::invalid_argument("Homotopy: component endpoints do not match complexes");
    }
    return h;
}

Homotopy Homotopy::zero(const ChainComplex& dom, const ChainComplex& cod, int degree) {
    std::vector<ModuleMap> comps;
    for (int k = dom.lo(); k <= dom.hi(); ++k)
        comps.push_back(ModuleMap::zero(dom.object_at(k), cod.object_at(k + degree)));
    return build(dom, cod, degree, std::move(comps));
}

bool Homotopy::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

Homotopy operator+(const Homotopy& a, const Homotopy& b) {
    require_same_complex(a.dom(), b.dom(), "Homotopy+");
    require_same_complex(a.cod(), b.cod(), "Homotopy+");
    if (a.degree() != b.degree()) throw std::invalid_argument("Homotopy+: degrees differ");
    std::vector<ModuleMap> comps;
    for (int k = a.dom().lo(); k <= a.dom().hi(); ++k) comps.push_back(a.comp(k) + b.comp(k));
    return Homotopy::build(a.dom(), a.cod(), a.degree(), std::move(comps));
}

Homotopy operator-(const Homotopy& a) {
    std::vector<ModuleMap> comps;
    for (int k = a.dom().lo(); k <= a.dom().hi(); ++k) comps.push_back(-a.comp(k));
    return Homotopy::build(a.dom(), a.cod(), a.degree(), std::move(comps));
}

Homotopy conjugate_homotopy(const Homotopy& h, const ChainMap& u, const ChainMap& v) {
    require_same_complex(u.cod(), h.dom(), "conjugate_homotopy");
    require_same_complex(v.dom(), h.cod(), "conjugate_homotopy");
    std::vector<ModuleMap> comps;
    for (int k = u.dom().lo(); k <= u.dom().hi(); ++k)
        comps.push_back(compose(v.comp(k + h.degree()), compose(h.comp(k), u.comp(k))));
    return Homotopy::build(u.dom(), v.cod(), h.degree(), std::move(comps));
}

HomologyData homology(const ChainComplex& a, int k) {
    const CoeffObject obj = a.object_at(k);
    const std::size_t g = obj.gen_count();
    // cycles: coordinates x with d_{k-1} x = 0 in A_{k-1}, i.e. solving against
    // the relations of A_{k-1}
    Matrix below = hcat(a.diff(k - 1).m, a.object_at(k - 1).relation_matrix());
    Matrix ker = kernel_basis(below);
    Matrix ker_top = submatrix(ker, 0, 0, g, ker.cols());
    Matrix LZ = column_space_basis(ker_top);
    // boundaries + ambient relations
    Matrix Rk = obj.relation_matrix();
    Matrix W = hcat(a.diff(k).m, Rk);

    HomologyData out;
    out.degree = k;
    out.Hq = quotient_structure(LZ, W);
    out.quotient = out.Hq.obj;
    out.cycles = quotient_structure(LZ, Rk).obj;
    out.boundaries = quotient_structure(column_space_basis(W), Rk).obj;
    return out;
}

ModuleMap induced_map(const ChainMap& f, int k, const HomologyData& dom_h, const HomologyData& cod_h) {
    const std::size_t n = dom_h.quotient.gen_count();
    Matrix reps = dom_h.Hq.lift(Matrix::identity(f.dom().spec(), n));
    Matrix images = f.comp(k).m * reps;
    return ModuleMap(dom_h.quotient, cod_h.quotient, cod_h.Hq.project(images));
}

ModuleMap induced_shift_map(const ModuleMap& g_comp, const HomologyData& from_h, const HomologyData& to_h) {
    const std::size_t n = from_h.quotient.gen_count();
    Matrix reps = from_h.Hq.lift(Matrix::identity(g_comp.m.spec(), n));
    Matrix images = g_comp.m * reps;
    return ModuleMap(from_h.quotient, to_h.quotient, to_h.Hq.project(images));
}

CoeffObject SplitShape::boundary_obj(int k) const {
    if (k < cx.lo() || k >= cx.hi()) return CoeffObject::zero(cx.spec());
    return sums[static_cast<std::size_t>(k - cx.lo())].incl[0].domain;
}

CoeffObject SplitShape::homology_obj(int k) const {
    if (!cx.in_window(k)) return CoeffObject::zero(cx.spec());
    return sums[static_cast<std::size_t>(k - cx.lo())].incl[1].domain;
}

const ModuleMap& SplitShape::incl(int k, int slot) const {
    return sums.at(static_cast<std::size_t>(k - cx.lo())).incl.at(static_cast<std::size_t>(slot));
}

const ModuleMap& SplitShape::proj(int k, int slot) const {
    return sums.at(static_cast<std::size_t>(k - cx.lo())).proj.at(static_cast<std::size_t>(slot));
}

SplitShape make_split_shape(CoefficientSpec spec, int lo, int hi, const std::vector<CoeffObject>& B,
                            const std::vector<CoeffObject>& H) {
    if (hi < lo) throw std::invalid_argument("make_split_shape: bad window");
    if (B.size() != static_cast<std::size_t>(hi - lo) || H.size() != static_cast<std::size_t>(hi - lo + 1))
        throw std::invalid_argument("make_split_shape: part counts do not match window");
    const CoeffObject zero = CoeffObject::zero(spec);
    auto b_at = [&](int k) -> const CoeffObject& {
        if (k < lo || k >= hi) return zero;
        return B[static_cast<std::size_t>(k - lo)];
    };
    SplitShape shape;
    std::vector<CoeffObject> objects;
    for (int k = lo; k <= hi; ++k) {
        DirectSum s = direct_sum({b_at(k), H[static_cast<std::size_t>(k - lo)], b_at(k - 1)});
        objects.push_back(s.total);
        shape.sums.push_back(std::move(s));
    }
    std::vector<ModuleMap> diffs;
    for (int k = lo; k < hi; ++k) {
        // d_k : A_{k+1} -> A_k lands in the first slot via the third slot of A_{k+1}
        const DirectSum& top = shape.sums[static_cast<std::size_t>(k + 1 - lo)];
        const DirectSum& bot = shape.sums[static_cast<std::size_t>(k - lo)];
        diffs.push_back(compose(bot.incl[0], top.proj[2]));
    }
    shape.cx = ChainComplex::build(spec, lo, hi, std::move(objects), std::move(diffs));
    return shape;
}

std::optional<std::vector<ModuleMap>> find_splitting(const ChainComplex& a) {
    const CoefficientSpec& spec = a.spec();
    const int lo = a.lo(), hi = a.hi();
    std::vector<ModuleMap> s;
    // d_k s_k d_k = d_k is linear in s_k alone, so each degree is an
    // independent system; an unsolvable degree certifies "not split"
    for (int k = lo; k < hi; ++k) {
        const CoeffObject dom = a.object_at(k);
        const CoeffObject cod = a.object_at(k + 1);
        MatEqBuilder eq(spec);
        const std::size_t idx = eq.add_unknown(cod.gen_count(), dom.gen_count());
        if (!spec.is_field()) {
            // well-definedness of s_k as a map out of a torsion object: a
            // generator of order n must land in the n-torsion of the codomain
            for (std::size_t j = 0; j < dom.gen_count(); ++j) {
                const Int aj = dom.gen_order(j);
                if (aj == 0) continue;
                for (std::size_t i = 0; i < cod.gen_count(); ++i) {
                    const Int bi = cod.gen_order(i);
                    if (bi == 0) {
                        eq.add_entry_equation({{idx, i, j, Rational(1)}}, Rational(0));
                    } else {
                        const std::size_t aux = eq.add_unknown(1, 1);
                        eq.add_entry_equation({{idx, i, j, Rational(aj)}, {aux, 0, 0, Rational(bi)}}, Rational(0));
                    }
                }
            }
        }
        const Matrix d = a.diff(k).m;
        std::vector<MatEqBuilder::Term> terms;
        terms.push_back({d, idx, d});
        Matrix rel = dom.relation_matrix();
        if (rel.cols() > 0) {
            const std::size_t slack = eq.add_unknown(rel.cols(), d.cols());
            terms.push_back({rel, slack, Matrix::identity(spec, d.cols())});
        }
        eq.add_equation(terms, d);
        auto sol = eq.solve_all();
        if (!sol) return std::nullopt;
        s.emplace_back(dom, cod, (*sol)[idx]);
    }
    return s;
}

std::optional<SplitData> split_normal_form(const ChainComplex& a) {
    auto s = find_splitting(a);
    if (!s) return std::nullopt;
    const CoefficientSpec& spec = a.spec();
    const int lo = a.lo(), hi = a.hi();

    auto s_at = [&](int k) -> ModuleMap {
        if (k >= lo && k < hi) return (*s)[static_cast<std::size_t>(k - lo)];
        return ModuleMap::zero(a.object_at(k), a.object_at(k + 1));
    };

    std::vector<ModuleMap> pp, rr, qq;       // orthogonal idempotents per degree
    std::vector<Subquotient> Bq, Hq;         // structures of im(p'), im(r)
    for (int k = lo; k <= hi; ++k) {
        const CoeffObject obj = a.object_at(k);
        const ModuleMap id = ModuleMap::identity(obj);
        const ModuleMap q = compose(s_at(k - 1), a.diff(k - 1));
        const ModuleMap p = compose(a.diff(k), s_at(k));
        const ModuleMap pprime = compose(p, id - q);
        const ModuleMap r = id - pprime - q;
        pp.push_back(pprime);
        qq.push_back(q);
        rr.push_back(r);
        const Matrix rel = obj.relation_matrix();
        Bq.push_back(quotient_structure(column_space_basis(hcat(pprime.m, rel)), rel));
        Hq.push_back(quotient_structure(column_space_basis(hcat(r.m, rel)), rel));
    }
    if (!Bq.back().obj.is_zero())
        throw MathError("split_normal_form: boundary part does not vanish at the top degree");

    std::vector<CoeffObject> B, H;
    for (int k = lo; k < hi; ++k) B.push_back(Bq[static_cast<std::size_t>(k - lo)].obj);
    for (int k = lo; k <= hi; ++k) H.push_back(Hq[static_cast<std::size_t>(k - lo)].obj);
    SplitShape shape = make_split_shape(spec, lo, hi, B, H);

    std::vector<ModuleMap> us, vs;
    for (int k = lo; k <= hi; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - lo);
        const CoeffObject obj = a.object_at(k);
        const CoeffObject tot = shape.cx.object_at(k);
        // forward: project each idempotent image into its slot
        ModuleMap u = compose(shape.incl(k, 0), ModuleMap(obj, shape.boundary_obj(k), Bq[i].project(pp[i].m))) +
                      compose(shape.incl(k, 1), ModuleMap(obj, shape.homology_obj(k), Hq[i].project(rr[i].m)));
        if (k > lo) {
            const std::size_t im = i - 1;
            u = u + compose(shape.incl(k, 2),
                            ModuleMap(obj, shape.boundary_obj(k - 1), Bq[im].project(a.diff(k - 1).m)));
        }
        // backward: lift canonical slot generators to ambient representatives
        ModuleMap lb(shape.boundary_obj(k), obj, Bq[i].lift(Matrix::identity(spec, shape.boundary_obj(k).gen_count())));
        ModuleMap lh(shape.homology_obj(k), obj, Hq[i].lift(Matrix::identity(spec, shape.homology_obj(k).gen_count())));
        ModuleMap v = compose(lb, shape.proj(k, 0)) + compose(lh, shape.proj(k, 1));
        if (k > lo) {
            const std::size_t im = i - 1;
            ModuleMap lb2(shape.boundary_obj(k - 1), a.object_at(k - 1),
                          Bq[im].lift(Matrix::identity(spec, shape.boundary_obj(k - 1).gen_count())));
            v = v + compose(compose(s_at(k - 1), lb2), shape.proj(k, 2));
        }
        if (!(compose(u, v) == ModuleMap::identity(tot)) || !(compose(v, u) == ModuleMap::identity(obj)))
            throw MathError("split_normal_form: normalizing maps are not mutually inverse");
        us.push_back(std::move(u));
        vs.push_back(std::move(v));
    }

    SplitData out;
    out.to_canonical = ChainMap::build(a, shape.cx, std::move(us));
    out.from_canonical = ChainMap::build(shape.cx, a, std::move(vs));
    out.shape = std::move(shape);
    out.splitting = std::move(*s);
    return out;
}

}  // namespace symchain
