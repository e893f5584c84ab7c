#include "symchain/coeff.hpp"

#include "symchain/mateq.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace symchain {

/* --- MatEqBuilder --------------------------------------------------------- */

std::size_t MatEqBuilder::add_unknown(std::size_t rows, std::size_t cols) {
    unknowns_.push_back({rows, cols, total_});
    total_ += rows * cols;
    return unknowns_.size() - 1;
}

void MatEqBuilder::add_equation(const std::vector<Term>& terms, const Matrix& rhs) {
    const std::size_t out_r = rhs.rows(), out_c = rhs.cols();
    std::vector<std::vector<Rational>> block(out_r * out_c, std::vector<Rational>(total_, Rational(0)));
    for (const auto& t : terms) {
        const Shape& sh = unknowns_.at(t.unknown);
        if (t.left.cols() != sh.rows || t.right.rows() != sh.cols)
            throw ShapeError("MatEqBuilder: term shape mismatch");
        if (t.left.rows() != out_r || t.right.cols() != out_c)
            throw ShapeError("MatEqBuilder: term output shape mismatch");
        Matrix K = kron(transpose(t.right), t.left);  // vec(A X B) = K vec(X)
        for (std::size_t s = 0; s < K.rows(); ++s)
            for (std::size_t q = 0; q < K.cols(); ++q)
                if (K.at(s, q) != 0)
                    block[s][sh.offset + q] = raw_add(spec_, block[s][sh.offset + q], K.at(s, q));
    }
    Matrix vr = vec(rhs);
    for (std::size_t s = 0; s < out_r * out_c; ++s) {
        rows_.push_back(std::move(block[s]));
        rhs_.push_back(vr.at(s, 0));
    }
}

void MatEqBuilder::add_entry_equation(const std::vector<EntryRef>& refs, const Rational& rhs) {
    std::vector<Rational> row(total_, Rational(0));
    for (const auto& r : refs) {
        const Shape& sh = unknowns_.at(r.unknown);
        if (r.row >= sh.rows || r.col >= sh.cols) throw ShapeError("MatEqBuilder: entry out of range");
        std::size_t q = sh.offset + r.col * sh.rows + r.row;  // column-major vec index
        row[q] = raw_add(spec_, row[q], canonical_value(spec_, r.coef));
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(canonical_value(spec_, rhs));
}

std::optional<std::vector<Matrix>> MatEqBuilder::solve_all() const {
    Matrix M(spec_, rows_.size(), total_);
    Matrix b(spec_, rows_.size(), 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        // rows recorded before later add_unknown calls are shorter than
        // total_; the missing coefficients are zero
        for (std::size_t j = 0; j < rows_[i].size(); ++j) M.set(i, j, rows_[i][j]);
        b.set(i, 0, rhs_[i]);
    }
    auto x = solve(M, b);
    if (!x) return std::nullopt;
    std::vector<Matrix> out;
    out.reserve(unknowns_.size());
    for (const auto& sh : unknowns_) {
        Matrix piece(spec_, sh.rows * sh.cols, 1);
        for (std::size_t q = 0; q < sh.rows * sh.cols; ++q) piece.raw(q, 0) = x->at(sh.offset + q, 0);
        out.push_back(unvec(piece, sh.rows, sh.cols));
    }
    return out;
}

/* --- CoeffObject ----------------------------------------------------------- */

CoeffObject CoeffObject::vector_space(CoefficientSpec spec, std::size_t dim) {
    if (!spec.is_field()) throw std::invalid_argument("vector_space needs a field backend");
    CoeffObject o;
    o.spec = spec;
    o.rank = dim;
    return o;
}

CoeffObject CoeffObject::z_module(std::size_t rank, std::vector<Int> torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
    CoeffObject o;
    o.spec = CoefficientSpec::integers();
    o.rank = rank;
    o.torsion = std::move(torsion);
    return o;
}

CoeffObject CoeffObject::zero(CoefficientSpec spec) {
    CoeffObject o;
    o.spec = spec;
    return o;
}

bool CoeffObject::is_finite() const {
    switch (spec.kind) {
        case CoeffKind::PrimeField: return true;
        case CoeffKind::Rationals: return rank == 0;
        case CoeffKind::Integers: return rank == 0;
    }
    return false;
}

Int CoeffObject::element_count() const {
    if (!is_finite()) throw MathError("element_count of an infinite object");
    Int n = 1;
    if (spec.kind == CoeffKind::PrimeField)
        for (std::size_t i = 0; i < rank; ++i) n *= spec.p;
    for (const Int& t : torsion) n *= t;
    return n;
}

std::string CoeffObject::describe() const {
    if (spec.is_field()) return spec.describe() + "^" + std::to_string(rank);
    std::string s = "Z^" + std::to_string(rank);
    for (const Int& t : torsion) s += " + Z/" + t.str();
    return s;
}

Matrix CoeffObject::relation_matrix() const {
    Matrix r(spec, gen_count(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) r.set(i, i, Rational(torsion[i]));
    return r;
}

/* --- ModuleMap -------------------------------------------------------------- */

Matrix reduce_rows(const CoeffObject& cod, Matrix mat) {
    if (cod.spec.kind != CoeffKind::Integers) return mat;
    for (std::size_t i = 0; i < cod.torsion.size(); ++i) {
        const Int n = cod.torsion[i];
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            Int v = as_integer(mat.at(i, j)) % n;
            if (v < 0) v += n;
            mat.raw(i, j) = Rational(v);
        }
    }
    return mat;
}

ModuleMap::ModuleMap(CoeffObject dom, CoeffObject cod, Matrix mat)
    : domain(std::move(dom)), codomain(std::move(cod)) {
    require_same_backend(domain.spec, codomain.spec);
    require_same_backend(domain.spec, mat.spec());
    if (mat.rows() != codomain.gen_count() || mat.cols() != domain.gen_count())
        throw ShapeError("ModuleMap: matrix is " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                         ", want " + std::to_string(codomain.gen_count()) + "x" + std::to_string(domain.gen_count()));
    m = reduce_rows(codomain, std::move(mat));
    if (domain.spec.kind == CoeffKind::Integers) {
        for (std::size_t j = 0; j < domain.gen_count(); ++j) {
            const Int a = domain.gen_order(j);
            if (a == 0) continue;
            for (std::size_t i = 0; i < codomain.gen_count(); ++i) {
                const Int b = codomain.gen_order(i);
                const Int e = as_integer(m.at(i, j));
                if (b == 0) {
                    if (e != 0)
                        throw MathError("map not well defined: torsion generator sent to a free generator");
                } else if ((a * e) % b != 0) {
                    throw MathError("map not well defined: order-" + a.str() + " generator image not killed by " +
                                    a.str() + " in Z/" + b.str());
                }
            }
        }
    }
}

ModuleMap ModuleMap::zero(const CoeffObject& dom, const CoeffObject& cod) {
    return ModuleMap(dom, cod, Matrix::zero(dom.spec, cod.gen_count(), dom.gen_count()));
}

ModuleMap ModuleMap::identity(const CoeffObject& obj) {
    return ModuleMap(obj, obj, Matrix::identity(obj.spec, obj.gen_count()));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (!(f.codomain == g.domain)) throw ShapeError("compose: codomain/domain mismatch");
    return ModuleMap(f.domain, g.codomain, g.m * f.m);
}

ModuleMap operator+(const ModuleMap& f, const ModuleMap& g) {
    if (!(f.domain == g.domain) || !(f.codomain == g.codomain)) throw ShapeError("ModuleMap +: shape mismatch");
    return ModuleMap(f.domain, f.codomain, f.m + g.m);
}

ModuleMap operator-(const ModuleMap& f, const ModuleMap& g) {
    if (!(f.domain == g.domain) || !(f.codomain == g.codomain)) throw ShapeError("ModuleMap -: shape mismatch");
    return ModuleMap(f.domain, f.codomain, f.m - g.m);
}

ModuleMap operator-(const ModuleMap& f) { return ModuleMap(f.domain, f.codomain, -f.m); }

bool is_isomorphism(const ModuleMap& f) {
    if (f.domain.spec.is_field())
        return f.domain.rank == f.codomain.rank && f.m.rows() == f.m.cols() &&
               (f.m.rows() == 0 || inverse(f.m).has_value());
    if (!(f.domain == f.codomain ||
          (f.domain.rank == f.codomain.rank && f.domain.torsion == f.codomain.torsion)))
        return false;
    /* equal canonical structure + surjective => bijective (f.g. modules are Hopfian) */
    Matrix span = hcat(f.m, f.codomain.relation_matrix());
    return cokernel_structure(f.domain.spec, f.codomain.gen_count(), span).obj.is_zero();
}

std::optional<ModuleMap> inverse_map(const ModuleMap& f) {
    if (!is_isomorphism(f)) return std::nullopt;
    if (f.domain.spec.is_field()) {
        if (f.m.rows() == 0) return ModuleMap(f.codomain, f.domain, Matrix(f.domain.spec, 0, 0));
        return ModuleMap(f.codomain, f.domain, *inverse(f.m));
    }
    const CoeffObject& M = f.domain;
    const CoeffObject& N = f.codomain;
    MatEqBuilder eq(M.spec);
    std::size_t X = eq.add_unknown(M.gen_count(), N.gen_count());
    Matrix RM = M.relation_matrix(), RN = N.relation_matrix();
    std::size_t Y1 = eq.add_unknown(RM.cols(), M.gen_count());
    std::size_t Y2 = eq.add_unknown(RN.cols(), N.gen_count());
    Matrix IM = Matrix::identity(M.spec, M.gen_count());
    Matrix IN = Matrix::identity(N.spec, N.gen_count());
    /* X f + RM Y1 = I_M ;  f X + RN Y2 = I_N */
    eq.add_equation({{IM, X, f.m}, {RM, Y1, IM}}, IM);
    eq.add_equation({{f.m, X, IN}, {RN, Y2, IN}}, IN);
    /* well-definedness of X as a map N -> M */
    for (std::size_t j = 0; j < N.gen_count(); ++j) {
        const Int b = N.gen_order(j);
        if (b == 0) continue;
        for (std::size_t i = 0; i < M.gen_count(); ++i) {
            const Int a = M.gen_order(i);
            if (a == 0) {
                eq.add_entry_equation({{X, i, j, Rational(1)}}, Rational(0));
            } else {
                std::size_t T = eq.add_unknown(1, 1);
                eq.add_entry_equation({{X, i, j, Rational(b)}, {T, 0, 0, Rational(a)}}, Rational(0));
            }
        }
    }
    auto sol = eq.solve_all();
    if (!sol) return std::nullopt;  // cannot happen for a genuine isomorphism
    return ModuleMap(N, M, (*sol)[X]);
}

/* --- Subquotient ------------------------------------------------------------ */

Matrix Subquotient::project(const Matrix& x) const {
    auto w = solve(L, x);
    if (!w) throw MathError("project: element not in the subobject span");
    Matrix y = U * *w;
    Matrix out(x.spec(), kept.size(), x.cols());
    for (std::size_t t = 0; t < kept.size(); ++t)
        for (std::size_t j = 0; j < x.cols(); ++j) out.raw(t, j) = y.at(kept[t], j);
    return reduce_rows(obj, std::move(out));
}

Matrix Subquotient::lift(const Matrix& y) const {
    if (y.rows() != kept.size()) throw ShapeError("lift: coordinate count mismatch");
    Matrix w(y.spec(), U.rows(), y.cols());
    for (std::size_t t = 0; t < kept.size(); ++t)
        for (std::size_t j = 0; j < y.cols(); ++j) w.raw(kept[t], j) = y.at(t, j);
    return L * (Uinv * w);
}

Subquotient quotient_structure(const Matrix& L, const Matrix& W) {
    require_same_backend(L.spec(), W.spec());
    auto C = solve(L, W);
    if (!C) throw MathError("quotient_structure: W not contained in span(L)");
    const std::size_t z = L.cols();
    Subquotient sq;
    sq.L = L;
    if (L.spec().is_field()) {
        auto rr = rref(*C);
        const std::size_t r = rr.pivots.size();
        sq.U = rr.T;
        auto uinv = inverse(rr.T);
        sq.Uinv = *uinv;
        for (std::size_t i = r; i < z; ++i) sq.kept.push_back(i);
        sq.obj = CoeffObject::vector_space(L.spec(), z - r);
        return sq;
    }
    auto snf = smith_normal_form(*C);
    sq.U = snf.U;
    sq.Uinv = snf.Uinv;
    const std::size_t diag = std::min(C->rows(), C->cols());
    std::vector<Int> tors;
    std::size_t free_count = 0;
    for (std::size_t i = 0; i < z; ++i) {
        Int d = (i < diag) ? as_integer(snf.D.at(i, i)) : Int(0);
        if (d == 1) continue;
        sq.kept.push_back(i);
        if (d == 0)
            ++free_count;
        else
            tors.push_back(d);
    }
    sq.obj = CoeffObject::z_module(free_count, std::move(tors));
    return sq;
}

Subquotient cokernel_structure(const CoefficientSpec& spec, std::size_t n, const Matrix& W) {
    return quotient_structure(Matrix::identity(spec, n), W);
}

/* --- direct sums -------------------------------------------------------------- */

DirectSum direct_sum(const std::vector<CoeffObject>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of nothing (pass explicit zero objects)");
    const CoefficientSpec spec = parts[0].spec;
    std::size_t total_gens = 0;
    for (const auto& p : parts) {
        require_same_backend(spec, p.spec);
        total_gens += p.gen_count();
    }
    /* raw presentation: concatenated generators with their orders */
    std::vector<Int> orders;
    orders.reserve(total_gens);
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.gen_count(); ++i) orders.push_back(p.gen_order(i));
    std::size_t tors_count = 0;
    for (const auto& o : orders)
        if (o != 0) ++tors_count;
    Matrix R(spec, total_gens, tors_count);
    for (std::size_t i = 0, t = 0; i < total_gens; ++i)
        if (orders[i] != 0) R.set(i, t++, Rational(orders[i]));

    Subquotient canon = cokernel_structure(spec, total_gens, R);
    DirectSum ds;
    ds.total = canon.obj;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        const std::size_t g = p.gen_count();
        Matrix raw_incl(spec, total_gens, g);
        for (std::size_t t = 0; t < g; ++t) raw_incl.set(offset + t, t, Rational(1));
        ds.incl.push_back(ModuleMap(p, ds.total, canon.project(raw_incl)));
        /* total -> part: lift canonical generators, slice the part's block */
        Matrix lifted = canon.lift(Matrix::identity(spec, ds.total.gen_count()));
        Matrix slice = submatrix(lifted, offset, 0, g, ds.total.gen_count());
        ds.proj.push_back(ModuleMap(ds.total, p, slice));
        offset += g;
    }
    return ds;
}

/* --- hom groups ------------------------------------------------------------------ */

HomGroup hom_group(const CoeffObject& dom, const CoeffObject& cod) {
    require_same_backend(dom.spec, cod.spec);
    HomGroup hg;
    hg.dom = dom;
    hg.cod = cod;
    const bool field = dom.spec.is_field();
    for (std::size_t j = 0; j < dom.gen_count(); ++j) {
        const Int a = dom.gen_order(j);
        for (std::size_t i = 0; i < cod.gen_count(); ++i) {
            const Int b = cod.gen_order(i);
            if (field) {
                hg.summands.push_back({j, i, Int(0), Int(1)});
            } else if (a == 0) {
                hg.summands.push_back({j, i, b, Int(1)});
            } else if (b == 0) {
                continue;  // Hom(Z/a, Z) = 0
            } else {
                Int g = boost::multiprecision::gcd(a, b);
                hg.summands.push_back({j, i, g, b / g});
            }
        }
    }
    const std::size_t n = hg.summands.size();
    std::size_t tors_count = 0;
    for (const auto& s : hg.summands)
        if (s.order != 0) ++tors_count;
    Matrix R(dom.spec, n, field ? 0 : tors_count);
    if (!field)
        for (std::size_t i = 0, t = 0; i < n; ++i)
            if (hg.summands[i].order != 0) R.set(i, t++, Rational(hg.summands[i].order));
    hg.canon = cokernel_structure(dom.spec, n, R);
    hg.obj = hg.canon.obj;
    for (std::size_t t = 0; t < hg.obj.gen_count(); ++t) {
        Matrix e(dom.spec, hg.obj.gen_count(), 1);
        e.set(t, 0, Rational(1));
        hg.generators.push_back(hg.map_from_coords(e));
    }
    return hg;
}

Matrix HomGroup::coords(const ModuleMap& f) const {
    if (!(f.domain == dom) || !(f.codomain == cod)) throw ShapeError("HomGroup::coords: wrong hom-set");
    Matrix raw(dom.spec, summands.size(), 1);
    for (std::size_t t = 0; t < summands.size(); ++t) {
        const auto& s = summands[t];
        const Rational& e = f.m.at(s.cod_gen, s.dom_gen);
        if (s.scale == 1) {
            raw.raw(t, 0) = e;
        } else {
            Int num = as_integer(e);
            if (num % s.scale != 0) throw MathError("HomGroup::coords: entry not a multiple of the summand scale");
            raw.raw(t, 0) = Rational(num / s.scale);
        }
    }
    return canon.project(raw);
}

ModuleMap HomGroup::map_from_coords(const Matrix& y) const {
    Matrix raw = canon.lift(y);
    Matrix mat(dom.spec, cod.gen_count(), dom.gen_count());
    for (std::size_t t = 0; t < summands.size(); ++t) {
        const auto& s = summands[t];
        mat.raw(s.cod_gen, s.dom_gen) =
            raw_add(dom.spec, mat.at(s.cod_gen, s.dom_gen), raw_mul(dom.spec, Rational(s.scale), raw.at(t, 0)));
    }
    return ModuleMap(dom, cod, mat);
}

/* --- enumeration ------------------------------------------------------------------- */

std::vector<Matrix> enumerate_elements(const CoeffObject& obj, const Int& budget) {
    if (!obj.is_finite()) throw MathError("enumerate_elements: object is infinite: " + obj.describe());
    Int count = obj.element_count();
    if (count > budget)
        throw MathError("enumerate_elements: " + count.str() + " elements exceeds budget " + budget.str());
    const std::size_t n = obj.gen_count();
    std::vector<Int> radix(n);
    for (std::size_t i = 0; i < n; ++i)
        radix[i] = obj.spec.kind == CoeffKind::PrimeField ? Int(obj.spec.p) : obj.gen_order(i);
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<Int> cur(n, 0);
    for (Int c = 0; c < count; ++c) {
        Matrix v(obj.spec, n, 1);
        for (std::size_t i = 0; i < n; ++i) v.set(i, 0, Rational(cur[i]));
        out.push_back(std::move(v));
        for (std::size_t i = n; i-- > 0;) {  // last coordinate fastest
            cur[i] += 1;
            if (cur[i] < radix[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

Int gl_order(std::int64_t p, std::size_t n) {
    Int order = 1, pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= p;
    Int pi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= pn - pi;
        pi *= p;
    }
    return order;
}

AutCount aut_group_order(const CoeffObject& obj, const Int& budget) {
    switch (obj.spec.kind) {
        case CoeffKind::PrimeField:
            return {true, gl_order(obj.spec.p, obj.rank)};
        case CoeffKind::Rationals:
            return obj.rank == 0 ? AutCount{true, 1} : AutCount{false, 0};
        case CoeffKind::Integers:
            break;
    }
    if (obj.rank >= 2) return {false, 0};
    CoeffObject tors = CoeffObject::z_module(0, obj.torsion);
    Int tors_auts = 1;
    if (!obj.torsion.empty()) {
        HomGroup endos = hom_group(tors, tors);
        tors_auts = 0;
        for (const auto& y : enumerate_elements(endos.obj, budget))
            if (is_isomorphism(endos.map_from_coords(y))) ++tors_auts;
    }
    if (obj.rank == 0) return {true, tors_auts};
    /* Z + T: triangular units: sign on Z, any hom Z -> T, any aut of T */
    return {true, 2 * tors.element_count() * tors_auts};
}

}  // namespace symchain
