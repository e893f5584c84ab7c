#include "symchain/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace symchain {

std::size_t EnumerationBudget::max_dim(const CoefficientSpec& spec) const {
    if (max_dim_override != 0) return max_dim_override;
    if (spec.kind == CoeffKind::PrimeField) {
        if (spec.p == 2) return 14;
        if (spec.p == 3) return 9;
        // keep the enumerated point count near 2^14 for other primes
        std::size_t d = 0;
        Int points = 1;
        while (points * spec.p <= (Int(1) << 14)) {
            points *= spec.p;
            ++d;
        }
        return d;
    }
    return 0;
}

namespace {

void require_prime_field(const CoefficientSpec& spec, const char* what) {
    if (spec.kind != CoeffKind::PrimeField)
        throw std::invalid_argument(std::string(what) + ": requires a finite prime-field backend");
}

/* Stacked entry layout for graded maps (A_k -> B_{k+deg}), k over A's window. */
struct StackLayout {
    std::vector<std::size_t> rows, cols, off;
    std::size_t total = 0;
};

StackLayout layout_for(const ChainComplex& a, const ChainComplex& b, int deg) {
    StackLayout l;
    for (int k = a.lo(); k <= a.hi(); ++k) {
        const std::size_t r = b.object_at(k + deg).gen_count();
        const std::size_t c = a.object_at(k).gen_count();
        l.off.push_back(l.total);
        l.rows.push_back(r);
        l.cols.push_back(c);
        l.total += r * c;
    }
    return l;
}

Matrix stack_components(const CoefficientSpec& spec, const StackLayout& l,
                        const std::vector<Matrix>& comps) {
    Matrix v = Matrix::zero(spec, l.total, 1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const Matrix vi = vec(comps[i]);
        for (std::size_t r = 0; r < vi.rows(); ++r) v.set(l.off[i] + r, 0, vi.at(r, 0));
    }
    return v;
}

std::vector<Matrix> unstack_components(const CoefficientSpec& spec, const StackLayout& l,
                                       const Matrix& v) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < l.rows.size(); ++i) {
        Matrix vi = Matrix::zero(spec, l.rows[i] * l.cols[i], 1);
        for (std::size_t r = 0; r < vi.rows(); ++r) vi.set(r, 0, v.at(l.off[i] + r, 0));
        out.push_back(unvec(vi, l.rows[i], l.cols[i]));
    }
    return out;
}

void paste_add(Matrix& big, const Matrix& piece, std::size_t r0, std::size_t c0) {
    const CoefficientSpec& spec = big.spec();
    for (std::size_t i = 0; i < piece.rows(); ++i)
        for (std::size_t j = 0; j < piece.cols(); ++j)
            big.set(r0 + i, c0 + j, raw_add(spec, big.at(r0 + i, c0 + j), piece.at(i, j)));
}

/* Commuting-square system: stacked degree-0 entries v with C v = 0 exactly
 * for chain maps (equation per k: d^B_k . f_{k+1} - f_k . d^A_k = 0). */
Matrix commuting_matrix(const ChainComplex& a, const ChainComplex& b, const StackLayout& l0) {
    const CoefficientSpec& spec = a.spec();
    // The square at k = a.lo() - 1 (d^B_{lo-1} . f_lo = 0) carries content when
    // b's differential reaches below a's window, e.g. for b a translate of a.
    std::size_t eq_total = 0;
    std::vector<std::size_t> eq_off;
    for (int k = a.lo() - 1; k < a.hi(); ++k) {
        eq_off.push_back(eq_total);
        eq_total += b.object_at(k).gen_count() * a.object_at(k + 1).gen_count();
    }
    Matrix C = Matrix::zero(spec, eq_total, l0.total);
    for (int k = a.lo() - 1; k < a.hi(); ++k) {
        const std::size_t e = static_cast<std::size_t>(k - (a.lo() - 1));
        const std::size_t nb = b.object_at(k).gen_count();
        const std::size_t na1 = a.object_at(k + 1).gen_count();
        // + (I x d^B_k) acting on vec(f_{k+1})
        paste_add(C, kron(Matrix::identity(spec, na1), b.diff(k).m), eq_off[e], l0.off[e]);
        // - (d^A_k^T x I) acting on vec(f_k)
        if (k >= a.lo())
            paste_add(C, scale(scalar_of(spec, -1), kron(transpose(a.diff(k).m), Matrix::identity(spec, nb))),
                      eq_off[e], l0.off[e - 1]);
    }
    return C;
}

/* Boundary operator on stacked entries: degree-n elements to degree-(n-1),
 * block k of the image = d^B_{k+n-1} . h_k - (-1)^n h_{k-1} . d^A_{k-1}. */
Matrix hom_boundary_matrix(const ChainComplex& a, const ChainComplex& b, int n,
                           const StackLayout& l_to, const StackLayout& l_from) {
    const CoefficientSpec& spec = a.spec();
    Matrix B = Matrix::zero(spec, l_to.total, l_from.total);
    const long sgn = (n % 2 == 0) ? -1 : 1;  // -(-1)^n
    for (int k = a.lo(); k <= a.hi(); ++k) {
        const std::size_t i = static_cast<std::size_t>(k - a.lo());
        const std::size_t na = a.object_at(k).gen_count();
        const std::size_t nb = b.object_at(k + n - 1).gen_count();
        paste_add(B, kron(Matrix::identity(spec, na), b.diff(k + n - 1).m), l_to.off[i], l_from.off[i]);
        if (k > a.lo())
            paste_add(B,
                      scale(scalar_of(spec, sgn),
                            kron(transpose(a.diff(k - 1).m), Matrix::identity(spec, nb))),
                      l_to.off[i], l_from.off[i - 1]);
    }
    return B;
}

/* Reduced column echelon basis of the column space (for coset reduction). */
Matrix echelon_cols(const Matrix& m) {
    RrefResult r = rref(transpose(m));
    const std::size_t rk = r.pivots.size();
    Matrix Rt = transpose(r.R);
    return submatrix(Rt, 0, 0, Rt.rows(), rk);
}

std::size_t pivot_row(const Matrix& E, std::size_t j) {
    for (std::size_t i = 0; i < E.rows(); ++i)
        if (E.at(i, j) != 0) return i;
    throw MathError("pivot_row: zero column in echelon basis");
}

Matrix coset_reduce(const CoefficientSpec& spec, Matrix v, const Matrix& E) {
    for (std::size_t j = 0; j < E.cols(); ++j) {
        const std::size_t pr = pivot_row(E, j);
        const Rational c = v.at(pr, 0);
        if (c == 0) continue;
        for (std::size_t i = 0; i < v.rows(); ++i)
            v.set(i, 0, raw_sub(spec, v.at(i, 0), raw_mul(spec, c, E.at(i, j))));
    }
    return v;
}

/* All points K . c for c over F_p^(cols of K); deterministic odometer order. */
std::vector<Matrix> field_points(const Matrix& K, std::int64_t p) {
    const CoefficientSpec& spec = K.spec();
    const std::size_t d = K.cols();
    std::vector<Matrix> out;
    std::vector<long> c(d, 0);
    while (true) {
        Matrix v = Matrix::zero(spec, K.rows(), 1);
        for (std::size_t j = 0; j < d; ++j) {
            if (c[j] == 0) continue;
            const Rational cj = canonical_value(spec, Rational(c[j]));
            for (std::size_t i = 0; i < K.rows(); ++i)
                v.set(i, 0, raw_add(spec, v.at(i, 0), raw_mul(spec, cj, K.at(i, j))));
        }
        out.push_back(std::move(v));
        std::size_t j = d;
        bool done = true;
        while (j > 0) {
            --j;
            if (++c[j] < p) {
                done = false;
                break;
            }
            c[j] = 0;
        }
        if (done) return out;
    }
}

std::string map_key(const ChainMap& f) {
    std::ostringstream os;
    for (int k = f.dom().lo(); k <= f.dom().hi(); ++k) {
        const Matrix& m = f.comp(k).m;
        os << '[';
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) os << rational_to_string(m.at(i, j)) << ',';
        os << ']';
    }
    return os.str();
}

ChainMap map_from_stack(const ChainComplex& a, const ChainComplex& b, const StackLayout& l0,
                        const Matrix& v) {
    std::vector<Matrix> raw = unstack_components(a.spec(), l0, v);
    std::vector<ModuleMap> comps;
    for (int k = a.lo(); k <= a.hi(); ++k)
        comps.emplace_back(a.object_at(k), b.object_at(k),
                           raw[static_cast<std::size_t>(k - a.lo())]);
    return ChainMap::build(a, b, std::move(comps));
}

Matrix stack_of_map(const ChainComplex& a, const StackLayout& l0, const ChainMap& f) {
    std::vector<Matrix> comps;
    for (int k = a.lo(); k <= a.hi(); ++k) comps.push_back(f.comp(k).m);
    return stack_components(a.spec(), l0, comps);
}

}  // namespace

std::vector<ChainMap> enumerate_chain_maps(const ChainComplex& a, const ChainComplex& b,
                                           const EnumerationBudget& budget) {
    require_prime_field(a.spec(), "enumerate_chain_maps");
    require_same_backend(a.spec(), b.spec());
    const StackLayout l0 = layout_for(a, b, 0);
    const Matrix C = commuting_matrix(a, b, l0);
    const Matrix K = kernel_basis(C);
    if (K.cols() > budget.max_dim(a.spec()))
        throw BudgetExceeded("enumerate_chain_maps: solution space dimension " +
                             std::to_string(K.cols()) + " exceeds budget " +
                             std::to_string(budget.max_dim(a.spec())));
    std::vector<ChainMap> out;
    for (const Matrix& v : field_points(K, a.spec().p)) out.push_back(map_from_stack(a, b, l0, v));
    return out;
}

MapClasses enumerate_classes(const ChainComplex& a, const ChainComplex& b,
                             const EnumerationBudget& budget) {
    MapClasses mc;
    mc.maps = enumerate_chain_maps(a, b, budget);
    const CoefficientSpec& spec = a.spec();
    const StackLayout l0 = layout_for(a, b, 0);
    const StackLayout l1 = layout_for(a, b, 1);
    const Matrix B1 = hom_boundary_matrix(a, b, 1, l0, l1);
    const Matrix E = echelon_cols(B1);

    std::vector<std::string> keys;
    keys.reserve(mc.maps.size());
    for (const ChainMap& f : mc.maps)
        keys.push_back(coord_key(coset_reduce(spec, stack_of_map(a, l0, f), E)));
    std::vector<std::string> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = i;

    mc.class_keys = sorted;
    mc.class_rep.assign(sorted.size(), mc.maps.size());
    for (std::size_t i = 0; i < mc.maps.size(); ++i) {
        const std::size_t c = pos.at(keys[i]);
        mc.class_of_map.push_back(c);
        if (mc.class_rep[c] == mc.maps.size()) mc.class_rep[c] = i;
    }
    return mc;
}

/* ---- concrete 2-group ---------------------------------------------------------- */

std::size_t ConcreteTwoGroup::object_index(const ChainMap& f) const {
    const std::string key = map_key(f);
    auto it = std::lower_bound(object_keys_.begin(), object_keys_.end(), key);
    if (it == object_keys_.end() || *it != key)
        throw MathError("ConcreteTwoGroup::object_index: map is not an object");
    return static_cast<std::size_t>(it - object_keys_.begin());
}

std::size_t ConcreteTwoGroup::tensor(std::size_t i, std::size_t j) const {
    const std::uint64_t cache_key = (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
    if (auto it = tensor_cache_.find(cache_key); it != tensor_cache_.end()) return it->second;
    // Objects are closed under composition, so key the degreewise products
    // directly instead of rebuilding (and revalidating) a chain map.
    std::ostringstream os;
    for (int k = a_.lo(); k <= a_.hi(); ++k) {
        const Matrix m = objects_[i].comp(k).m * objects_[j].comp(k).m;
        os << '[';
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) os << rational_to_string(m.at(r, c)) << ',';
        os << ']';
    }
    const std::string key = os.str();
    const auto it = std::lower_bound(object_keys_.begin(), object_keys_.end(), key);
    if (it == object_keys_.end() || *it != key)
        return object_index(compose(objects_[i], objects_[j]));  // canonical error path
    const std::size_t out = static_cast<std::size_t>(it - object_keys_.begin());
    tensor_cache_.emplace(cache_key, out);
    return out;
}

std::size_t ConcreteTwoGroup::component_rep(std::size_t c) const {
    for (std::size_t i = 0; i < comp_of_.size(); ++i)
        if (comp_of_[i] == c) return i;
    throw std::out_of_range("ConcreteTwoGroup::component_rep");
}

Matrix ConcreteTwoGroup::reduce_cell(const Matrix& v) const {
    return coset_reduce(a_.spec(), v, e2_);
}

Matrix ConcreteTwoGroup::vec_map(const ChainMap& f) const {
    StackLayout l0 = layout_for(a_, a_, 0);
    return stack_of_map(a_, l0, f);
}

OracleCell ConcreteTwoGroup::identity_cell_at(std::size_t i) const {
    StackLayout l1 = layout_for(a_, a_, 1);
    return OracleCell{i, i, Matrix::zero(a_.spec(), l1.total, 1)};
}

std::vector<OracleCell> ConcreteTwoGroup::cells_between(std::size_t i, std::size_t j) const {
    const Matrix target = vec_map(objects_[j]) - vec_map(objects_[i]);
    auto part = solve(b1_, target);
    if (!part) return {};
    std::vector<OracleCell> out;
    std::vector<std::string> seen;
    for (const Matrix& w : field_points(b1_kernel_, a_.spec().p)) {
        const Matrix red = reduce_cell(*part + w);
        const std::string key = coord_key(red);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.push_back(OracleCell{i, j, red});
    }
    std::sort(out.begin(), out.end(),
              [](const OracleCell& x, const OracleCell& y) { return coord_key(x.h) < coord_key(y.h); });
    return out;
}

bool ConcreteTwoGroup::cells_equal(const OracleCell& x, const OracleCell& y) const {
    return x.src == y.src && x.dst == y.dst && x.h == y.h;
}

OracleCell ConcreteTwoGroup::vcompose_cells(const OracleCell& b, const OracleCell& a) const {
    if (a.dst != b.src) throw std::invalid_argument("vcompose_cells: endpoints do not chain");
    return OracleCell{a.src, b.dst, reduce_cell(a.h + b.h)};
}

OracleCell ConcreteTwoGroup::vinverse_cell(const OracleCell& c) const {
    return OracleCell{c.dst, c.src, reduce_cell(-c.h)};
}

Homotopy ConcreteTwoGroup::cell_witness(const OracleCell& c) const {
    StackLayout l1 = layout_for(a_, a_, 1);
    std::vector<Matrix> raw = unstack_components(a_.spec(), l1, c.h);
    std::vector<ModuleMap> comps;
    for (int k = a_.lo(); k <= a_.hi(); ++k)
        comps.emplace_back(a_.object_at(k), a_.object_at(k + 1),
                           raw[static_cast<std::size_t>(k - a_.lo())]);
    return Homotopy::build(a_, a_, 1, std::move(comps));
}

TwoCell ConcreteTwoGroup::cell_as_two_cell(const OracleCell& c) const {
    return make_cell(objects_[c.src], cell_witness(c));
}

OracleCell ConcreteTwoGroup::tensor_cells(const OracleCell& left, const OracleCell& right) const {
    const TwoCell prod = hcompose(cell_as_two_cell(left), cell_as_two_cell(right), HVariant::A);
    std::vector<Matrix> comps;
    for (int k = a_.lo(); k <= a_.hi(); ++k) comps.push_back(prod.h.comp(k).m);
    StackLayout l1 = layout_for(a_, a_, 1);
    return OracleCell{tensor(left.src, right.src), tensor(left.dst, right.dst),
                      reduce_cell(stack_components(a_.spec(), l1, comps))};
}

OracleCell ConcreteTwoGroup::whisker_object_cell(std::size_t i, const OracleCell& c) const {
    return tensor_cells(identity_cell_at(i), c);
}

OracleCell ConcreteTwoGroup::whisker_cell_object(const OracleCell& c, std::size_t i) const {
    return tensor_cells(c, identity_cell_at(i));
}

ConcreteTwoGroup build_equiv_2group(const ChainComplex& a, const EnumerationBudget& budget) {
    require_prime_field(a.spec(), "build_equiv_2group");
    ConcreteTwoGroup g;
    g.a_ = a;
    g.budget_ = budget;

    MapClasses mc = enumerate_classes(a, a, budget);
    const std::size_t nclass = mc.class_count();

    // class composition by reduction of composed representatives
    const CoefficientSpec& spec = a.spec();
    const StackLayout l0 = layout_for(a, a, 0);
    const StackLayout l1 = layout_for(a, a, 1);
    const Matrix B1 = hom_boundary_matrix(a, a, 1, l0, l1);
    const Matrix E0 = echelon_cols(B1);
    std::map<std::string, std::size_t> class_pos;
    for (std::size_t c = 0; c < nclass; ++c) class_pos[mc.class_keys[c]] = c;
    auto class_of = [&](const ChainMap& f) {
        return class_pos.at(coord_key(coset_reduce(spec, stack_of_map(a, l0, f), E0)));
    };
    const std::size_t id_class = class_of(ChainMap::identity(a));

    // units by exhaustive pairing of classes
    std::vector<bool> unit_class(nclass, false);
    for (std::size_t i = 0; i < nclass; ++i) {
        const ChainMap& fi = mc.maps[mc.class_rep[i]];
        for (std::size_t j = 0; j < nclass; ++j) {
            const ChainMap& fj = mc.maps[mc.class_rep[j]];
            if (class_of(compose(fi, fj)) == id_class && class_of(compose(fj, fi)) == id_class) {
                unit_class[i] = true;
                break;
            }
        }
    }

    // objects: every map whose class is a unit class, in serialized order
    std::vector<std::pair<std::string, std::size_t>> keyed;
    for (std::size_t m = 0; m < mc.maps.size(); ++m)
        if (unit_class[mc.class_of_map[m]]) keyed.emplace_back(map_key(mc.maps[m]), m);
    std::sort(keyed.begin(), keyed.end());
    if (Int(keyed.size()) > budget.max_objects)
        throw BudgetExceeded("build_equiv_2group: object count " + std::to_string(keyed.size()) +
                             " exceeds budget " + budget.max_objects.str());

    // components: unit classes renumbered in class-key order
    std::vector<std::size_t> comp_id(nclass, nclass);
    std::size_t next = 0;
    for (std::size_t c = 0; c < nclass; ++c)
        if (unit_class[c]) comp_id[c] = next++;
    g.comp_count_ = next;

    for (const auto& [key, m] : keyed) {
        g.objects_.push_back(mc.maps[m]);
        g.object_keys_.push_back(key);
        g.comp_of_.push_back(comp_id[mc.class_of_map[m]]);
    }
    g.unit_ = g.object_index(ChainMap::identity(a));

    g.b1_ = B1;
    g.b1_kernel_ = kernel_basis(B1);
    if (g.b1_kernel_.cols() > budget.max_dim(spec))
        throw BudgetExceeded("build_equiv_2group: homotopy space dimension exceeds budget");
    const StackLayout l2 = layout_for(a, a, 2);
    g.e2_ = echelon_cols(hom_boundary_matrix(a, a, 2, l1, l2));
    for (std::size_t o : l1.off) g.h_offsets_.push_back(o);
    return g;
}

/* ---- cross-check ------------------------------------------------------------------ */

bool CrossCheckReport::all_pass() const {
    if (status != AnalysisStatus::ok) return false;  // nothing was verified
    for (const CheckItem& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

void add_check(CrossCheckReport& r, const std::string& name, bool pass, const std::string& detail) {
    r.checks.push_back(CheckItem{name, pass, detail});
}

Int int_pow(std::int64_t base, const Int& exp) {
    Int out = 1;
    for (Int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

CrossCheckReport cross_check(const ChainComplex& a, const EnumerationBudget& budget,
                             const EnumLimits& lim) {
    CrossCheckReport r;
    if (a.spec().kind != CoeffKind::PrimeField) {
        r.status = AnalysisStatus::not_applicable;
        r.note = "oracle requires a finite prime-field backend";
        return r;
    }
    try {
        const ChainComplex a1 = translate(a, 1);

        // independent enumerations
        MapClasses end_mc = enumerate_classes(a, a, budget);
        MapClasses shift_mc = enumerate_classes(a, a1, budget);
        r.map_count = Int(end_mc.maps.size());
        r.end_class_count = Int(end_mc.class_count());
        r.pi1_order = Int(shift_mc.class_count());

        // algebraic path
        HomClasses end_cls(a, 0);
        HomClasses shift_cls(a, 1);

        add_check(r, "chain-map count equals |Z0(End)|",
                  Int(end_mc.maps.size()) == end_cls.h0_data().cycles.element_count(),
                  "oracle " + Int(end_mc.maps.size()).str() + " vs cycles " +
                      end_cls.h0_data().cycles.element_count().str());
        add_check(r, "endo class count equals |H0(End)|",
                  Int(end_mc.class_count()) == end_cls.class_count(),
                  "oracle " + Int(end_mc.class_count()).str() + " vs H0 " +
                      end_cls.class_count().str());
        add_check(r, "shift class count equals |H0(Hom(A,A[1]))|",
                  Int(shift_mc.class_count()) == shift_cls.class_count(),
                  "oracle " + Int(shift_mc.class_count()).str() + " vs H0 " +
                      shift_cls.class_count().str());

        // partitions agree map-by-map
        {
            bool ok = true;
            std::string detail = "all enumerated maps land in matching classes";
            std::map<std::size_t, std::string> engine_key_of_class;
            for (std::size_t m = 0; m < end_mc.maps.size() && ok; ++m) {
                const std::string ek = coord_key(end_cls.class_of(end_mc.maps[m]));
                auto [it, fresh] = engine_key_of_class.try_emplace(end_mc.class_of_map[m], ek);
                if (!fresh && it->second != ek) {
                    ok = false;
                    detail = "oracle class " + std::to_string(end_mc.class_of_map[m]) +
                             " split by the algebraic partition";
                }
            }
            std::vector<std::string> distinct;
            for (auto& [c, k] : engine_key_of_class) distinct.push_back(k);
            std::sort(distinct.begin(), distinct.end());
            if (ok && std::unique(distinct.begin(), distinct.end()) != distinct.end()) {
                ok = false;
                detail = "two oracle classes merged by the algebraic partition";
            }
            add_check(r, "class partitions coincide", ok, detail);
        }

        // the 2-group and pi0
        ConcreteTwoGroup g2 = build_equiv_2group(a, budget);
        r.pi0_order = Int(g2.component_count());

        UnitGroup units = unit_group(end_cls, lim);
        if (units.status == AnalysisStatus::ok) {
            add_check(r, "unit class count equals engine pi0 order",
                      g2.component_count() == units.table.order(),
                      "oracle " + std::to_string(g2.component_count()) + " vs engine " +
                          std::to_string(units.table.order()));
            // table homomorphism through the class bijection
            bool ok = true;
            std::string detail = "composition tables agree through the class matching";
            std::vector<std::size_t> to_engine(g2.component_count());
            for (std::size_t c = 0; c < g2.component_count() && ok; ++c) {
                const ChainMap& f = g2.objects()[g2.component_rep(c)];
                try {
                    to_engine[c] = units.index_of(end_cls.class_of(f));
                } catch (const MathError&) {
                    ok = false;
                    detail = "an oracle unit class is not a unit for the engine";
                }
            }
            for (std::size_t c1 = 0; c1 < g2.component_count() && ok; ++c1)
                for (std::size_t c2 = 0; c2 < g2.component_count() && ok; ++c2) {
                    const ChainMap& f1 = g2.objects()[g2.component_rep(c1)];
                    const ChainMap& f2 = g2.objects()[g2.component_rep(c2)];
                    const std::size_t prod =
                        units.index_of(end_cls.class_of(compose(f1, f2)));
                    if (prod != units.table.mult[to_engine[c1]][to_engine[c2]]) {
                        ok = false;
                        detail = "product of oracle classes disagrees with the engine table";
                    }
                }
            add_check(r, "pi0 multiplication tables agree", ok, detail);
        }

        // pi1 through the 2-group: cells on the unit object
        {
            const auto loops = g2.cells_between(g2.unit_object(), g2.unit_object());
            add_check(r, "2-cells on the unit equal pi1 count",
                      Int(loops.size()) == Int(shift_mc.class_count()),
                      "unit loops " + std::to_string(loops.size()) + " vs shift classes " +
                          std::to_string(shift_mc.class_count()));
        }

        // tensor structure: strictly unital everywhere, associative on sampled triples
        {
            bool ok = true;
            std::string detail = "tensor unital and associative";
            for (std::size_t i = 0; i < g2.objects().size() && ok; ++i)
                if (g2.tensor(g2.unit_object(), i) != i || g2.tensor(i, g2.unit_object()) != i) {
                    ok = false;
                    detail = "tensor not strictly unital";
                }
            std::mt19937_64 rng(lim.seed);
            const std::size_t n = g2.objects().size();
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            const Int full = Int(n) * Int(n) * Int(n);
            const std::size_t samples =
                full <= lim.max_pairs ? static_cast<std::size_t>(full.convert_to<std::uint64_t>())
                                      : static_cast<std::size_t>(lim.max_pairs.convert_to<std::uint64_t>());
            for (std::size_t t = 0; t < samples && ok; ++t) {
                std::size_t i, j, k;
                if (full <= lim.max_pairs) {
                    i = t / (n * n);
                    j = (t / n) % n;
                    k = t % n;
                } else {
                    i = pick(rng);
                    j = pick(rng);
                    k = pick(rng);
                }
                if (g2.tensor(g2.tensor(i, j), k) != g2.tensor(i, g2.tensor(j, k))) {
                    ok = false;
                    detail = "tensor associativity failed on objects";
                }
            }
            add_check(r, "object tensor strictly associative and unital", ok, detail);
        }

        // action: oracle conjugation against the engine evaluator
        if (units.status == AnalysisStatus::ok) {
            AdditiveClasses pi1 = additive_classes(shift_cls, lim);
            if (pi1.status == AnalysisStatus::ok) {
                bool ok = true;
                std::string detail = "action values agree on all class pairs";
                for (std::size_t c = 0; c < g2.component_count() && ok; ++c) {
                    const ChainMap& f = g2.objects()[g2.component_rep(c)];
                    const std::size_t ei = units.index_of(end_cls.class_of(f));
                    const ChainMap& f_inv = units.reps[units.table.inverse[ei]];
                    for (std::size_t s = 0; s < shift_mc.class_count() && ok; ++s) {
                        const ChainMap& g = shift_mc.maps[shift_mc.class_rep[s]];
                        const ChainMap acted = compose(translate_map(f_inv, 1), compose(g, f));
                        const Matrix via_engine =
                            act_on_class(shift_cls, f, f_inv, g);
                        if (!(shift_cls.class_of(acted) == via_engine)) {
                            ok = false;
                            detail = "engine action disagrees with direct conjugation";
                        }
                    }
                }
                add_check(r, "action agrees with conjugation by representatives", ok, detail);
            }
        }

        // split-path formulas when the complex splits
        if (auto s = split_symmetry(a)) {
            add_check(r, "pi0 order equals product of |Aut(H_k)|",
                      s->pi0_count.finite && Int(g2.component_count()) == s->pi0_count.order,
                      "oracle " + std::to_string(g2.component_count()) + " vs product " +
                          s->pi0_count.order.str());
            Int expected = 1;
            for (std::size_t k = 0; k + 1 < s->h.size(); ++k)
                expected *= int_pow(a.spec().p, Int(s->h[k].gen_count() * s->h[k + 1].gen_count()));
            add_check(r, "pi1 order equals product of |Hom(H_k,H_{k+1})|",
                      Int(shift_mc.class_count()) == expected,
                      "oracle " + std::to_string(shift_mc.class_count()) + " vs product " +
                          expected.str());
            // conjugation formula straight on oracle representatives
            bool ok = true;
            std::string detail = "degreewise conjugation matches on all sampled pairs";
            for (std::size_t c = 0; c < g2.component_count() && ok; ++c) {
                const ChainMap& f = g2.objects()[g2.component_rep(c)];
                const auto psi = psi_of(*s, f);
                std::vector<ModuleMap> psi_inv;
                bool invertible = true;
                for (const ModuleMap& pm : psi) {
                    auto inv = inverse_map(pm);
                    if (!inv) {
                        invertible = false;
                        break;
                    }
                    psi_inv.push_back(*inv);
                }
                if (!invertible) {
                    ok = false;
                    detail = "a unit class has a non-invertible homology block";
                    break;
                }
                // any quasi-inverse representative works; use the engine table when
                // available, otherwise pair within the oracle
                for (std::size_t s2 = 0; s2 < shift_mc.class_count() && ok; ++s2) {
                    const ChainMap& g = shift_mc.maps[shift_mc.class_rep[s2]];
                    ChainMap f_inv = units.status == AnalysisStatus::ok
                                         ? units.reps[units.table.inverse[units.index_of(
                                               end_cls.class_of(f))]]
                                         : ChainMap::identity(a);
                    if (units.status != AnalysisStatus::ok) {
                        ok = false;
                        detail = "engine unit table unavailable for conjugation check";
                        break;
                    }
                    const ChainMap acted = compose(translate_map(f_inv, 1), compose(g, f));
                    if (!(xi_of(*s, acted) == conj_action(*s, psi, xi_of(*s, g)))) {
                        ok = false;
                        detail = "oracle action differs from degreewise conjugation";
                    }
                }
            }
            add_check(r, "action equals degreewise conjugation on homology", ok, detail);
        }
    } catch (const BudgetExceeded& e) {
        r.status = AnalysisStatus::unresolved;
        r.note = e.what();
    }
    return r;
}

}  // namespace symchain
