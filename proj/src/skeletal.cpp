#include "symchain/skeletal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symchain {

/* ---- finite abelian groups -------------------------------------------------------- */

Int FinAbGroup::order() const {
    Int n = 1;
    for (const Int& f : factors) {
        if (f < 1) throw MathError("FinAbGroup: invariant factors must be positive");
        n *= f;
    }
    return n;
}

std::size_t FinAbGroup::serial_count() const {
    const Int n = order();
    if (n > (Int(1) << 26)) throw MathError("FinAbGroup: order too large for serial tables");
    return n.convert_to<std::size_t>();
}

std::vector<Int> FinAbGroup::coords_of(std::size_t serial) const {
    Int s = serial;
    std::vector<Int> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        c[i] = s % factors[i];
        s /= factors[i];
    }
    if (s != 0) throw std::out_of_range("FinAbGroup::coords_of");
    return c;
}

std::size_t FinAbGroup::serial_of(const std::vector<Int>& coords) const {
    if (coords.size() != factors.size()) throw std::invalid_argument("FinAbGroup::serial_of");
    Int s = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Int c = coords[i] % factors[i];
        if (c < 0) c += factors[i];
        s = s * factors[i] + c;
    }
    return s.convert_to<std::size_t>();
}

std::size_t FinAbGroup::add(std::size_t x, std::size_t y) const {
    std::vector<Int> a = coords_of(x), b = coords_of(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return serial_of(a);
}

std::size_t FinAbGroup::neg(std::size_t x) const {
    std::vector<Int> a = coords_of(x);
    for (Int& v : a) v = -v;
    return serial_of(a);
}

/* ---- skeletal model --------------------------------------------------------------- */

namespace {

bool table_shape_ok(const SkeletalTwoGroup& t) {
    const std::size_t ng = t.g.order(), na = t.a.serial_count();
    if (t.act.size() != ng) return false;
    for (const auto& row : t.act) {
        if (row.size() != na) return false;
        for (std::size_t v : row)
            if (v >= na) return false;
    }
    if (t.z.size() != ng) return false;
    for (const auto& plane : t.z) {
        if (plane.size() != ng) return false;
        for (const auto& row : plane) {
            if (row.size() != ng) return false;
            for (std::size_t v : row)
                if (v >= na) return false;
        }
    }
    return true;
}

}  // namespace

std::string skeletal_validate(const SkeletalTwoGroup& t) {
    if (!valid_group_table(t.g)) return "object table is not a group";
    if (!table_shape_ok(t)) return "action or associator table has wrong shape";
    const std::size_t ng = t.g.order(), na = t.a.serial_count();
    // action by automorphisms
    for (std::size_t g = 0; g < ng; ++g) {
        std::vector<bool> hit(na, false);
        for (std::size_t x = 0; x < na; ++x) {
            if (hit[t.act[g][x]]) return "action is not bijective";
            hit[t.act[g][x]] = true;
            for (std::size_t y = 0; y < na; ++y)
                if (t.act[g][t.a.add(x, y)] != t.a.add(t.act[g][x], t.act[g][y]))
                    return "action is not additive";
        }
    }
    for (std::size_t x = 0; x < na; ++x)
        if (t.act[t.g.identity][x] != x) return "identity does not act trivially";
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t h = 0; h < ng; ++h)
            for (std::size_t x = 0; x < na; ++x)
                if (t.act[t.g.mult[g][h]][x] != t.act[g][t.act[h][x]])
                    return "action is not multiplicative";
    if (!cochain_normalized(t, t.z)) return "associator cochain is not normalized";
    if (!cocycle_check(t, t.z)) return "associator cochain is not closed";
    return "";
}

SkelMor skel_identity(const SkeletalTwoGroup&, std::size_t g) { return SkelMor{0, g}; }

SkelMor skel_compose(const SkeletalTwoGroup& t, const SkelMor& after, const SkelMor& first) {
    if (after.g != first.g) throw std::invalid_argument("skel_compose: endpoint mismatch");
    return SkelMor{t.a.add(after.a, first.a), first.g};
}

SkelMor skel_inverse(const SkeletalTwoGroup& t, const SkelMor& m) {
    return SkelMor{t.a.neg(m.a), m.g};
}

std::size_t skel_tensor_obj(const SkeletalTwoGroup& t, std::size_t g1, std::size_t g2) {
    return t.g.mult[g1][g2];
}

SkelMor skel_tensor(const SkeletalTwoGroup& t, const SkelMor& m1, const SkelMor& m2) {
    return SkelMor{t.a.add(m1.a, t.act[m1.g][m2.a]), t.g.mult[m1.g][m2.g]};
}

SkelMor skel_associator(const SkeletalTwoGroup& t, std::size_t g1, std::size_t g2,
                        std::size_t g3) {
    return SkelMor{t.z[g1][g2][g3], t.g.mult[t.g.mult[g1][g2]][g3]};
}

bool skel_pentagon_holds(const SkeletalTwoGroup& t, std::size_t g1, std::size_t g2,
                         std::size_t g3, std::size_t g4) {
    const SkelMor lhs = skel_compose(t, skel_associator(t, g1, g2, t.g.mult[g3][g4]),
                                     skel_associator(t, t.g.mult[g1][g2], g3, g4));
    const SkelMor rhs = skel_compose(
        t, skel_tensor(t, skel_identity(t, g1), skel_associator(t, g2, g3, g4)),
        skel_compose(t, skel_associator(t, g1, t.g.mult[g2][g3], g4),
                     skel_tensor(t, skel_associator(t, g1, g2, g3), skel_identity(t, g4))));
    return lhs == rhs;
}

/* ---- cocycle calculus --------------------------------------------------------------- */

bool cocycle_check(const SkeletalTwoGroup& t, const CochainTable3& z) {
    const std::size_t ng = t.g.order();
    for (std::size_t g1 = 0; g1 < ng; ++g1)
        for (std::size_t g2 = 0; g2 < ng; ++g2)
            for (std::size_t g3 = 0; g3 < ng; ++g3)
                for (std::size_t g4 = 0; g4 < ng; ++g4) {
                    std::size_t s = t.act[g1][z[g2][g3][g4]];
                    s = t.a.sub(s, z[t.g.mult[g1][g2]][g3][g4]);
                    s = t.a.add(s, z[g1][t.g.mult[g2][g3]][g4]);
                    s = t.a.sub(s, z[g1][g2][t.g.mult[g3][g4]]);
                    s = t.a.add(s, z[g1][g2][g3]);
                    if (s != 0) return false;
                }
    return true;
}

bool cocycle_check(const SkeletalTwoGroup& t) { return cocycle_check(t, t.z); }

bool cochain_normalized(const SkeletalTwoGroup& t, const CochainTable3& z) {
    const std::size_t ng = t.g.order(), e = t.g.identity;
    for (std::size_t g1 = 0; g1 < ng; ++g1)
        for (std::size_t g2 = 0; g2 < ng; ++g2)
            if (z[e][g1][g2] != 0 || z[g1][e][g2] != 0 || z[g1][g2][e] != 0) return false;
    return true;
}

CochainTable3 coboundary_of(const SkeletalTwoGroup& t, const CochainTable2& c) {
    const std::size_t ng = t.g.order();
    CochainTable3 out(ng, std::vector<std::vector<std::size_t>>(ng, std::vector<std::size_t>(ng, 0)));
    for (std::size_t g1 = 0; g1 < ng; ++g1)
        for (std::size_t g2 = 0; g2 < ng; ++g2)
            for (std::size_t g3 = 0; g3 < ng; ++g3) {
                std::size_t s = t.act[g1][c[g2][g3]];
                s = t.a.sub(s, c[t.g.mult[g1][g2]][g3]);
                s = t.a.add(s, c[g1][t.g.mult[g2][g3]]);
                s = t.a.sub(s, c[g1][g2]);
                out[g1][g2][g3] = s;
            }
    return out;
}

std::string to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::yes: return "yes";
        case SearchVerdict::no: return "no";
        default: return "undecided";
    }
}

CohomologousResult cohomologous_check(const SkeletalTwoGroup& t, const CochainTable3& z1,
                                      const CochainTable3& z2, const Int& bound) {
    const std::size_t ng = t.g.order(), e = t.g.identity;
    const Int na = t.a.order();
    CohomologousResult res;

    CochainTable3 diff(ng, std::vector<std::vector<std::size_t>>(ng, std::vector<std::size_t>(ng)));
    bool diff_zero = true, diff_normalized = true;
    for (std::size_t g1 = 0; g1 < ng; ++g1)
        for (std::size_t g2 = 0; g2 < ng; ++g2)
            for (std::size_t g3 = 0; g3 < ng; ++g3) {
                diff[g1][g2][g3] = t.a.sub(z1[g1][g2][g3], z2[g1][g2][g3]);
                if (diff[g1][g2][g3] != 0) {
                    diff_zero = false;
                    if (g1 == e || g2 == e || g3 == e) diff_normalized = false;
                }
            }
    if (diff_zero) {
        res.verdict = SearchVerdict::yes;
        res.witness = CochainTable2(ng, std::vector<std::size_t>(ng, 0));
        res.note = "difference is zero";
        return res;
    }

    // candidate positions: the free entries of the searched 2-cochains
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    auto space_size = [&](bool normalized) {
        Int n = 1;
        const Int cells = normalized ? Int(ng - 1) * Int(ng - 1) : Int(ng) * Int(ng);
        for (Int i = 0; i < cells; ++i) {
            n *= na;
            if (n > bound) return n;
        }
        return n;
    };
    bool normalized_mode = false;
    if (space_size(false) <= bound) {
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < ng; ++j) pos.emplace_back(i, j);
    } else if (diff_normalized && space_size(true) <= bound) {
        // normalized cochains suffice for a normalized difference
        normalized_mode = true;
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < ng; ++j)
                if (i != e && j != e) pos.emplace_back(i, j);
    } else {
        res.verdict = SearchVerdict::undecided;
        res.note = "undecided at configured bound " + bound.str();
        return res;
    }

    const std::size_t radix = t.a.serial_count();
    CochainTable2 c(ng, std::vector<std::size_t>(ng, 0));
    std::vector<std::size_t> digits(pos.size(), 0);
    while (true) {
        if (coboundary_of(t, c) == diff) {
            res.verdict = SearchVerdict::yes;
            res.witness = c;
            res.note = normalized_mode ? "witness found (normalized search)" : "witness found";
            return res;
        }
        std::size_t i = digits.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++digits[i] < radix) {
                c[pos[i].first][pos[i].second] = digits[i];
                done = false;
                break;
            }
            digits[i] = 0;
            c[pos[i].first][pos[i].second] = 0;
        }
        if (done) break;
    }
    res.verdict = SearchVerdict::no;
    res.note = normalized_mode ? "exhausted all normalized 2-cochains"
                               : "exhausted all 2-cochains";
    return res;
}

/* ---- unit-loop transport ------------------------------------------------------------- */

OracleCell delta_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& u) {
    return c.tensor_cells(u, c.identity_cell_at(x));
}

OracleCell gamma_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& u) {
    return c.tensor_cells(c.identity_cell_at(x), u);
}

namespace {

// first object xs (ascending index) with xs (x) x in the unit component
// (left = true) or x (x) xs in the unit component (left = false), together
// with the first connecting cell to the unit object
std::pair<std::size_t, OracleCell> adjoint_cell(const ConcreteTwoGroup& c, std::size_t x,
                                                bool left) {
    const std::size_t e = c.component_of(c.unit_object());
    for (std::size_t xs = 0; xs < c.objects().size(); ++xs) {
        const std::size_t prod = left ? c.tensor(xs, x) : c.tensor(x, xs);
        if (c.component_of(prod) != e) continue;
        auto cells = c.cells_between(prod, c.unit_object());
        if (cells.empty()) continue;
        return {xs, cells.front()};
    }
    throw MathError("adjoint_cell: object has no pseudoinverse");
}

}  // namespace

OracleCell gamma_inverse_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& phi) {
    auto [xs, eps] = adjoint_cell(c, x, true);
    const OracleCell mid = c.tensor_cells(c.identity_cell_at(xs), phi);
    return c.vcompose_cells(eps, c.vcompose_cells(mid, c.vinverse_cell(eps)));
}

OracleCell delta_inverse_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& phi) {
    auto [xs, eta] = adjoint_cell(c, x, false);
    const OracleCell mid = c.tensor_cells(phi, c.identity_cell_at(xs));
    return c.vcompose_cells(eta, c.vcompose_cells(mid, c.vinverse_cell(eta)));
}

OracleCell component_action_cell(const ConcreteTwoGroup& c, std::size_t x, const OracleCell& u) {
    return gamma_inverse_cell(c, x, delta_cell(c, x, u));
}

/* ---- extraction ------------------------------------------------------------------------ */

namespace {

struct LoopIndex {
    std::vector<OracleCell> loop;            // serial -> cell
    std::map<std::string, std::size_t> pos;  // cell key -> serial

    std::size_t serial(const OracleCell& u) const {
        auto it = pos.find(coord_key(u.h));
        if (it == pos.end()) throw MathError("LoopIndex: cell is not a unit automorphism");
        return it->second;
    }
};

LoopIndex build_loop_index(const ConcreteTwoGroup& c, const FinAbGroup& a,
                           const std::vector<OracleCell>& basis) {
    LoopIndex li;
    const std::size_t n = a.serial_count();
    for (std::size_t s = 0; s < n; ++s) {
        const std::vector<Int> coords = a.coords_of(s);
        OracleCell acc = c.identity_cell_at(c.unit_object());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (Int r = 0; r < coords[i]; ++r) acc = c.vcompose_cells(acc, basis[i]);
        li.loop.push_back(acc);
        if (!li.pos.emplace(coord_key(acc.h), s).second)
            throw MathError("build_loop_index: basis does not generate freely");
    }
    return li;
}

}  // namespace

SinhExtraction sinh_extract(const ConcreteTwoGroup& c) {
    SinhExtraction e;
    const std::size_t ng = c.component_count();
    const std::size_t eunit = c.component_of(c.unit_object());

    // representatives: serialization-minimal object per component, the unit
    // object for its own component
    e.choices.rep.assign(ng, c.objects().size());
    for (std::size_t i = 0; i < c.objects().size(); ++i) {
        std::size_t& r = e.choices.rep[c.component_of(i)];
        if (r == c.objects().size()) r = i;
    }
    e.choices.rep[eunit] = c.unit_object();

    for (std::size_t i = 0; i < c.objects().size(); ++i) {
        const std::size_t r = e.choices.rep[c.component_of(i)];
        if (i == r)
            e.choices.iota.push_back(c.identity_cell_at(i));
        else
            e.choices.iota.push_back(c.cells_between(i, r).front());
    }

    // pi0 as a group table on component serials
    GroupTable g;
    g.identity = eunit;
    for (std::size_t i = 0; i < ng; ++i) g.keys.push_back(std::to_string(i));
    g.mult.assign(ng, std::vector<std::size_t>(ng, 0));
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            g.mult[i][j] = c.component_of(c.tensor(e.choices.rep[i], e.choices.rep[j]));
    g.inverse.assign(ng, ng);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            if (g.mult[i][j] == g.identity && g.mult[j][i] == g.identity) {
                g.inverse[i] = j;
                break;
            }
    e.model.g = g;

    // pi1 as an elementary abelian group with a deterministic basis
    const std::vector<OracleCell> loops =
        c.cells_between(c.unit_object(), c.unit_object());
    const Int p = c.complex().spec().p;
    std::vector<OracleCell> basis;
    Matrix span;
    for (const OracleCell& u : loops) {
        bool zero = true;
        for (std::size_t r = 0; r < u.h.rows() && zero; ++r)
            if (u.h.at(r, 0) != 0) zero = false;
        if (zero) continue;
        const Matrix cand = basis.empty() ? u.h : hcat(span, u.h);
        if (rank(cand) == basis.size() + 1) {
            basis.push_back(u);
            span = cand;
        }
    }
    e.model.a.factors.assign(basis.size(), p);
    if (e.model.a.serial_count() != loops.size())
        throw MathError("sinh_extract: unit automorphisms are not elementary abelian");
    const LoopIndex li = build_loop_index(c, e.model.a, basis);
    e.loop = li.loop;

    // action of components on unit automorphisms
    e.model.act.assign(ng, std::vector<std::size_t>(e.loop.size(), 0));
    for (std::size_t gi = 0; gi < ng; ++gi)
        for (std::size_t s = 0; s < e.loop.size(); ++s)
            e.model.act[gi][s] =
                li.serial(component_action_cell(c, e.choices.rep[gi], e.loop[s]));

    // transition cells mu[g][g']: x_{gg'} -> x_g (x) x_{g'}
    e.mu.assign(ng, std::vector<OracleCell>());
    for (std::size_t gi = 0; gi < ng; ++gi)
        for (std::size_t gj = 0; gj < ng; ++gj)
            e.mu[gi].push_back(
                c.vinverse_cell(e.choices.iota[c.tensor(e.choices.rep[gi], e.choices.rep[gj])]));

    // associator cochain from the transition square (strict target associator)
    e.model.z.assign(ng, std::vector<std::vector<std::size_t>>(ng, std::vector<std::size_t>(ng, 0)));
    for (std::size_t g1 = 0; g1 < ng; ++g1)
        for (std::size_t g2 = 0; g2 < ng; ++g2)
            for (std::size_t g3 = 0; g3 < ng; ++g3) {
                const std::size_t g12 = g.mult[g1][g2], g23 = g.mult[g2][g3];
                const std::size_t x1 = e.choices.rep[g1], x3 = e.choices.rep[g3];
                const OracleCell step1 = e.mu[g12][g3];
                const OracleCell step2 = c.tensor_cells(e.mu[g1][g2], c.identity_cell_at(x3));
                const OracleCell step3 = c.tensor_cells(
                    c.identity_cell_at(x1), e.choices.iota[c.tensor(e.choices.rep[g2], x3)]);
                const OracleCell step4 =
                    e.choices.iota[c.tensor(x1, e.choices.rep[g23])];
                const OracleCell fa = c.vcompose_cells(
                    step4, c.vcompose_cells(step3, c.vcompose_cells(step2, step1)));
                e.model.z[g1][g2][g3] = li.serial(
                    delta_inverse_cell(c, e.choices.rep[g.mult[g12][g3]], fa));
            }
    return e;
}

/* ---- verification ----------------------------------------------------------------------- */

bool SinhReport::all_pass() const {
    for (const CheckItem& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

void report(SinhReport& r, const std::string& name, bool pass, const std::string& detail) {
    r.checks.push_back(CheckItem{name, pass, detail});
}

}  // namespace

SinhReport verify_equivalence(const SinhExtraction& e, const ConcreteTwoGroup& c) {
    SinhReport r;
    const std::size_t ng = e.model.g.order();
    const std::size_t na = e.loop.size();
    const auto& rep = e.choices.rep;

    const std::string why = skeletal_validate(e.model);
    report(r, "skeletal model valid", why.empty(), why.empty() ? "group, action, cocycle" : why);
    report(r, "associator cochain normalized and closed",
           cochain_normalized(e.model, e.model.z) && cocycle_check(e.model),
           "checked all argument tuples");

    {
        bool ok = true;
        for (std::size_t g1 = 0; g1 < ng && ok; ++g1)
            for (std::size_t g2 = 0; g2 < ng && ok; ++g2)
                for (std::size_t g3 = 0; g3 < ng && ok; ++g3)
                    for (std::size_t g4 = 0; g4 < ng && ok; ++g4)
                        ok = skel_pentagon_holds(e.model, g1, g2, g3, g4);
        report(r, "pentagon commutes in the skeletal model", ok, "all object 4-tuples");
    }

    // loop index for translating unit automorphisms back to serials
    std::map<std::string, std::size_t> loop_pos;
    for (std::size_t s = 0; s < na; ++s) loop_pos[coord_key(e.loop[s].h)] = s;
    auto serial_of = [&](const OracleCell& u) {
        auto it = loop_pos.find(coord_key(u.h));
        if (it == loop_pos.end()) throw MathError("verify_equivalence: unexpected loop");
        return it->second;
    };
    auto F_mor = [&](const SkelMor& m) { return delta_cell(c, rep[m.g], e.loop[m.a]); };

    {
        bool ok = true;
        std::string detail = "objects and morphisms return to themselves";
        for (std::size_t g = 0; g < ng && ok; ++g) {
            if (c.component_of(rep[g]) != g) {
                ok = false;
                detail = "a representative lies in the wrong component";
            }
            for (std::size_t s = 0; s < na && ok; ++s)
                if (serial_of(delta_inverse_cell(c, rep[g], F_mor(SkelMor{s, g}))) != s) {
                    ok = false;
                    detail = "a morphism does not return to itself";
                }
        }
        if (rep[e.model.g.identity] != c.unit_object()) {
            ok = false;
            detail = "the unit component representative is not the unit object";
        }
        report(r, "retraction after extraction is the identity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail = "composition and identities preserved";
        for (std::size_t g = 0; g < ng && ok; ++g) {
            if (!c.cells_equal(F_mor(skel_identity(e.model, g)), c.identity_cell_at(rep[g]))) {
                ok = false;
                detail = "identity morphism not preserved";
            }
            for (std::size_t s1 = 0; s1 < na && ok; ++s1)
                for (std::size_t s2 = 0; s2 < na && ok; ++s2) {
                    const OracleCell lhs = c.vcompose_cells(F_mor(SkelMor{s2, g}), F_mor(SkelMor{s1, g}));
                    const OracleCell rhs =
                        F_mor(skel_compose(e.model, SkelMor{s2, g}, SkelMor{s1, g}));
                    if (!c.cells_equal(lhs, rhs)) {
                        ok = false;
                        detail = "composition not preserved";
                    }
                }
        }
        report(r, "functor preserves composition and identities", ok, detail);
    }

    {
        bool ok = true;
        std::string detail = "choice cells natural on every 2-cell";
        for (std::size_t x = 0; x < c.objects().size() && ok; ++x)
            for (std::size_t y = 0; y < c.objects().size() && ok; ++y) {
                if (c.component_of(x) != c.component_of(y)) continue;
                const std::size_t g = c.component_of(x);
                for (const OracleCell& phi : c.cells_between(x, y)) {
                    const OracleCell w = c.vcompose_cells(
                        e.choices.iota[y], c.vcompose_cells(phi, c.vinverse_cell(e.choices.iota[x])));
                    const std::size_t s = serial_of(delta_inverse_cell(c, rep[g], w));
                    const OracleCell lhs = c.vcompose_cells(F_mor(SkelMor{s, g}), e.choices.iota[x]);
                    const OracleCell rhs = c.vcompose_cells(e.choices.iota[y], phi);
                    if (!c.cells_equal(lhs, rhs)) {
                        ok = false;
                        detail = "naturality square fails";
                        break;
                    }
                }
            }
        report(r, "choice cells form a natural isomorphism", ok, detail);
    }

    {
        bool ok = true;
        std::string detail = "transition cells natural in both arguments";
        for (std::size_t g1 = 0; g1 < ng && ok; ++g1)
            for (std::size_t g2 = 0; g2 < ng && ok; ++g2)
                for (std::size_t s1 = 0; s1 < na && ok; ++s1)
                    for (std::size_t s2 = 0; s2 < na && ok; ++s2) {
                        const OracleCell lhs = c.vcompose_cells(
                            c.tensor_cells(F_mor(SkelMor{s1, g1}), F_mor(SkelMor{s2, g2})),
                            e.mu[g1][g2]);
                        const OracleCell rhs = c.vcompose_cells(
                            e.mu[g1][g2],
                            F_mor(skel_tensor(e.model, SkelMor{s1, g1}, SkelMor{s2, g2})));
                        if (!c.cells_equal(lhs, rhs)) {
                            ok = false;
                            detail = "transition naturality fails";
                        }
                    }
        report(r, "transition cells natural in both arguments", ok, detail);
    }

    {
        bool ok = true;
        std::string detail = "coherence identity holds for all triples";
        for (std::size_t g1 = 0; g1 < ng && ok; ++g1)
            for (std::size_t g2 = 0; g2 < ng && ok; ++g2)
                for (std::size_t g3 = 0; g3 < ng && ok; ++g3) {
                    const std::size_t g12 = e.model.g.mult[g1][g2];
                    const std::size_t g23 = e.model.g.mult[g2][g3];
                    const OracleCell fa = F_mor(skel_associator(e.model, g1, g2, g3));
                    const OracleCell lhs = c.vcompose_cells(
                        c.tensor_cells(c.identity_cell_at(rep[g1]), e.mu[g2][g3]),
                        c.vcompose_cells(e.mu[g1][g23], fa));
                    const OracleCell rhs = c.vcompose_cells(
                        c.tensor_cells(e.mu[g1][g2], c.identity_cell_at(rep[g3])),
                        e.mu[g12][g3]);
                    if (!c.cells_equal(lhs, rhs)) {
                        ok = false;
                        detail = "coherence fails at a triple";
                    }
                }
        report(r, "transition cells satisfy the coherence identity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail = "action independent of the representing object";
        for (std::size_t x = 0; x < c.objects().size() && ok; ++x) {
            const std::size_t g = c.component_of(x);
            for (std::size_t s = 0; s < na && ok; ++s)
                if (serial_of(component_action_cell(c, x, e.loop[s])) != e.model.act[g][s]) {
                    ok = false;
                    detail = "action depends on the representing object";
                }
        }
        report(r, "component action independent of representatives", ok, detail);
    }

    {
        bool ok = true;
        std::string detail = "unit-loop transport bijective on every object";
        for (std::size_t x = 0; x < c.objects().size() && ok; ++x)
            for (std::size_t s = 0; s < na && ok; ++s) {
                const OracleCell u = e.loop[s];
                if (serial_of(delta_inverse_cell(c, x, delta_cell(c, x, u))) != s ||
                    serial_of(gamma_inverse_cell(c, x, gamma_cell(c, x, u))) != s) {
                    ok = false;
                    detail = "transport round trip fails";
                }
            }
        report(r, "unit-loop transport invertible on every object", ok, detail);
    }

    return r;
}

}  // namespace symchain
