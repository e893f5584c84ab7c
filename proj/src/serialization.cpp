#include "symchain/serialization.hpp"

#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace symchain {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void expect_keys(const Json& j, const std::set<std::string>& required,
                 const std::set<std::string>& optional, const std::string& where) {
    if (!j.is_object()) bad(where + ": expected a JSON object");
    for (const auto& [k, v] : j.items())
        if (!required.count(k) && !optional.count(k)) bad(where + ": unknown key \"" + k + "\"");
    for (const std::string& k : required)
        if (!j.contains(k)) bad(where + ": missing key \"" + k + "\"");
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad(where + ": not an integer");
        }
    }
    bad(where + ": not an integer");
}

std::size_t size_from_json(const Json& j, const std::string& where) {
    const Int v = int_from_json(j, where);
    if (v < 0 || v > (Int(1) << 32)) bad(where + ": out of range");
    return v.convert_to<std::size_t>();
}

int degree_from_key(const std::string& key, const std::string& where) {
    try {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) bad(where + ": bad degree key \"" + key + "\"");
        return k;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        bad(where + ": bad degree key \"" + key + "\"");
    }
}

}  // namespace

/* ---- coefficient backends ---------------------------------------------------------- */

Json spec_to_json(const CoefficientSpec& spec) {
    switch (spec.kind) {
        case CoeffKind::Integers: return "Z";
        case CoeffKind::Rationals: return "Q";
        case CoeffKind::PrimeField: return "F_" + std::to_string(spec.p);
    }
    bad("spec_to_json: unknown backend");
}

CoefficientSpec spec_from_json(const Json& j) {
    if (!j.is_string()) bad("coefficients: expected \"Z\", \"Q\" or \"F_<p>\"");
    const std::string s = j.get<std::string>();
    if (s == "Z") return CoefficientSpec::integers();
    if (s == "Q") return CoefficientSpec::rationals();
    if (s.rfind("F_", 0) == 0) {
        std::int64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoll(s.substr(2), &used);
            if (used != s.size() - 2) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            bad("coefficients: bad prime in \"" + s + "\"");
        }
        if (!is_prime(p)) bad("coefficients: " + std::to_string(p) + " is not prime");
        return CoefficientSpec::prime_field(p);
    }
    bad("coefficients: unknown backend \"" + s + "\"");
}

/* ---- matrices ------------------------------------------------------------------------ */

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const CoefficientSpec& spec, const Json& j) {
    expect_keys(j, {"rows", "cols", "entries"}, {}, "matrix");
    const std::size_t r = size_from_json(j.at("rows"), "matrix rows");
    const std::size_t c = size_from_json(j.at("cols"), "matrix cols");
    const Json& e = j.at("entries");
    if (!e.is_array() || e.size() != r) bad("matrix: entries must hold " + std::to_string(r) + " rows");
    Matrix m = Matrix::zero(spec, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const Json& row = e[i];
        if (!row.is_array() || row.size() != c)
            bad("matrix: row " + std::to_string(i) + " must hold " + std::to_string(c) + " entries");
        for (std::size_t k = 0; k < c; ++k) {
            if (!row[k].is_string()) bad("matrix: entries are decimal strings");
            m.set(i, k, parse_rational(row[k].get<std::string>()));
        }
    }
    return m;
}

/* ---- objects --------------------------------------------------------------------------- */

Json object_to_json(const CoeffObject& o) {
    if (o.spec.is_field()) return Json{{"dim", o.rank}};
    Json t = Json::array();
    for (const Int& n : o.torsion) t.push_back(n.str());
    return Json{{"rank", o.rank}, {"torsion", std::move(t)}};
}

CoeffObject object_from_json(const CoefficientSpec& spec, const Json& j) {
    if (spec.is_field()) {
        expect_keys(j, {"dim"}, {}, "object");
        return CoeffObject::vector_space(spec, size_from_json(j.at("dim"), "object dim"));
    }
    expect_keys(j, {"rank"}, {"torsion"}, "object");
    const std::size_t rank = size_from_json(j.at("rank"), "object rank");
    std::vector<Int> torsion;
    if (j.contains("torsion")) {
        if (!j.at("torsion").is_array()) bad("object: torsion must be an array");
        for (const Json& v : j.at("torsion")) {
            const Int n = int_from_json(v, "object torsion");
            if (n < 1) bad("object: torsion entries must be >= 1");
            torsion.push_back(n);
        }
    }
    // normalize an arbitrary torsion list to invariant factors
    const std::size_t t = torsion.size();
    Matrix w = Matrix::zero(CoefficientSpec::integers(), t, t);
    for (std::size_t i = 0; i < t; ++i) w.set(i, i, Rational(torsion[i]));
    const CoeffObject tor = cokernel_structure(CoefficientSpec::integers(), t, w).obj;
    return CoeffObject::z_module(rank + tor.rank, tor.torsion);
}

/* ---- complexes --------------------------------------------------------------------------- */

Json complex_to_json(const ChainComplex& a) {
    Json objects = Json::object();
    for (int k = a.lo(); k <= a.hi(); ++k)
        objects[std::to_string(k)] = object_to_json(a.object_at(k));
    Json diffs = Json::object();
    for (int k = a.lo(); k < a.hi(); ++k)
        diffs[std::to_string(k)] = matrix_to_json(a.diff(k).m);
    return Json{{"coefficients", spec_to_json(a.spec())},
                {"window", Json::array({a.lo(), a.hi()})},
                {"objects", std::move(objects)},
                {"differentials", std::move(diffs)}};
}

ChainComplex complex_from_json(const Json& j) {
    expect_keys(j, {"coefficients", "window"}, {"objects", "differentials"}, "complex");
    const CoefficientSpec spec = spec_from_json(j.at("coefficients"));
    const Json& w = j.at("window");
    if (!w.is_array() || w.size() != 2) bad("complex: window must be [lo, hi]");
    const Int lo_i = int_from_json(w[0], "window"), hi_i = int_from_json(w[1], "window");
    if (lo_i > hi_i) bad("complex: window must satisfy lo <= hi");
    if (hi_i - lo_i > 64) bad("complex: window too wide");
    const int lo = lo_i.convert_to<int>(), hi = hi_i.convert_to<int>();

    std::vector<CoeffObject> objects(static_cast<std::size_t>(hi - lo + 1), CoeffObject::zero(spec));
    if (j.contains("objects")) {
        if (!j.at("objects").is_object()) bad("complex: objects must map degrees to objects");
        for (const auto& [key, val] : j.at("objects").items()) {
            const int k = degree_from_key(key, "objects");
            if (k < lo || k > hi) bad("objects: degree " + key + " outside the window");
            objects[static_cast<std::size_t>(k - lo)] = object_from_json(spec, val);
        }
    }

    std::vector<ModuleMap> diffs;
    for (int k = lo; k < hi; ++k) {
        const CoeffObject& dom = objects[static_cast<std::size_t>(k + 1 - lo)];
        const CoeffObject& cod = objects[static_cast<std::size_t>(k - lo)];
        diffs.emplace_back(ModuleMap::zero(dom, cod));
    }
    if (j.contains("differentials")) {
        if (!j.at("differentials").is_object()) bad("complex: differentials must map degrees to matrices");
        for (const auto& [key, val] : j.at("differentials").items()) {
            const int k = degree_from_key(key, "differentials");
            if (k < lo || k >= hi) bad("differentials: degree " + key + " outside the window");
            const CoeffObject& dom = objects[static_cast<std::size_t>(k + 1 - lo)];
            const CoeffObject& cod = objects[static_cast<std::size_t>(k - lo)];
            const Matrix m = matrix_from_json(spec, val);
            if (m.rows() != cod.gen_count() || m.cols() != dom.gen_count())
                bad("differentials: d_" + key + " must be " + std::to_string(cod.gen_count()) +
                    " x " + std::to_string(dom.gen_count()));
            diffs[static_cast<std::size_t>(k - lo)] = ModuleMap(dom, cod, m);
        }
    }
    for (int k = lo; k + 1 < hi; ++k)
        if (!compose(diffs[static_cast<std::size_t>(k - lo)], diffs[static_cast<std::size_t>(k + 1 - lo)])
                 .is_zero())
            bad("complex: differentials do not compose to zero at degree " + std::to_string(k));
    return ChainComplex::build(spec, lo, hi, std::move(objects), std::move(diffs));
}

/* ---- chain maps and 2-morphisms -------------------------------------------------------------- */

Json chain_map_to_json(const ChainMap& f) {
    Json comps = Json::object();
    for (int k = f.dom().lo(); k <= f.dom().hi(); ++k)
        comps[std::to_string(k)] = matrix_to_json(f.comp(k).m);
    return Json{{"components", std::move(comps)}};
}

ChainMap chain_map_from_json(const ChainComplex& a, const ChainComplex& b, const Json& j) {
    expect_keys(j, {"components"}, {}, "chain map");
    std::vector<ModuleMap> comps;
    for (int k = a.lo(); k <= a.hi(); ++k)
        comps.push_back(ModuleMap::zero(a.object_at(k), b.object_at(k)));
    if (!j.at("components").is_object()) bad("chain map: components must map degrees to matrices");
    for (const auto& [key, val] : j.at("components").items()) {
        const int k = degree_from_key(key, "chain map");
        if (!a.in_window(k)) bad("chain map: degree " + key + " outside the window");
        const Matrix m = matrix_from_json(a.spec(), val);
        comps[static_cast<std::size_t>(k - a.lo())] = ModuleMap(a.object_at(k), b.object_at(k), m);
    }
    return ChainMap::build(a, b, std::move(comps));
}

Json two_morphism_to_json(const TwoCell& t) {
    Json comps = Json::object();
    for (int k = t.src.dom().lo(); k <= t.src.dom().hi(); ++k)
        comps[std::to_string(k)] = matrix_to_json(t.h.comp(k).m);
    return Json{{"domain", chain_map_to_json(t.src)}, {"homotopy", std::move(comps)}};
}

TwoCell two_morphism_from_json(const ChainComplex& a, const Json& j) {
    expect_keys(j, {"domain", "homotopy"}, {}, "2-morphism");
    const ChainMap dom = chain_map_from_json(a, a, j.at("domain"));
    std::vector<ModuleMap> comps;
    for (int k = a.lo(); k <= a.hi(); ++k)
        comps.push_back(ModuleMap::zero(a.object_at(k), a.object_at(k + 1)));
    if (!j.at("homotopy").is_object()) bad("2-morphism: homotopy must map degrees to matrices");
    for (const auto& [key, val] : j.at("homotopy").items()) {
        const int k = degree_from_key(key, "2-morphism");
        if (!a.in_window(k)) bad("2-morphism: degree " + key + " outside the window");
        const Matrix m = matrix_from_json(a.spec(), val);
        comps[static_cast<std::size_t>(k - a.lo())] = ModuleMap(a.object_at(k), a.object_at(k + 1), m);
    }
    return make_cell(dom, Homotopy::build(a, a, 1, std::move(comps)));
}

/* ---- skeletal 2-groups -------------------------------------------------------------------------- */

Json skeletal_to_json(const SkeletalTwoGroup& t) {
    Json g = Json::array();
    for (const auto& row : t.g.mult) g.push_back(row);
    Json a = Json::array();
    for (const Int& f : t.a.factors) a.push_back(f.str());
    Json act = Json::array();
    for (const auto& row : t.act) act.push_back(row);
    Json z = Json::array();
    for (const auto& plane : t.z) {
        Json p = Json::array();
        for (const auto& row : plane) p.push_back(row);
        z.push_back(std::move(p));
    }
    return Json{{"G", std::move(g)}, {"A", std::move(a)}, {"action", std::move(act)},
                {"z", std::move(z)}};
}

SkeletalTwoGroup skeletal_from_json(const Json& j) {
    expect_keys(j, {"G", "A", "action", "z"}, {}, "skeletal 2-group");
    SkeletalTwoGroup t;

    const Json& g = j.at("G");
    if (!g.is_array() || g.empty()) bad("skeletal: G must be a nonempty multiplication table");
    const std::size_t ng = g.size();
    t.g.mult.assign(ng, std::vector<std::size_t>(ng, 0));
    for (std::size_t i = 0; i < ng; ++i) {
        if (!g[i].is_array() || g[i].size() != ng) bad("skeletal: G table must be square");
        for (std::size_t k = 0; k < ng; ++k) {
            t.g.mult[i][k] = size_from_json(g[i][k], "skeletal G entry");
            if (t.g.mult[i][k] >= ng) bad("skeletal: G entry out of range");
        }
    }
    t.g.identity = ng;
    for (std::size_t e = 0; e < ng; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < ng && ok; ++i)
            ok = t.g.mult[e][i] == i && t.g.mult[i][e] == i;
        if (ok) {
            t.g.identity = e;
            break;
        }
    }
    if (t.g.identity == ng) bad("skeletal: G table has no identity");
    t.g.inverse.assign(ng, ng);
    for (std::size_t i = 0; i < ng; ++i) {
        for (std::size_t k = 0; k < ng; ++k)
            if (t.g.mult[i][k] == t.g.identity && t.g.mult[k][i] == t.g.identity) {
                t.g.inverse[i] = k;
                break;
            }
        if (t.g.inverse[i] == ng) bad("skeletal: G table has a non-invertible element");
        t.g.keys.push_back(std::to_string(i));
    }

    if (!j.at("A").is_array()) bad("skeletal: A must list invariant factors");
    for (const Json& v : j.at("A")) {
        const Int f = int_from_json(v, "skeletal A factor");
        if (f < 1) bad("skeletal: invariant factors must be positive");
        t.a.factors.push_back(f);
    }
    const std::size_t na = t.a.serial_count();

    const Json& act = j.at("action");
    if (!act.is_array() || act.size() != ng) bad("skeletal: action table must have one row per G element");
    t.act.assign(ng, std::vector<std::size_t>(na, 0));
    for (std::size_t i = 0; i < ng; ++i) {
        if (!act[i].is_array() || act[i].size() != na) bad("skeletal: action row has wrong length");
        for (std::size_t k = 0; k < na; ++k) {
            t.act[i][k] = size_from_json(act[i][k], "skeletal action entry");
            if (t.act[i][k] >= na) bad("skeletal: action entry out of range");
        }
    }

    const Json& z = j.at("z");
    if (!z.is_array() || z.size() != ng) bad("skeletal: z table must be G x G x G");
    t.z.assign(ng, std::vector<std::vector<std::size_t>>(ng, std::vector<std::size_t>(ng, 0)));
    for (std::size_t i = 0; i < ng; ++i) {
        if (!z[i].is_array() || z[i].size() != ng) bad("skeletal: z table must be G x G x G");
        for (std::size_t k = 0; k < ng; ++k) {
            if (!z[i][k].is_array() || z[i][k].size() != ng) bad("skeletal: z table must be G x G x G");
            for (std::size_t l = 0; l < ng; ++l) {
                t.z[i][k][l] = size_from_json(z[i][k][l], "skeletal z entry");
                if (t.z[i][k][l] >= na) bad("skeletal: z entry out of range");
            }
        }
    }

    const std::string why = skeletal_validate(t);
    if (!why.empty()) bad("skeletal: " + why);
    return t;
}

/* ---- report fragments ------------------------------------------------------------------------------ */

Json group_info_to_json(const GroupInfo& g) {
    Json j{{"status", to_string(g.status)}, {"finite", g.finite},
           {"description", g.description}};
    if (g.finite) j["order"] = g.order.str();
    if (!g.note.empty()) j["note"] = g.note;
    return j;
}

Json theorem_report_to_json(const TheoremReport& t) {
    Json pi0{{"generic", group_info_to_json(t.pi0_generic)}, {"match", to_string(t.pi0_match)}};
    Json pi1{{"generic", group_info_to_json(t.pi1_generic)}, {"match", to_string(t.pi1_match)}};
    if (t.split) {
        pi0["split"] = group_info_to_json(t.pi0_split);
        pi1["split"] = group_info_to_json(t.pi1_split);
    }
    Json j{{"split", t.split},
           {"pi0", std::move(pi0)},
           {"pi1", std::move(pi1)},
           {"action", Json{{"match", to_string(t.action_match)},
                           {"pairs_checked", t.action_pairs_checked}}},
           {"postnikov", t.postnikov.outcome == CheckOutcome::pass ? "trivial" : "unresolved"},
           {"theorem", to_string(t.theorem)}};
    if (!t.notes.empty()) j["notes"] = t.notes;
    return j;
}

Json cross_check_to_json(const CrossCheckReport& r) {
    Json checks = Json::array();
    for (const CheckItem& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    Json j{{"status", to_string(r.status)},
           {"map_count", r.map_count.str()},
           {"end_class_count", r.end_class_count.str()},
           {"pi0_order", r.pi0_order.str()},
           {"pi1_order", r.pi1_order.str()},
           {"checks", std::move(checks)},
           {"all_pass", r.all_pass()}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json sinh_report_to_json(const SinhReport& r) {
    Json checks = Json::array();
    for (const CheckItem& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"checks", std::move(checks)}, {"all_pass", r.all_pass()}};
}

Json homology_to_json(const ChainComplex& a) {
    Json h = Json::object();
    for (int k = a.lo(); k <= a.hi(); ++k)
        h[std::to_string(k)] = object_to_json(homology(a, k).Hq.obj);
    return Json{{"window", Json::array({a.lo(), a.hi()})}, {"homology", std::move(h)}};
}

/* ---- files --------------------------------------------------------------------------------- */

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
    return j;
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write " + path);
    out << j.dump(2) << '\n';
}

ChainComplex load_complex(const std::string& path) {
    try {
        return complex_from_json(load_json(path));
    } catch (const std::invalid_argument& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace symchain
