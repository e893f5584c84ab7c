#include <doctest.h>

#include <filesystem>
#include <functional>
#include <string>

#include "../tests/support/generators.hpp"
#include "symchain/serialization.hpp"

using namespace symchain;
using namespace symchain::testsupport;

namespace {

const CoefficientSpec F2 = CoefficientSpec::prime_field(2);
const CoefficientSpec F3 = CoefficientSpec::prime_field(3);

std::string fixture(const std::string& name) {
    return std::string(SYMCHAIN_FIXTURES_DIR) + "/" + name;
}

bool throws_mentioning(const std::function<void()>& f, const std::string& needle) {
    try {
        f();
    } catch (const std::invalid_argument& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("matrices round trip, including rational entries") {
    Matrix q = Matrix::zero(CoefficientSpec::rationals(), 2, 2);
    q.set(0, 0, Rational(2) / 5);
    q.set(1, 0, Rational(-7));
    const Json j = matrix_to_json(q);
    CHECK(j.at("entries")[0][0] == "2/5");
    CHECK(j.at("entries")[1][0] == "-7");
    CHECK(matrix_from_json(CoefficientSpec::rationals(), j) == q);

    const Matrix m2 = Matrix::from_int_rows(F2, {{1, 0}, {1, 1}});
    CHECK(matrix_from_json(F2, matrix_to_json(m2)) == m2);

    // entries reduce into the field on input
    Json wide = matrix_to_json(m2);
    wide["entries"][0][0] = "3";
    CHECK(matrix_from_json(F2, wide) == m2);

    CHECK(throws_mentioning([&] { (void)matrix_from_json(F2, Json{{"rows", 1}, {"cols", 1}}); },
                            "missing key"));
    CHECK(throws_mentioning(
        [&] {
            (void)matrix_from_json(
                F2, Json{{"rows", 2}, {"cols", 1}, {"entries", Json::array({Json::array({"1"})})}});
        },
        "must hold 2 rows"));
    CHECK(throws_mentioning(
        [&] {
            (void)matrix_from_json(
                F2, Json{{"rows", 1}, {"cols", 1}, {"entries", Json::array({Json::array({1})})}});
        },
        "decimal strings"));
    Json extra = matrix_to_json(m2);
    extra["color"] = "blue";
    CHECK(throws_mentioning([&] { (void)matrix_from_json(F2, extra); }, "unknown key"));
}

TEST_CASE("integer objects normalize arbitrary torsion lists to invariant factors") {
    const CoefficientSpec Z = CoefficientSpec::integers();
    auto obj = [&](const Json& torsion) {
        return object_from_json(Z, Json{{"rank", 0}, {"torsion", torsion}});
    };
    CHECK(obj(Json::array({"2", "3"})).torsion == std::vector<Int>{Int(6)});
    CHECK(obj(Json::array({"4", "2"})).torsion == std::vector<Int>{Int(2), Int(4)});
    CHECK(obj(Json::array({"1"})).torsion.empty());
    CHECK(obj(Json::array({"2", "2"})).torsion == std::vector<Int>{Int(2), Int(2)});
    CHECK(obj(Json::array({})).rank == 0);

    const CoeffObject mixed = object_from_json(Z, Json{{"rank", 2}, {"torsion", Json::array({"6", "4"})}});
    CHECK(mixed.rank == 2);
    CHECK(mixed.torsion == std::vector<Int>{Int(2), Int(12)});
    CHECK(object_from_json(Z, object_to_json(mixed)) == mixed);

    const CoeffObject v = object_from_json(F3, Json{{"dim", 3}});
    CHECK(v == CoeffObject::vector_space(F3, 3));
    CHECK(object_to_json(v) == Json{{"dim", 3}});

    CHECK(throws_mentioning([&] { (void)obj(Json::array({"0"})); }, ">= 1"));
    CHECK(throws_mentioning([&] { (void)object_from_json(F3, Json{{"rank", 1}}); }, "unknown key"));
    CHECK(throws_mentioning([&] { (void)object_from_json(Z, Json{{"dim", 1}}); }, "unknown key"));
}

TEST_CASE("complexes round trip through JSON and match the generator library") {
    for (const std::string name : {"zero_diff_f2.json", "zero_diff_f3.json", "ex1_k1.json",
                                   "ex1_k2.json", "ex1_k3.json", "split_exact_f2.json",
                                   "monic_f2.json", "epi_f2.json", "iso_f2.json"}) {
        const ChainComplex a = load_complex(fixture(name));
        CHECK(complex_from_json(complex_to_json(a)) == a);
    }
    CHECK(load_complex(fixture("ex1_k2.json")) == ex1_complex(2));
    CHECK(load_complex(fixture("zero_diff_f3.json")) == zero_diff_complex(F3, 0, {1, 1}));

    auto g = rng_of(17);
    for (int i = 0; i < 6; ++i) {
        const ChainComplex a = random_field_complex(i % 2 ? F2 : F3, 0, 2, {2, 1, 2}, g);
        CHECK(complex_from_json(complex_to_json(a)) == a);
    }
}

TEST_CASE("strict parsing rejects malformed complexes with precise messages") {
    CHECK(throws_mentioning([] { (void)spec_from_json("F_4"); }, "not prime"));
    CHECK(throws_mentioning([] { (void)spec_from_json("F_x"); }, "bad prime"));
    CHECK(throws_mentioning([] { (void)spec_from_json("R"); }, "unknown backend"));

    Json base = complex_to_json(zero_diff_complex(F2, 0, {1, 1}));
    Json j = base;
    j["flavor"] = "salty";
    CHECK(throws_mentioning([&] { (void)complex_from_json(j); }, "unknown key"));
    j = base;
    j["window"] = Json::array({1, 0});
    CHECK(throws_mentioning([&] { (void)complex_from_json(j); }, "lo <= hi"));
    j = base;
    j["objects"]["7"] = Json{{"dim", 1}};
    CHECK(throws_mentioning([&] { (void)complex_from_json(j); }, "outside the window"));
    j = base;
    j["differentials"]["0"] = matrix_to_json(Matrix::from_int_rows(F2, {{1, 0}}));
    CHECK(throws_mentioning([&] { (void)complex_from_json(j); }, "must be 1 x 1"));

    // differentials failing d.d = 0 name the offending degree
    CHECK(throws_mentioning([&] { (void)load_complex(fixture("bad_dd.json")); }, "degree 0"));
    CHECK(throws_mentioning([&] { (void)load_complex(fixture("bad_dd.json")); }, "bad_dd.json"));
}

TEST_CASE("chain maps and 2-morphisms round trip with their base complex") {
    const ChainComplex a = load_complex(fixture("zero_diff_f2.json"));
    const ChainMap f = ChainMap::identity(a);
    CHECK(chain_map_from_json(a, a, chain_map_to_json(f)) == f);

    const TwoCell u = two_morphism_from_json(a, load_json(fixture("cell_u.json")));
    CHECK(u.src == ChainMap::identity(a));
    CHECK(u.h.degree() == 1);
    CHECK(u.h.comp(0).m == Matrix::from_int_rows(F2, {{1}}));
    const TwoCell u2 = two_morphism_from_json(a, two_morphism_to_json(u));
    CHECK(u2.src == u.src);
    CHECK(u2.h == u.h);

    const TwoCell v = two_morphism_from_json(a, load_json(fixture("cell_v.json")));
    CHECK(v.h.comp(0).is_zero());

    CHECK(throws_mentioning(
        [&] {
            (void)chain_map_from_json(
                a, a, Json{{"components", Json{{"9", matrix_to_json(Matrix::zero(F2, 1, 1))}}}});
        },
        "outside the window"));
    CHECK(throws_mentioning([&] { (void)two_morphism_from_json(a, Json{{"domain", Json::object()}}); },
                            "missing key"));
}

TEST_CASE("skeletal 2-groups round trip and are validated on input") {
    SkeletalTwoGroup t;
    t.g.keys = {"0", "1"};
    t.g.identity = 0;
    t.g.mult = {{0, 1}, {1, 0}};
    t.g.inverse = {0, 1};
    t.a.factors = {Int(2)};
    t.act = {{0, 1}, {0, 1}};
    t.z.assign(2, std::vector<std::vector<std::size_t>>(2, std::vector<std::size_t>(2, 0)));
    t.z[1][1][1] = 1;  // the nontrivial class
    REQUIRE(skeletal_validate(t).empty());

    const SkeletalTwoGroup back = skeletal_from_json(skeletal_to_json(t));
    CHECK(back.g.mult == t.g.mult);
    CHECK(back.g.identity == 0);
    CHECK(back.g.inverse == t.g.inverse);
    CHECK(back.a.factors == t.a.factors);
    CHECK(back.act == t.act);
    CHECK(back.z == t.z);

    Json j = skeletal_to_json(t);
    j["z"][0][0][0] = 7;
    CHECK(throws_mentioning([&] { (void)skeletal_from_json(j); }, "out of range"));
    j = skeletal_to_json(t);
    j["G"] = Json::array({Json::array({0, 0}), Json::array({0, 0})});
    CHECK(throws_mentioning([&] { (void)skeletal_from_json(j); }, "no identity"));
    j = skeletal_to_json(t);
    j["action"][0] = Json::array({0});
    CHECK(throws_mentioning([&] { (void)skeletal_from_json(j); }, "wrong length"));
    j = skeletal_to_json(t);
    j["z"][0][1][1] = 1;  // breaks normalization, caught by the validator
    CHECK(throws_mentioning([&] { (void)skeletal_from_json(j); }, "skeletal:"));
}

TEST_CASE("report fragments spell statuses the way the tool documents them") {
    const TheoremReport split_report = theorem_verify(load_complex(fixture("split_exact_f2.json")));
    const Json js = theorem_report_to_json(split_report);
    CHECK(js.at("split") == true);
    CHECK(js.at("theorem") == "pass");
    CHECK(js.at("postnikov") == "trivial");

    const TheoremReport z_report = theorem_verify(ex1_complex(2));
    const Json jz = theorem_report_to_json(z_report);
    CHECK(jz.at("split") == false);
    CHECK(jz.at("theorem") == "not-applicable");
    CHECK(jz.at("postnikov") == "unresolved");
    CHECK(jz.at("pi0").at("generic").at("order") == "2");

    const Json jc = cross_check_to_json(cross_check(zero_diff_complex(F3, 0, {1, 1})));
    CHECK(jc.at("status") == "ok");
    CHECK(jc.at("all_pass") == true);
    CHECK(jc.at("pi0_order") == "4");
    CHECK(jc.at("pi1_order") == "3");
    CHECK(jc.at("checks").is_array());
    CHECK(!jc.at("checks").empty());

    GroupInfo info;
    info.finite = false;
    info.description = "infinite cyclic";
    CHECK(!group_info_to_json(info).contains("order"));
    info.finite = true;
    info.order = 6;
    CHECK(group_info_to_json(info).at("order") == "6");

    const Json jh = homology_to_json(ex1_complex(2));
    CHECK(jh.at("homology").at("1") == Json{{"rank", 0}, {"torsion", Json::array({"2"})}});
    CHECK(jh.at("homology").at("0") == Json{{"rank", 0}, {"torsion", Json::array()}});
    CHECK(jh.at("window") == Json::array({0, 2}));

    SinhReport sr;
    sr.checks.push_back({"demo", true, ""});
    const Json jr = sinh_report_to_json(sr);
    CHECK(jr.at("all_pass") == true);
    CHECK(jr.at("checks")[0].at("name") == "demo");
}

TEST_CASE("files save and load through the filesystem with path-tagged errors") {
    const std::filesystem::path tmp =
        std::filesystem::temp_directory_path() / "symchain_serialization_roundtrip.json";
    const Json j = complex_to_json(ex1_complex(3));
    save_json(tmp.string(), j);
    CHECK(load_json(tmp.string()) == j);
    CHECK(load_complex(tmp.string()) == ex1_complex(3));
    std::filesystem::remove(tmp);

    CHECK(throws_mentioning([] { (void)load_json("/nonexistent/nowhere.json"); }, "cannot open"));
}
