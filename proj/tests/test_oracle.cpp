#include <doctest.h>

#include "../tests/support/generators.hpp"
#include "symchain/oracle.hpp"

using namespace symchain;
using namespace symchain::testsupport;

namespace {
const CoefficientSpec F2 = CoefficientSpec::prime_field(2);
const CoefficientSpec F3 = CoefficientSpec::prime_field(3);
}  // namespace

TEST_CASE("enumeration budgets: backend defaults and explicit overrides") {
    const EnumerationBudget def;
    CHECK(def.max_dim(F2) == 14);
    CHECK(def.max_dim(F3) == 9);
    CHECK(def.max_dim(CoefficientSpec::prime_field(5)) == 6);
    CHECK(def.max_dim(CoefficientSpec::prime_field(7)) == 4);

    EnumerationBudget tight;
    tight.max_dim_override = 3;
    CHECK(tight.max_dim(F2) == 3);
    CHECK(tight.max_dim(CoefficientSpec::prime_field(7)) == 3);
}

TEST_CASE("chain-map enumeration: counts, determinism and refusals") {
    const ChainComplex a = zero_diff_complex(F2, 0, {1, 1});
    const std::vector<ChainMap> maps = enumerate_chain_maps(a, a);
    CHECK(maps.size() == 4);  // no commuting constraints under zero differentials
    const std::vector<ChainMap> again = enumerate_chain_maps(a, a);
    REQUIRE(again.size() == maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) CHECK(maps[i] == again[i]);

    const ChainComplex big = zero_diff_complex(F2, 0, {4, 4});
    CHECK_THROWS_AS(enumerate_chain_maps(big, big), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_chain_maps(big, big), MathError);  // BudgetExceeded is a MathError

    const ChainComplex zc = ex1_complex(2);
    CHECK_THROWS_AS(enumerate_chain_maps(zc, zc), std::invalid_argument);
}

TEST_CASE("class partition agrees with the canonicalized mapping complex") {
    // no differentials: every map is its own class
    const ChainComplex z3 = zero_diff_complex(F3, 0, {1, 1});
    const MapClasses mc = enumerate_classes(z3, z3);
    CHECK(mc.maps.size() == 9);
    CHECK(mc.class_count() == 9);
    for (std::size_t c = 0; c < mc.class_count(); ++c) CHECK(mc.class_of_map[mc.class_rep[c]] == c);

    // contractible two-term complex: two maps, one class
    const ChainComplex contractible = two_term_complex(F2, Matrix::from_int_rows(F2, {{1}}));
    const MapClasses cc = enumerate_classes(contractible, contractible);
    CHECK(cc.maps.size() == 2);
    CHECK(cc.class_count() == 1);

    // scrambled split complex: oracle partition == algebraic class function
    auto g = rng_of(91);
    const SplitInstance inst = sample_split_instance(1, g);
    const MapClasses sc = enumerate_classes(inst.cx, inst.cx);
    const HomClasses cls(inst.cx, 0);
    CHECK(Int(sc.class_count()) == cls.class_count());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t i = static_cast<std::size_t>(rand_in(g, 0, static_cast<long>(sc.maps.size()) - 1));
        const std::size_t j = static_cast<std::size_t>(rand_in(g, 0, static_cast<long>(sc.maps.size()) - 1));
        const bool same_oracle = sc.class_of_map[i] == sc.class_of_map[j];
        CHECK(same_oracle == (cls.class_of(sc.maps[i]) == cls.class_of(sc.maps[j])));
        CHECK(same_oracle == homotopy_between(cls.hom_data(), sc.maps[i], sc.maps[j]).has_value());
    }
}

TEST_CASE("the concrete 2-group multiplies, whiskers and transports witnesses") {
    const ChainComplex a = zero_diff_complex(F3, 0, {1, 1});
    const ConcreteTwoGroup c = build_equiv_2group(a);
    REQUIRE(c.objects().size() == 4);
    CHECK(c.component_count() == 4);  // no homotopies connect distinct objects here
    CHECK(c.objects()[c.unit_object()] == ChainMap::identity(a));

    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(c.object_index(c.objects()[i]) == i);
        CHECK(c.component_of(c.component_rep(c.component_of(i))) == c.component_of(i));
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(c.objects()[c.tensor(i, j)] == compose(c.objects()[i], c.objects()[j]));
            if (i != j) CHECK(c.cells_between(i, j).empty());
        }
    }

    const std::size_t u = c.unit_object();
    const std::vector<OracleCell> loops = c.cells_between(u, u);
    REQUIRE(loops.size() == 3);

    // vertical composition makes the loops a cyclic group of order 3
    const OracleCell id_u = c.identity_cell_at(u);
    auto find_loop = [&](const OracleCell& x) {
        for (std::size_t i = 0; i < loops.size(); ++i)
            if (c.cells_equal(x, loops[i])) return i;
        FAIL("composite loop not found among the enumerated loops");
        return std::size_t(0);
    };
    const std::size_t e = find_loop(id_u);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(find_loop(c.vcompose_cells(loops[i], id_u)) == i);
        CHECK(find_loop(c.vcompose_cells(c.vinverse_cell(loops[i]), loops[i])) == e);
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t ij = find_loop(c.vcompose_cells(loops[i], loops[j]));
            CHECK(ij == find_loop(c.vcompose_cells(loops[j], loops[i])));
            // Eckmann-Hilton: tensor and vertical composition agree on unit loops
            CHECK(find_loop(c.tensor_cells(loops[i], loops[j])) == ij);
        }
    }

    // whiskering endpoints
    for (std::size_t x = 0; x < 4; ++x) {
        const OracleCell w = c.whisker_object_cell(x, loops[0]);
        CHECK(w.src == c.tensor(x, u));
        CHECK(w.dst == c.tensor(x, u));
        const OracleCell w2 = c.whisker_cell_object(loops[0], x);
        CHECK(w2.src == c.tensor(u, x));
    }

    // reconstructed witnesses are genuine homotopies with the right endpoints
    for (const OracleCell& cell : loops) {
        const TwoCell t = c.cell_as_two_cell(cell);
        CHECK(t.src == c.objects()[cell.src]);
        CHECK(cell_target(t) == c.objects()[cell.dst]);
        CHECK(c.cell_witness(cell).degree() == 1);
    }
}

TEST_CASE("cross-check report validates the algebraic path end to end") {
    // two-step zero-differential complex over F_3
    const CrossCheckReport r3 = cross_check(zero_diff_complex(F3, 0, {1, 1}));
    CHECK(r3.status == AnalysisStatus::ok);
    CHECK(r3.all_pass());
    CHECK(r3.map_count == 9);
    CHECK(r3.end_class_count == 9);
    CHECK(r3.pi0_order == 4);
    CHECK(r3.pi1_order == 3);
    for (const CheckItem& item : r3.checks) CHECK(item.pass);

    // contractible complex: everything collapses
    const CrossCheckReport rc = cross_check(two_term_complex(F2, Matrix::from_int_rows(F2, {{1}})));
    CHECK(rc.status == AnalysisStatus::ok);
    CHECK(rc.all_pass());
    CHECK(rc.map_count == 2);
    CHECK(rc.end_class_count == 1);
    CHECK(rc.pi0_order == 1);
    CHECK(rc.pi1_order == 1);

    // scrambled split instances stay inside the default budgets and pass
    auto g = rng_of(92);
    for (std::size_t idx : {0, 8}) {
        const SplitInstance inst = sample_split_instance(idx, g);
        const CrossCheckReport r = cross_check(inst.cx);
        CHECK(r.status == AnalysisStatus::ok);
        CHECK(r.all_pass());
        Int pi0_expected(1), pi1_expected(1);
        for (std::size_t i = 0; i < inst.h_dims.size(); ++i) {
            pi0_expected *= gl_order(inst.p, inst.h_dims[i]);
            if (i + 1 < inst.h_dims.size())
                for (std::size_t t = 0; t < inst.h_dims[i] * inst.h_dims[i + 1]; ++t)
                    pi1_expected *= Int(inst.p);
        }
        CHECK(r.pi0_order == pi0_expected);
        CHECK(r.pi1_order == pi1_expected);
    }

    // a forced tiny budget refuses rather than guessing
    EnumerationBudget tiny;
    tiny.max_dim_override = 1;
    const CrossCheckReport rt = cross_check(zero_diff_complex(F3, 0, {1, 1}), tiny);
    CHECK(rt.status == AnalysisStatus::unresolved);
    CHECK_FALSE(rt.all_pass());
}
