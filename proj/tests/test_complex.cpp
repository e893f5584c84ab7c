#include <doctest.h>

#include "../tests/support/generators.hpp"
#include "symchain/complex.hpp"

using namespace symchain;
using namespace symchain::testsupport;

namespace {
const CoefficientSpec F2 = CoefficientSpec::prime_field(2);
const CoefficientSpec F3 = CoefficientSpec::prime_field(3);
const CoefficientSpec ZZ = CoefficientSpec::integers();

bool is_splitting_of(const ChainComplex& a, const std::vector<ModuleMap>& s) {
    for (int k = a.lo(); k < a.hi(); ++k) {
        const ModuleMap d = a.diff(k);
        const ModuleMap& sk = s[static_cast<std::size_t>(k - a.lo())];
        if (!(compose(d, compose(sk, d)) == d)) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("construction validates windows, shapes and d.d = 0") {
    const CoeffObject v = CoeffObject::vector_space(F2, 1);
    CHECK_THROWS_AS(ChainComplex::build(F2, 1, 0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ChainComplex::build(F2, 0, 1, {v}, {}), std::invalid_argument);
    // d_0 . d_1 = 1 != 0
    const ModuleMap one(v, v, Matrix::from_int_rows(F2, {{1}}));
    CHECK_THROWS_AS(ChainComplex::build(F2, 0, 2, {v, v, v}, {one, one}), std::invalid_argument);

    const ChainComplex a = zero_diff_complex(F2, 0, {1, 2});
    CHECK(a.lo() == 0);
    CHECK(a.hi() == 1);
    CHECK(a.object_at(1).gen_count() == 2);
    CHECK(a.object_at(5).is_zero());   // outside the window
    CHECK(a.diff(-3).is_zero());
    CHECK(a.diff(1).domain.is_zero()); // d_hi starts at the zero object
}

TEST_CASE("translation shifts the window and flips signs") {
    const ChainComplex a = ex1_complex(2);
    const ChainComplex t = translate(a, 1);
    CHECK(t.lo() == -1);
    CHECK(t.hi() == 1);
    CHECK(t.object_at(0) == a.object_at(1));
    CHECK(t.diff(0).m == -a.diff(1).m);
    CHECK(translate(t, -1) == a);

    // even shifts restore the sign
    const ChainComplex t2 = translate(a, 2);
    CHECK(t2.diff(-2).m == a.diff(0).m);
}

TEST_CASE("chain maps enforce commuting squares") {
    const ChainComplex a = ex1_complex(2);
    CHECK(compose(ChainMap::identity(a), ChainMap::identity(a)) == ChainMap::identity(a));

    // multiplication by (0, k, k) on ex1(2) commutes only for even k at the bottom
    const CoeffObject z = CoeffObject::z_module(1, {});
    const CoeffObject z2 = CoeffObject::z_module(0, {Int(2)});
    auto comp_maps = [&](long c0, long c1, long c2) {
        return std::vector<ModuleMap>{ModuleMap(z2, z2, Matrix::from_int_rows(ZZ, {{c0}})),
                                      ModuleMap(z, z, Matrix::from_int_rows(ZZ, {{c1}})),
                                      ModuleMap(z, z, Matrix::from_int_rows(ZZ, {{c2}}))};
    };
    CHECK_NOTHROW(ChainMap::build(a, a, comp_maps(1, 1, 1)));
    CHECK_NOTHROW(ChainMap::build(a, a, comp_maps(0, 2, 2)));
    // square at degree 0 fails: f_0 . d_0 = 0 but d_0 . f_1 = 1 mod 2
    CHECK_THROWS_AS(ChainMap::build(a, a, comp_maps(0, 1, 1)), std::invalid_argument);

    const ChainMap f = ChainMap::build(a, a, comp_maps(1, 3, 3));
    const ChainMap g = translate_map(f, 1);
    CHECK(g.dom() == translate(a, 1));
    CHECK(g.comp(0) == f.comp(1));
}

TEST_CASE("homotopy data and conjugation") {
    auto g = rng_of(31);
    const ChainComplex a = zero_diff_complex(F3, 0, {2, 2});
    const Homotopy h = random_homotopy(a, 1, g);
    CHECK(h.comp(0).codomain == a.object_at(1));
    CHECK(h.comp(1).codomain.is_zero());
    CHECK((h + (-h)).is_zero());
    const Homotopy z = Homotopy::zero(a, a, 2);
    CHECK(z.is_zero());
    CHECK(z.degree() == 2);

    const ChainMap id = ChainMap::identity(a);
    CHECK(conjugate_homotopy(h, id, id) == h);
}

TEST_CASE("homology of the running integer example") {
    for (long k : {1L, 2L, 3L}) {
        const ChainComplex a = ex1_complex(k);
        CHECK(homology(a, 2).quotient.is_zero());
        CHECK(homology(a, 0).quotient.is_zero());
        const CoeffObject h1 = homology(a, 1).quotient;
        if (k == 1) {
            CHECK(h1.is_zero());
        } else {
            CHECK(h1.rank == 0);
            REQUIRE(h1.torsion.size() == 1);
            CHECK(h1.torsion[0] == k);
        }
    }
}

TEST_CASE("homology projection and lift are mutually inverse") {
    auto g = rng_of(32);
    for (int trial = 0; trial < 10; ++trial) {
        const ChainComplex a = random_field_complex(trial % 2 ? F2 : F3, 0, 2, {2, 3, 2}, g);
        for (int k = 0; k <= 2; ++k) {
            const HomologyData hd = homology(a, k);
            // dimension count: h = dim ker - dim im
            const std::size_t zk = hd.cycles.gen_count(), bk = hd.boundaries.gen_count();
            CHECK(hd.quotient.gen_count() == zk - bk);
            for (const Matrix& y : enumerate_elements(hd.quotient, Int(512))) {
                CHECK(hd.Hq.project(hd.Hq.lift(y)) == y);
            }
        }
    }
}

TEST_CASE("induced maps on homology are functorial") {
    const ChainComplex a = ex1_complex(2);
    const HomologyData h1 = homology(a, 1);
    const ChainMap id = ChainMap::identity(a);
    CHECK(induced_map(id, 1, h1, h1) == ModuleMap::identity(h1.quotient));

    // multiplication by 3 on ex1(2) induces multiplication by 3 = 1 on H_1 = Z/2
    const CoeffObject z = CoeffObject::z_module(1, {});
    const CoeffObject z2 = CoeffObject::z_module(0, {Int(2)});
    const ChainMap f = ChainMap::build(
        a, a,
        {ModuleMap(z2, z2, Matrix::from_int_rows(ZZ, {{3}})), ModuleMap(z, z, Matrix::from_int_rows(ZZ, {{3}})),
         ModuleMap(z, z, Matrix::from_int_rows(ZZ, {{3}}))});
    CHECK(induced_map(f, 1, h1, h1) == ModuleMap::identity(h1.quotient));
    CHECK(induced_map(compose(f, f), 1, h1, h1) ==
          compose(induced_map(f, 1, h1, h1), induced_map(f, 1, h1, h1)));
}

TEST_CASE("canonical split shapes have the inclusion-projection differential") {
    const CoeffObject v1 = CoeffObject::vector_space(F2, 1);
    const CoeffObject v2 = CoeffObject::vector_space(F2, 2);
    const SplitShape sh = make_split_shape(F2, 0, 2, {v1, v2}, {v2, v1, v1});
    CHECK(sh.cx.object_at(0).gen_count() == 3);  // B_0 + H_0 = 1 + 2
    CHECK(sh.cx.object_at(1).gen_count() == 4);  // B_1 + H_1 + B_0 = 2 + 1 + 1
    CHECK(sh.cx.object_at(2).gen_count() == 3);  // H_2 + B_1 = 1 + 2
    for (int k = 0; k < 2; ++k)
        CHECK(sh.cx.diff(k) == compose(sh.incl(k, 0), sh.proj(k + 1, 2)));
    CHECK(sh.boundary_obj(2).is_zero());
    CHECK(sh.homology_obj(1) == v1);
    // homology of the canonical shape recovers the H parts
    for (int k = 0; k <= 2; ++k) CHECK(homology(sh.cx, k).quotient == sh.homology_obj(k));
    CHECK_THROWS_AS(make_split_shape(F2, 0, 1, {v1, v1}, {v1, v1}), std::invalid_argument);
}

TEST_CASE("splittings exist over fields and transfer along scrambling") {
    auto g = rng_of(33);
    for (int trial = 0; trial < 20; ++trial) {
        const CoefficientSpec spec = trial % 2 ? F2 : F3;
        const ChainComplex a = random_field_complex(
            spec, 0, 2,
            {static_cast<std::size_t>(rand_in(g, 0, 4)), static_cast<std::size_t>(rand_in(g, 1, 4)),
             static_cast<std::size_t>(rand_in(g, 0, 4))},
            g);
        const auto s = find_splitting(a);
        REQUIRE(s.has_value());
        CHECK(is_splitting_of(a, *s));
    }
}

TEST_CASE("integer complexes split exactly when a degreewise section exists") {
    // canonical split shape over Z with torsion homology splits
    const CoeffObject z = CoeffObject::z_module(1, {});
    const CoeffObject z2 = CoeffObject::z_module(0, {Int(2)});
    const SplitShape sh = make_split_shape(CoefficientSpec::integers(), 0, 1, {z}, {z2, z});
    const auto s = find_splitting(sh.cx);
    REQUIRE(s.has_value());
    CHECK(is_splitting_of(sh.cx, *s));

    // the running example is certified non-split for every k
    for (long k : {1L, 2L, 3L}) CHECK_FALSE(find_splitting(ex1_complex(k)).has_value());
}

TEST_CASE("split normal form conjugates onto the canonical shape") {
    auto g = rng_of(34);
    for (std::size_t trial = 0; trial < 8; ++trial) {
        const SplitInstance inst = sample_split_instance(trial, g);
        const auto nf = split_normal_form(inst.cx);
        REQUIRE(nf.has_value());
        // strict isomorphisms in both directions
        CHECK(compose(nf->to_canonical, nf->from_canonical) == ChainMap::identity(nf->shape.cx));
        CHECK(compose(nf->from_canonical, nf->to_canonical) == ChainMap::identity(inst.cx));
        CHECK(is_splitting_of(inst.cx, nf->splitting));
        // the recovered part dimensions match the construction
        for (int k = inst.lo; k <= inst.hi; ++k) {
            CHECK(nf->shape.homology_obj(k).gen_count() ==
                  inst.h_dims[static_cast<std::size_t>(k - inst.lo)]);
            if (k < inst.hi)
                CHECK(nf->shape.boundary_obj(k).gen_count() ==
                      inst.b_dims[static_cast<std::size_t>(k - inst.lo)]);
        }
        // differential of the canonical shape is inclusion . projection
        for (int k = inst.lo; k < inst.hi; ++k)
            CHECK(nf->shape.cx.diff(k) == compose(nf->shape.incl(k, 0), nf->shape.proj(k + 1, 2)));
    }
    CHECK_FALSE(split_normal_form(ex1_complex(2)).has_value());
}
