#include <doctest.h>

#include <set>
#include <string>

#include "../tests/support/generators.hpp"
#include "symchain/coeff.hpp"
#include "symchain/mateq.hpp"

using namespace symchain;
using namespace symchain::testsupport;

namespace {
const CoefficientSpec F2 = CoefficientSpec::prime_field(2);
const CoefficientSpec F3 = CoefficientSpec::prime_field(3);
const CoefficientSpec ZZ = CoefficientSpec::integers();
}  // namespace

TEST_CASE("object construction and invariants") {
    const CoeffObject v = CoeffObject::vector_space(F3, 4);
    CHECK(v.gen_count() == 4);
    CHECK(v.is_finite());
    CHECK(v.element_count() == 81);
    CHECK(v.describe() == "F_3^4");
    CHECK_THROWS_AS(CoeffObject::vector_space(ZZ, 2), std::invalid_argument);

    const CoeffObject m = CoeffObject::z_module(1, {Int(2), Int(4)});
    CHECK(m.gen_count() == 3);
    CHECK(m.gen_order(0) == 2);
    CHECK(m.gen_order(2) == 0);
    CHECK_FALSE(m.is_finite());
    CHECK_THROWS_AS(m.element_count(), MathError);
    CHECK_THROWS_AS(CoeffObject::z_module(0, {Int(1)}), std::invalid_argument);
    CHECK_THROWS_AS(CoeffObject::z_module(0, {Int(4), Int(2)}), std::invalid_argument);
    CHECK_THROWS_AS(CoeffObject::z_module(0, {Int(2), Int(3)}), std::invalid_argument);

    const Matrix rel = m.relation_matrix();
    CHECK(rel.rows() == 3);
    CHECK(rel.cols() == 2);
    CHECK(rel.at(0, 0) == Rational(2));
    CHECK(rel.at(1, 1) == Rational(4));
}

TEST_CASE("module maps reduce and validate") {
    const CoeffObject z4 = CoeffObject::z_module(0, {Int(4)});
    const CoeffObject z2 = CoeffObject::z_module(0, {Int(2)});
    // rows into a torsion codomain are reduced into [0, n)
    const ModuleMap f(z4, z4, Matrix::from_int_rows(ZZ, {{5}}));
    CHECK(f.m.at(0, 0) == Rational(1));
    // a generator of order 2 cannot go to an element of order 4
    CHECK_THROWS_AS(ModuleMap(z2, z4, Matrix::from_int_rows(ZZ, {{1}})), MathError);
    // but can go to the 2-torsion element 2 mod 4
    CHECK_NOTHROW(ModuleMap(z2, z4, Matrix::from_int_rows(ZZ, {{2}})));

    const ModuleMap id = ModuleMap::identity(z4);
    CHECK(is_isomorphism(id));
    CHECK(compose(id, f) == f);
    CHECK((f + f).m.at(0, 0) == Rational(2));
    CHECK((-f).m.at(0, 0) == Rational(3));

    // multiplication by 3 is invertible on Z/4, by 2 is not
    const ModuleMap t3(z4, z4, Matrix::from_int_rows(ZZ, {{3}}));
    REQUIRE(inverse_map(t3).has_value());
    CHECK(compose(*inverse_map(t3), t3) == id);
    CHECK_FALSE(inverse_map(ModuleMap(z4, z4, Matrix::from_int_rows(ZZ, {{2}}))).has_value());
}

TEST_CASE("quotients compute canonical structure") {
    // Z^2 / <(2,0), (0,3)> = Z/2 + Z/3 = Z/6
    const Subquotient q = cokernel_structure(ZZ, 2, Matrix::from_int_rows(ZZ, {{2, 0}, {0, 3}}));
    CHECK(q.obj.rank == 0);
    REQUIRE(q.obj.torsion.size() == 1);
    CHECK(q.obj.torsion[0] == 6);

    // Z^2 / <(2,2)> = Z + Z/2
    const Subquotient r = cokernel_structure(ZZ, 2, Matrix::from_int_rows(ZZ, {{2}, {2}}));
    CHECK(r.obj.rank == 1);
    REQUIRE(r.obj.torsion.size() == 1);
    CHECK(r.obj.torsion[0] == 2);

    // project . lift = identity on canonical coordinates
    auto g = rng_of(21);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix w = random_matrix(ZZ, 3, 2, g);
        const Subquotient s = cokernel_structure(ZZ, 3, w);
        for (const Matrix& y : enumerate_elements(
                 CoeffObject::z_module(0, s.obj.torsion), Int(64))) {
            Matrix padded(ZZ, s.obj.gen_count(), 1);
            for (std::size_t i = 0; i < y.rows(); ++i) padded.set(i, 0, y.at(i, 0));
            CHECK(s.project(s.lift(padded)) == padded);
        }
    }

    // field quotient: F_2^3 / span((1,1,0)) = F_2^2
    const Subquotient fq = cokernel_structure(F2, 3, Matrix::from_int_rows(F2, {{1}, {1}, {0}}));
    CHECK(fq.obj == CoeffObject::vector_space(F2, 2));
}

TEST_CASE("direct sums come with orthogonal projections") {
    const CoeffObject z = CoeffObject::z_module(1, {});
    const CoeffObject z2 = CoeffObject::z_module(0, {Int(2)});
    const DirectSum s = direct_sum({z2, z, z2});
    CHECK(s.total.rank == 1);
    CHECK(s.total.torsion.size() == 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const ModuleMap pij = compose(s.proj[i], s.incl[j]);
            if (i == j)
                CHECK(pij == ModuleMap::identity(pij.domain));
            else
                CHECK(pij.is_zero());
        }
    // inclusions followed by projections resolve the identity
    ModuleMap total = ModuleMap::zero(s.total, s.total);
    for (std::size_t i = 0; i < 3; ++i) total = total + compose(s.incl[i], s.proj[i]);
    CHECK(total == ModuleMap::identity(s.total));
}

TEST_CASE("hom groups") {
    const CoeffObject z = CoeffObject::z_module(1, {});
    const CoeffObject z2 = CoeffObject::z_module(0, {Int(2)});
    const CoeffObject z4 = CoeffObject::z_module(0, {Int(4)});

    const HomGroup h42 = hom_group(z4, z2);  // Hom(Z/4, Z/2) = Z/2
    CHECK(h42.obj.element_count() == 2);
    const HomGroup hz4 = hom_group(z, z4);  // Hom(Z, Z/4) = Z/4
    CHECK(hz4.obj.element_count() == 4);
    const HomGroup h2z = hom_group(z2, z);  // Hom(Z/2, Z) = 0
    CHECK(h2z.obj.is_zero());
    const HomGroup hzz = hom_group(z, z);  // Hom(Z, Z) = Z
    CHECK(hzz.obj.rank == 1);
    CHECK_FALSE(hzz.obj.is_finite());

    const HomGroup hf = hom_group(CoeffObject::vector_space(F2, 2), CoeffObject::vector_space(F2, 3));
    CHECK(hf.obj == CoeffObject::vector_space(F2, 6));

    // coordinates round trip and enumeration yields distinct maps
    const HomGroup h44 = hom_group(z4, z4);
    std::set<std::string> seen;
    for (const Matrix& y : enumerate_elements(h44.obj, Int(64))) {
        const ModuleMap f = h44.map_from_coords(y);
        CHECK(h44.coords(f) == y);
        seen.insert(rational_to_string(f.m.at(0, 0)));
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("element enumeration is deterministic and complete") {
    const CoeffObject o = CoeffObject::z_module(0, {Int(2), Int(4)});
    const auto els = enumerate_elements(o, Int(64));
    CHECK(els.size() == 8);
    std::set<std::string> keys;
    for (const Matrix& y : els) keys.insert(rational_to_string(y.at(0, 0)) + "," + rational_to_string(y.at(1, 0)));
    CHECK(keys.size() == 8);
    // infinite or over-budget objects refuse
    CHECK_THROWS_AS(enumerate_elements(CoeffObject::z_module(1, {}), Int(100)), MathError);
    CHECK_THROWS_AS(enumerate_elements(CoeffObject::vector_space(F3, 8), Int(100)), MathError);
}

TEST_CASE("automorphism group orders") {
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(3, 1) == 2);
    CHECK(gl_order(2, 3) == 168);
    CHECK(aut_group_order(CoeffObject::vector_space(F2, 2), Int(1024)).order == 6);
    CHECK(aut_group_order(CoeffObject::z_module(0, {Int(4)}), Int(1024)).order == 2);
    CHECK(aut_group_order(CoeffObject::z_module(0, {Int(6)}), Int(1024)).order == 2);
    CHECK(aut_group_order(CoeffObject::z_module(0, {Int(2), Int(2)}), Int(1024)).order == 6);
    const AutCount free2 = aut_group_order(CoeffObject::z_module(2, {}), Int(1024));
    CHECK_FALSE(free2.finite);  // GL_2(Z) is infinite
    const AutCount mixed = aut_group_order(CoeffObject::z_module(1, {Int(2)}), Int(1024));
    CHECK(mixed.finite);
    CHECK(mixed.order == 4);  // sign on Z, hom Z -> Z/2, aut of Z/2
}

TEST_CASE("matrix-equation builder solves simultaneous systems") {
    MatEqBuilder eq(F3);
    const std::size_t x = eq.add_unknown(2, 2);
    const Matrix a = Matrix::from_int_rows(F3, {{1, 1}, {0, 1}});
    const Matrix b = Matrix::from_int_rows(F3, {{2, 0}, {1, 1}});
    const Matrix c = a * Matrix::from_int_rows(F3, {{1, 2}, {0, 2}}) * b;
    eq.add_equation({{a, x, b}}, c);
    const auto sol = eq.solve_all();
    REQUIRE(sol.has_value());
    CHECK(a * (*sol)[x] * b == c);

    // unsolvable system certifies
    MatEqBuilder bad(ZZ);
    const std::size_t y = bad.add_unknown(1, 1);
    bad.add_equation({{Matrix::from_int_rows(ZZ, {{2}}), y, Matrix::identity(ZZ, 1)}},
                     Matrix::from_int_rows(ZZ, {{1}}));
    CHECK_FALSE(bad.solve_all().has_value());
}

TEST_CASE("builder supports unknowns declared after equations") {
    // regression: rows recorded before later add_unknown calls are shorter
    // than the final coefficient count and must be zero-padded, not re-read
    // out of bounds
    MatEqBuilder eq(ZZ);
    const std::size_t x = eq.add_unknown(1, 1);
    eq.add_entry_equation({{x, 0, 0, Rational(2)}}, Rational(4));  // 2x = 4
    const std::size_t y = eq.add_unknown(1, 1);
    eq.add_entry_equation({{x, 0, 0, Rational(1)}, {y, 0, 0, Rational(1)}}, Rational(5));  // x + y = 5
    eq.add_equation({{Matrix::from_int_rows(ZZ, {{3}}), y, Matrix::identity(ZZ, 1)}},
                    Matrix::from_int_rows(ZZ, {{9}}));  // 3y = 9
    const auto sol = eq.solve_all();
    REQUIRE(sol.has_value());
    CHECK((*sol)[x].at(0, 0) == Rational(2));
    CHECK((*sol)[y].at(0, 0) == Rational(3));
}
