#include <doctest.h>

#include <lie/families.hpp>
#include <lie/semiinv.hpp>

using namespace lie;

TEST_CASE("heisenberg semi-invariants are powers of the centre") {
    const auto gens = semi_invariants_up_to_degree(heisenberg(1), 3);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].poly == MPoly::var(3, 2));
    CHECK(gens[0].degree == 1);
    CHECK(is_zero_vec(gens[0].weight));  // z is a genuine invariant
}

TEST_CASE("sl2 casimir shows up at degree two") {
    const auto gens = semi_invariants_up_to_degree(sl2(), 2);
    REQUIRE(gens.size() == 1);
    MPoly cas(3);
    cas.add_term({2, 0, 0}, Rat(1));
    cas.add_term({0, 1, 1}, Rat(4));
    CHECK(gens[0].poly == cas);
    CHECK(is_zero_vec(gens[0].weight));
    CHECK(gens[0].degree == 2);
}

TEST_CASE("borel of sl3 carries exactly two generators up to degree two") {
    const LieAlgebra b = borel_sl3();
    const auto gens = semi_invariants_up_to_degree(b, 2);
    REQUIRE(gens.size() == 2);

    const MPoly z = MPoly::var(5, 4);
    MPoly h2(5);
    h2.add_term({1, 0, 0, 0, 1}, Rat(1));  // h z
    h2.add_term({0, 0, 1, 1, 0}, Rat(3));  // 3 x y
    CHECK(gens[0].poly == z);
    CHECK(gens[1].poly == h2);
    // both sit in the same weight: zero on h, 2 on h1, zero on the nilradical
    const Vec chi = {Rat(0), Rat(2), Rat(0), Rat(0), Rat(0)};
    CHECK(gens[0].weight == chi);
    CHECK(gens[1].weight == chi);

    const WeightRelation rel = weight_relation_and_generator(gens);
    CHECK_FALSE(rel.invariant_product);
    CHECK(rel.num_poly == h2);
    CHECK(rel.den_poly == z);
    CHECK(rel.coeffs == std::vector<Int>{Int(-1), Int(1)});

    // degree four adds no invariant (weight-zero) generator
    for (const SemiInvariant& g : semi_invariants_up_to_degree(b, 4))
        CHECK_FALSE(is_zero_vec(g.weight));

    SampleCfg cfg;
    cfg.seed = 23;
    CHECK(algebraic_independence(gens, cfg));
}

TEST_CASE("powers of a generator are filtered, not re-reported") {
    // in heisenberg(2) the centre z is the only generator to degree 2;
    // z^2 spans the degree-2 semi-invariants and must not reappear
    const auto gens = semi_invariants_up_to_degree(heisenberg(2), 2);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].poly == MPoly::var(5, 4));
}

TEST_CASE("two-character solvable algebra") {
    // [t,x] = x, [t,y] = 2y: S(q)^{[q,q]} is generated by x and y with
    // weights t -> 1 and t -> 2
    const auto gens = semi_invariants_up_to_degree(k_two_characters(Rat(1), Rat(2)), 2);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].poly == MPoly::var(3, 1));
    CHECK(gens[1].poly == MPoly::var(3, 2));
    CHECK(gens[0].weight == Vec{Rat(1), Rat(0), Rat(0)});
    CHECK(gens[1].weight == Vec{Rat(2), Rat(0), Rat(0)});

    const WeightRelation rel = weight_relation_and_generator(gens);
    CHECK_FALSE(rel.invariant_product);
    // x^2 / y is the weight-matched rational section
    CHECK(rel.num_poly == MPoly::var(3, 1) * MPoly::var(3, 1));
    CHECK(rel.den_poly == MPoly::var(3, 2));
}

TEST_CASE("canonical truncation of the borel") {
    const TruncationResult tr = canonical_truncation(borel_sl3(), 2);
    CHECK(tr.generator_count == 2);
    CHECK(tr.space.dim() == 4);
    CHECK(tr.algebra.dim() == 4);
    // h1 pairs nontrivially with the weight, everything else survives
    CHECK(tr.space.contains(Vec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}));
    CHECK_FALSE(tr.space.contains(Vec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}));

    // a nilpotent algebra truncates to itself
    const TruncationResult th = canonical_truncation(heisenberg(2), 2);
    CHECK(th.space.dim() == 5);
    CHECK(th.algebra.raw_table() == heisenberg(2).raw_table());
}
