#include <doctest.h>

#include <lie/coadjoint.hpp>
#include <lie/families.hpp>
#include <lie/upoly.hpp>

using namespace lie;

namespace {

SampleCfg cfg_mode(Mode m, std::uint64_t seed = 7) {
    SampleCfg c;
    c.seed = seed;
    c.mode = m;
    return c;
}

}  // namespace

TEST_CASE("univariate roots and minimal polynomials") {
    // (T - 1) (T + 2)^2 (2T - 3), expanded: 2T^4 + 3T^3 - 9T^2 - 8T + 12
    UPoly p = {Rat(12), Rat(-8), Rat(-9), Rat(3), Rat(2)};
    RootReport rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots[0] == std::pair<Rat, int>{Rat(-2), 2});
    CHECK(rr.roots[1] == std::pair<Rat, int>{Rat(1), 1});
    CHECK(rr.roots[2] == std::pair<Rat, int>{make_rat(3, 2), 1});
    CHECK(upoly_deg(rr.leftover) == 0);

    // T^2 - 2 has no rational root and survives as leftover
    RootReport irr = rational_roots(UPoly{Rat(-2), Rat(0), Rat(1)});
    CHECK(irr.roots.empty());
    CHECK(upoly_deg(irr.leftover) == 2);

    RatMat d = RatMat::identity(3);
    d.at(2, 2) = 2;
    UPoly md = minimal_polynomial(d);  // (T-1)(T-2) = T^2 - 3T + 2
    CHECK(md == UPoly{Rat(2), Rat(-3), Rat(1)});
    CHECK(upoly_is_squarefree(md));
    CHECK_FALSE(upoly_is_power_of_t(md));

    RatMat nil(3, 3);  // single Jordan block at 0
    nil.at(0, 1) = 1;
    nil.at(1, 2) = 1;
    UPoly mn = minimal_polynomial(nil);
    CHECK(mn == UPoly{Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(upoly_is_power_of_t(mn));
    CHECK_FALSE(upoly_is_squarefree(mn));
}

TEST_CASE("index on reference algebras") {
    for (Mode m : {Mode::probabilistic, Mode::symbolic}) {
        CHECK(index(heisenberg(1), cfg_mode(m)).index == 1);
        CHECK(index(heisenberg(3), cfg_mode(m)).index == 1);
        CHECK(index(sl2(), cfg_mode(m)).index == 1);
        CHECK(index(gl(2), cfg_mode(m)).index == 2);
        CHECK(index(sl(3), cfg_mode(m)).index == 2);
        CHECK(index(borel_sl3(), cfg_mode(m)).index == 1);
        CHECK(index(takiff(sl2(), 2), cfg_mode(m)).index == 2);
    }

    IndexResult sym = index(sl2(), cfg_mode(Mode::symbolic));
    CHECK(sym.symbolic);
    CHECK(sym.failure_bound == 0.0);
    CHECK(sym.max_rank == 2);
    CHECK(stabiliser(sl2(), sym.witness).dim() == 1);

    IndexResult prob = index(sl2(), cfg_mode(Mode::probabilistic));
    CHECK_FALSE(prob.symbolic);
    CHECK(prob.failure_bound > 0.0);
    CHECK(prob.failure_bound < 1e-5);

    // abelian: the bracket vanishes, every point is a stabiliser
    LieAlgebra ab({"a", "b"}, {});
    CHECK(index(ab).index == 2);
    CHECK(index(LieAlgebra()).index == 0);
}

TEST_CASE("stabiliser, conical orbits, stability") {
    const LieAlgebra h = heisenberg(1);
    const Vec az = {Rat(0), Rat(0), Rat(1)};
    const Subspace st = stabiliser(h, az);
    CHECK(st == span_of(3, {Vec{Rat(0), Rat(0), Rat(1)}}));
    CHECK_FALSE(is_conical_orbit(h, az));
    CHECK(is_stable_point(h, az));

    const LieAlgebra s = sl2();
    const Vec ah = {Rat(1), Rat(0), Rat(0)};   // regular semisimple
    const Vec ae = {Rat(0), Rat(1), Rat(0)};   // nilpotent
    CHECK(stabiliser(s, ah) == span_of(3, {Vec{Rat(1), Rat(0), Rat(0)}}));
    CHECK(stabiliser(s, ae) == span_of(3, {Vec{Rat(0), Rat(0), Rat(1)}}));
    CHECK_FALSE(is_conical_orbit(s, ah));
    CHECK(is_conical_orbit(s, ae));
    CHECK(is_stable_point(s, ah));
    CHECK_FALSE(is_stable_point(s, ae));
}

TEST_CASE("contact forms") {
    const LieAlgebra h = heisenberg(1);
    CHECK(is_contact_form(h, {Rat(0), Rat(0), Rat(1)}));
    CHECK(is_contact_form(h, {Rat(5), Rat(-3), make_rat(1, 2)}));
    CHECK_FALSE(is_contact_form(h, {Rat(1), Rat(1), Rat(0)}));

    const LieAlgebra s = sl2();
    CHECK(is_contact_form(s, {Rat(1), Rat(0), Rat(0)}));
    CHECK_FALSE(is_contact_form(s, {Rat(0), Rat(1), Rat(0)}));

    CHECK_THROWS_WITH_AS(is_contact_form(gl(2), Vec(4, Rat(1))),
                         "contact undefined in even dimension", std::domain_error);
}

TEST_CASE("contact decision with certificates") {
    for (Mode m : {Mode::probabilistic, Mode::automatic, Mode::symbolic}) {
        ContactResult c = is_contact_algebra(heisenberg(2), cfg_mode(m));
        CHECK(c.contact);
        CHECK(c.certified);
        CHECK(c.certificate != 0);
        CHECK(is_contact_form(heisenberg(2), c.witness));
    }
    CHECK(is_contact_algebra(sl2()).contact);
    CHECK(is_contact_algebra(borel_sl3()).contact);

    // equal characters: f vanishes identically, certified in automatic mode
    ContactResult flat = is_contact_algebra(k_two_characters(Rat(2), Rat(2)));
    CHECK_FALSE(flat.contact);
    CHECK(flat.certified);
    CHECK(contact_semi_invariant(k_two_characters(Rat(2), Rat(2))).is_zero());

    ContactResult tilted = is_contact_algebra(k_two_characters(Rat(1), Rat(2)));
    CHECK(tilted.contact);

    // probabilistic mode cannot certify the negative but bounds it
    ContactResult pflat =
        is_contact_algebra(k_two_characters(Rat(2), Rat(2)), cfg_mode(Mode::probabilistic));
    CHECK_FALSE(pflat.contact);
    CHECK_FALSE(pflat.certified);
    CHECK(pflat.failure_bound > 0.0);
    CHECK(pflat.failure_bound < 1e-16);

    CHECK_THROWS_AS(is_contact_algebra(gl(2)), std::domain_error);
}

TEST_CASE("generic stabiliser classification") {
    StabiliserClass ss = classify_generic_stabiliser(sl2());
    CHECK(ss.kind == "semisimple");
    CHECK_FALSE(ss.central);

    StabiliserClass hz = classify_generic_stabiliser(heisenberg(2));
    CHECK(hz.kind == "semisimple");  // ad(z) = 0
    CHECK(hz.central);

    StabiliserClass ni = classify_generic_stabiliser(sl2_natural_copies(1).q);
    CHECK(ni.kind == "nilpotent");
    CHECK_FALSE(ni.central);

    // aff(1) is Frobenius, there is no one-dimensional generic stabiliser
    LieAlgebra aff({"t", "x"}, {{0, 1, {{1, Rat(1)}}}});
    CHECK_THROWS_WITH_AS(classify_generic_stabiliser(aff),
                         "classification requires index 1", std::domain_error);
}

TEST_CASE("semi-invariants of reference algebras") {
    const LieAlgebra h2 = heisenberg(2);
    const MPoly z = MPoly::var(5, 4);
    CHECK(fundamental_semi_invariant(h2) == z * z);
    CHECK(contact_semi_invariant(h2) == z * z * z);

    CHECK(fundamental_semi_invariant(sl2()) == MPoly::constant(3, Rat(1)));
    // the bordered Pfaffian of sl2 is the Casimir h^2 + 4 e f
    MPoly cas(3);
    cas.add_term({2, 0, 0}, Rat(1));
    cas.add_term({0, 1, 1}, Rat(4));
    CHECK(contact_semi_invariant(sl2()) == cas);

    CHECK(fundamental_semi_invariant(gl(2)) == MPoly::constant(4, Rat(1)));
    CHECK_THROWS_AS(contact_semi_invariant(gl(2)), std::domain_error);
}

TEST_CASE("full report") {
    CoadjointReport rb = analyze(borel_sl3());
    CHECK(rb.dim == 5);
    CHECK(rb.index.index == 1);
    CHECK(rb.contact.contact);
    CHECK_FALSE(rb.generic_conical);
    CHECK(rb.stable);
    REQUIRE(rb.p.has_value());
    CHECK(rb.p->is_constant());
    REQUIRE(rb.f.has_value());
    CHECK(rb.f->degree() == 3);
    REQUIRE(rb.codim2.has_value());
    CHECK(*rb.codim2);

    CoadjointReport rh = analyze(heisenberg(1));
    CHECK(rh.contact.contact);
    REQUIRE(rh.codim2.has_value());
    CHECK_FALSE(*rh.codim2);  // p = z cuts a hyperplane

    CoadjointReport rg = analyze(gl(2));
    CHECK_FALSE(rg.contact.contact);
    CHECK(rg.contact.certified);
    CHECK(rg.contact.detail == "even dimension");
    CHECK(rg.index.index == 2);
}
