#include <doctest.h>

#include <lie/families.hpp>
#include <lie/semidirect.hpp>

using namespace lie;

TEST_CASE("declared splittings validate or fail loudly") {
    const LieAlgebra h = heisenberg(1);
    SemidirectDecomposition d = make_semidirect(h, Splitting{{0}, {1, 2}});
    CHECK(d.levi.dim() == 1);
    CHECK(d.action.size() == 1);
    // x sends y to z inside the ideal (coords y, z)
    CHECK(d.action[0].at(1, 0) == 1);
    CHECK(d.action[0].at(0, 0) == 0);

    CHECK_THROWS_WITH_AS(make_semidirect(h, Splitting{{0}, {1}}),
                         "splitting does not partition the basis", std::domain_error);
    CHECK_THROWS_WITH_AS(make_semidirect(h, Splitting{{0, 0, 1}, {2}}),
                         "splitting does not partition the basis", std::domain_error);
    CHECK_THROWS_WITH_AS(make_semidirect(sl2(), Splitting{{1, 2}, {0}}),
                         "levi is not a subalgebra", std::domain_error);
    CHECK_THROWS_WITH_AS(make_semidirect(h, Splitting{{0, 2}, {1}}),
                         "ideal is not an ideal", std::domain_error);
    CHECK_THROWS_WITH_AS(make_semidirect(borel_sl3(), Splitting{{0, 1}, {2, 3, 4}}),
                         "ideal is not abelian", std::domain_error);
}

TEST_CASE("assembly from representation matrices") {
    // natural representation of sl2 on k^2
    RatMat rh(2, 2), re(2, 2), rf(2, 2);
    rh.at(0, 0) = 1;
    rh.at(1, 1) = -1;
    re.at(0, 1) = 1;
    rf.at(1, 0) = 1;
    SemidirectDecomposition d = build_semidirect(sl2(), {rh, re, rf}, {"x", "y"});
    CHECK(d.q.dim() == 5);
    CHECK(d.q.labels() == std::vector<std::string>{"h", "e", "f", "x", "y"});
    // [e, y] = x
    REQUIRE(d.q.bracket_basis(1, 4).size() == 1);
    CHECK(d.q.bracket_basis(1, 4)[0].k == 3);
    CHECK(d.q.bracket_basis(1, 4)[0].c == 1);
    // matches the packaged family
    CHECK(d.q.raw_table() == sl2_natural_copies(1).q.raw_table());

    // breaking one sign violates [e, f] = h on the module
    RatMat bad = rf;
    bad.at(1, 0) = -1;
    CHECK_THROWS_WITH_AS(build_semidirect(sl2(), {rh, re, bad}, {"x", "y"}),
                         doctest::Contains("not a representation"), std::domain_error);
}

TEST_CASE("index additivity at a generic dual point") {
    SampleCfg cfg;
    cfg.seed = 11;

    for (SemidirectDecomposition d :
         {make_semidirect(heisenberg(1), Splitting{{0}, {1, 2}}), sl2_natural_copies(1),
          q_family(1, 2), r_family(2, 1),
          make_semidirect(k_two_characters(Rat(1), Rat(2)), Splitting{{0}, {1, 2}})}) {
        RaisResult r = rais_check(d, cfg);
        CHECK(r.ok);
        CHECK(r.lhs == r.rhs);
        CHECK(r.dim_v == static_cast<int>(d.split.ideal.size()));
    }
}

TEST_CASE("line normaliser and principal element") {
    // aff(1): [t, x] = x is Frobenius; at beta = t* the principal element
    // satisfies B(beta) s = beta
    LieAlgebra aff({"t", "x"}, {{0, 1, {{1, Rat(1)}}}});
    const Vec beta = {Rat(3), Rat(2)};
    const Vec s = principal_element(aff, beta);
    CHECK(aff.coadjoint(s, beta) == beta);
    CHECK_THROWS_WITH_AS(principal_element(aff, Vec{Rat(1), Rat(0)}),
                         "not a Frobenius point", std::domain_error);

    SemidirectDecomposition d =
        make_semidirect(k_two_characters(Rat(2), Rat(5)), Splitting{{0, 1}, {2}});
    const Vec gamma = {Rat(1)};
    // t scales gamma, x kills it, so the whole levi normalises the line
    CHECK(line_normaliser(d, gamma).dim() == 2);
    CHECK_THROWS_WITH_AS(line_normaliser(d, Vec{Rat(0)}), "line normaliser of zero",
                         std::domain_error);
}

TEST_CASE("contact analysis of split algebras") {
    SampleCfg cfg;
    cfg.seed = 5;

    SUBCASE("open orbit and character mismatch") {
        for (auto [lam, mu, expect] :
             std::vector<std::tuple<long, long, bool>>{{1, 2, true}, {3, 3, false}}) {
            const LieAlgebra k = k_two_characters(Rat(lam), Rat(mu));

            SemidirectAnalysis plane = analyze_semidirect(make_semidirect(k, Splitting{{0}, {1, 2}}), cfg);
            CHECK(plane.case_tag == 'A');
            CHECK(plane.contact == expect);

            SemidirectDecomposition nested = make_semidirect(k, Splitting{{0, 1}, {2}});
            SemidirectAnalysis line = analyze_semidirect(nested, cfg);
            CHECK(line.case_tag == 'B');
            CHECK(line.contact == expect);
            CHECK(line.ind_line == 0);
            REQUIRE(line.principal.has_value());
            // the principal element scales x by -1 whatever the characters are
            const Vec sx = nested.levi.bracket(*line.principal, Vec{Rat(0), Rat(1)});
            CHECK(sx == Vec{Rat(0), Rat(-1)});
        }
    }

    SUBCASE("restricted seaweed, smallest cell") {
        SemidirectDecomposition d = q_bar(1, 1);
        SemidirectDecomposition a = make_semidirect(d.q, analysis_splitting_q_bar(1, 1));
        SemidirectAnalysis an = analyze_semidirect(a, cfg);
        CHECK(an.case_tag == 'B');
        CHECK_FALSE(an.contact);
    }

    SUBCASE("rejects index above one") {
        CHECK_THROWS_WITH_AS(analyze_semidirect(q_family(1, 1), cfg),
                             "semidirect analysis requires index 1", std::domain_error);
    }
}
