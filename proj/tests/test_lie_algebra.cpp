#include <doctest.h>
#include <lie/lie_algebra.hpp>

using namespace lie;

namespace {

LieAlgebra heisenberg3() {
    // [x, y] = z
    return LieAlgebra({"x", "y", "z"}, {{0, 1, {{2, Rat(1)}}}});
}

LieAlgebra sl2() {
    // [h, e] = 2e, [h, f] = -2f, [e, f] = h
    return LieAlgebra({"h", "e", "f"},
                      {{0, 1, {{1, Rat(2)}}},
                       {0, 2, {{2, Rat(-2)}}},
                       {1, 2, {{0, Rat(1)}}}});
}

Vec basis_vec(int n, int i) {
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("construction validates jacobi and rejects malformed tables") {
    CHECK_NOTHROW(heisenberg3());
    CHECK_NOTHROW(sl2());

    // [x,y] = z, [x,z] = x breaks jacobi on (x,y,z)
    CHECK_THROWS_WITH((LieAlgebra{{"x", "y", "z"},
                                  {{0, 1, {{2, Rat(1)}}}, {0, 2, {{0, Rat(1)}}}}}),
                      "jacobi violation at (0,1,2)");

    CHECK_THROWS_AS((LieAlgebra{{"a", "b"}, {{1, 0, {{0, Rat(1)}}}}}),
                    std::domain_error);
    CHECK_THROWS_AS((LieAlgebra{{"a", "b"}, {{0, 1, {{5, Rat(1)}}}}}),
                    std::domain_error);
}

TEST_CASE("bracket is bilinear and antisymmetric") {
    LieAlgebra g = sl2();
    Rng rng(404);
    for (int t = 0; t < 10; ++t) {
        Vec x = rng.rational_point(3, 9), y = rng.rational_point(3, 9),
            z = rng.rational_point(3, 9);
        Rat a(rng.int_in(5)), b(rng.int_in(5));
        Vec lhs = g.bracket(vec_add(scaled(x, a), scaled(y, b)), z);
        Vec rhs = vec_add(scaled(g.bracket(x, z), a), scaled(g.bracket(y, z), b));
        CHECK(lhs == rhs);
        CHECK(is_zero_vec(g.bracket(x, x)));
        CHECK(g.bracket(x, y) == scaled(g.bracket(y, x), Rat(-1)));
    }
}

TEST_CASE("bracket_basis handles both orders") {
    LieAlgebra g = sl2();
    TermList he = g.bracket_basis(0, 1);
    REQUIRE(he.size() == 1);
    CHECK(he[0].k == 1);
    CHECK(he[0].c == 2);
    TermList eh = g.bracket_basis(1, 0);
    REQUIRE(eh.size() == 1);
    CHECK(eh[0].c == -2);
    CHECK(g.bracket_basis(1, 1).empty());
}

TEST_CASE("structure matrix of a functional") {
    LieAlgebra g = heisenberg3();
    Vec alpha = {Rat(0), Rat(0), Rat(1)};
    RatMat b = g.structure_matrix(alpha);
    CHECK(is_skew_symmetric(b));
    CHECK(b.at(0, 1) == 1);
    CHECK(b.at(1, 0) == -1);
    CHECK(rank(b) == 2);

    // entry (i,j) is alpha of the basis bracket, for any algebra and alpha
    LieAlgebra s = sl2();
    Rng rng(505);
    Vec a2 = rng.rational_point(3, 9);
    RatMat b2 = s.structure_matrix(a2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(b2.at(i, j) == dot(a2, s.bracket(basis_vec(3, i), basis_vec(3, j))));
}

TEST_CASE("symbolic structure matrix evaluates to the numeric one") {
    LieAlgebra g = sl2();
    SymMat sym = g.structure_matrix_symbolic();
    Rng rng(606);
    Vec alpha = rng.rational_point(3, 9);
    RatMat num = g.structure_matrix(alpha);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(sym[i][j].eval(alpha) == num.at(i, j));
}

TEST_CASE("ad and coadjoint match the bracket") {
    LieAlgebra g = sl2();
    Rng rng(707);
    Vec u = rng.rational_point(3, 9), v = rng.rational_point(3, 9),
        alpha = rng.rational_point(3, 9);
    RatMat ad = g.ad_matrix(u);
    CHECK(mat_vec(ad, v) == g.bracket(u, v));
    // (ad* u alpha)(v) = -alpha([u, v])
    Vec ca = g.coadjoint(u, alpha);
    CHECK(dot(ca, v) == -dot(alpha, g.bracket(u, v)));
}

TEST_CASE("derived subalgebra and center") {
    LieAlgebra h = heisenberg3();
    Subspace dh = h.derived_subalgebra(), zh = h.center();
    CHECK(dh.dim() == 1);
    CHECK(zh.dim() == 1);
    CHECK(dh == zh);
    CHECK(dh.contains(basis_vec(3, 2)));

    LieAlgebra s = sl2();
    CHECK(s.derived_subalgebra().dim() == 3);
    CHECK(s.center().dim() == 0);
}

TEST_CASE("subalgebra extraction") {
    LieAlgebra s = sl2();
    // span(h, e) is the positive borel
    Subspace b = span_of(3, {basis_vec(3, 0), basis_vec(3, 1)});
    LieAlgebra borel = subalgebra(s, b);
    CHECK(borel.dim() == 2);
    CHECK(borel.labels() == std::vector<std::string>{"h", "e"});
    TermList t = borel.bracket_basis(0, 1);
    REQUIRE(t.size() == 1);
    CHECK(t[0].k == 1);
    CHECK(t[0].c == 2);

    // span(e, f) is not closed: [e, f] = h
    Subspace bad = span_of(3, {basis_vec(3, 1), basis_vec(3, 2)});
    CHECK_THROWS_WITH(subalgebra(s, bad), "not closed under bracket");

    // a non-standard basis vector gets a generated label
    Subspace diag = span_of(3, {vec_add(basis_vec(3, 1), basis_vec(3, 2))});
    LieAlgebra ab = subalgebra(s, diag);
    CHECK(ab.labels() == std::vector<std::string>{"u0"});
}

TEST_CASE("structure constants from matrices") {
    RatMat h(2, 2), e(2, 2), f(2, 2);
    h.at(0, 0) = 1; h.at(1, 1) = -1;
    e.at(0, 1) = 1;
    f.at(1, 0) = 1;
    LieAlgebra g = from_matrices({h, e, f}, {"h", "e", "f"});
    CHECK(g.dim() == 3);
    TermList he = g.bracket_basis(0, 1);
    REQUIRE(he.size() == 1);
    CHECK(he[0].k == 1);
    CHECK(he[0].c == 2);
    TermList ef = g.bracket_basis(1, 2);
    REQUIRE(ef.size() == 1);
    CHECK(ef[0].k == 0);
    CHECK(ef[0].c == 1);

    CHECK_THROWS_WITH(from_matrices({h, h}, {"a", "b"}),
                      "from_matrices: dependent basis");
    // gl1 plus a non-closed partner: e alone against f without h
    CHECK_THROWS_WITH(from_matrices({e, f}, {"e", "f"}),
                      "from_matrices: not closed under commutator");
}
