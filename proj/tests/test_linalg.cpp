#include <doctest.h>
#include <lie/linalg.hpp>

using namespace lie;

namespace {

RatMat random_mat(Rng& rng, long rows, long cols, long bound = 50) {
    RatMat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            Int num(rng.int_in(bound));
            Int den(rng.int_in(bound / 2));
            if (den == 0) den = 1;
            m.at(i, j) = make_rat(num, den);
        }
    return m;
}

} // namespace

TEST_CASE("rank of hand-picked matrices") {
    RatMat id = RatMat::identity(4);
    CHECK(rank(id) == 4);

    RatMat z(3, 5);
    CHECK(rank(z) == 0);

    // two proportional rows
    RatMat m(2, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = Rat(1, 2); m.at(1, 1) = 1; m.at(1, 2) = Rat(3, 2);
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    Rng rng(1001);
    for (int trial = 0; trial < 20; ++trial) {
        long rows = 1 + (trial % 6), cols = 1 + ((trial * 3) % 7);
        RatMat m = random_mat(rng, rows, cols);
        RankKernel rk = rank_kernel(m);
        CHECK(rk.rank + (long)rk.kernel.size() == cols);
        for (const Vec& k : rk.kernel) {
            Vec out = mat_vec(m, k);
            CHECK(is_zero_vec(out));
        }
        // kernel basis is linearly independent
        if (!rk.kernel.empty()) {
            RatMat kb((long)rk.kernel.size(), cols);
            for (long i = 0; i < (long)rk.kernel.size(); ++i)
                for (long j = 0; j < cols; ++j) kb.at(i, j) = rk.kernel[i][j];
            CHECK(rank(kb) == (long)rk.kernel.size());
        }
    }
}

TEST_CASE("production elimination agrees with the serial reference") {
    Rng rng(2002);
    for (int trial = 0; trial < 15; ++trial) {
        long rows = 2 + (trial % 7), cols = 2 + ((trial * 5) % 8);
        RatMat m = random_mat(rng, rows, cols);
        RankKernel fast = rank_kernel(m);
        RrefResult ref = rref_reference(m);
        CHECK(fast.rank == ref.rank);
    }
}

TEST_CASE("parallel and serial bareiss agree") {
    Rng rng(3003);
    RatMat m = random_mat(rng, 40, 40, 100);
    Echelon a = bareiss_echelon(m, true);
    Echelon b = bareiss_echelon(m, false);
    CHECK(a.rank == b.rank);
    CHECK(a.pivot_cols == b.pivot_cols);
    CHECK(a.m == b.m);
}

TEST_CASE("determinants") {
    RatMat m(3, 3);
    // det = 1*(5*9-6*8) - 2*(4*9-6*7) + 3*(4*8-5*7) = 0
    Rat vals[9] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) m.at(i, j) = vals[3 * i + j];
    CHECK(det(m) == 0);

    m.at(2, 2) = 10; // now det = -3
    CHECK(det(m) == -3);

    RatMat f(2, 2);
    f.at(0, 0) = Rat(1, 2); f.at(0, 1) = Rat(1, 3);
    f.at(1, 0) = Rat(1, 4); f.at(1, 1) = Rat(1, 5);
    CHECK(det(f) == Rat(1, 10) - Rat(1, 12));

    // det multiplicativity on random pairs
    Rng rng(4004);
    for (int t = 0; t < 5; ++t) {
        RatMat a = random_mat(rng, 4, 4, 9), b = random_mat(rng, 4, 4, 9);
        RatMat ab(4, 4);
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 4; ++j) {
                Rat s = 0;
                for (long k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
                ab.at(i, j) = s;
            }
        CHECK(det(ab) == det(a) * det(b));
    }
}

TEST_CASE("solve finds a preimage when one exists") {
    Rng rng(5005);
    for (int t = 0; t < 10; ++t) {
        RatMat m = random_mat(rng, 5, 4);
        Vec x = rng.rational_point(4, 20);
        Vec b = mat_vec(m, x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(mat_vec(m, *sol) == b);
    }
    // inconsistent system
    RatMat m(2, 1);
    m.at(0, 0) = 1; m.at(1, 0) = 1;
    Vec b = {Rat(1), Rat(2)};
    CHECK(!solve(m, b).has_value());
}

TEST_CASE("subspace dimension formula") {
    Rng rng(6006);
    for (int t = 0; t < 10; ++t) {
        int n = 6;
        std::vector<Vec> va, vb;
        for (int i = 0; i < 3; ++i) va.push_back(rng.rational_point(n, 10));
        for (int i = 0; i < 4; ++i) vb.push_back(rng.rational_point(n, 10));
        Subspace a = span_of(n, va), b = span_of(n, vb);
        Subspace meet = intersect(a, b), join = subspace_sum(a, b);
        CHECK(a.dim() + b.dim() == meet.dim() + join.dim());
        CHECK(subspace_le(meet, a));
        CHECK(subspace_le(meet, b));
        CHECK(subspace_le(a, join));
        for (const Vec& v : meet.basis) {
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
}

TEST_CASE("skew-symmetric matrices have even rank") {
    Rng rng(7007);
    for (int t = 0; t < 10; ++t) {
        long n = 3 + (t % 6);
        RatMat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) {
                Rat v(rng.int_in(20));
                m.at(i, j) = v;
                m.at(j, i) = -v;
            }
        REQUIRE(is_skew_symmetric(m));
        CHECK(rank(m) % 2 == 0);
    }
}

TEST_CASE("coords_in_rref recovers coefficients and rejects outsiders") {
    std::vector<Vec> gens = {
        {Rat(1), Rat(0), Rat(2)},
        {Rat(0), Rat(1), Rat(3)},
    };
    Subspace s = span_of(3, gens);
    Vec inside = {Rat(2), Rat(-1), Rat(1)}; // 2*g0 - g1
    Vec c = coords_in_rref(s.basis, inside);
    REQUIRE(c.size() == 2);
    Vec rebuilt(3, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        rebuilt = vec_add(rebuilt, scaled(s.basis[i], c[i]));
    CHECK(rebuilt == inside);

    Vec outside = {Rat(0), Rat(0), Rat(1)};
    CHECK_THROWS_WITH(coords_in_rref(s.basis, outside),
                      "coords_in_rref: vector outside span");
}
