#include <doctest.h>
#include <lie/rat.hpp>

using namespace lie;

TEST_CASE("rational parsing and printing round-trips") {
    CHECK(rat_str(rat_parse("3/6")) == "1/2");
    CHECK(rat_str(rat_parse("-4/2")) == "-2");
    CHECK(rat_str(rat_parse("0/5")) == "0");
    CHECK(rat_str(rat_parse("7")) == "7");
    CHECK(rat_parse("2/-4") == Rat(-1, 2));
    CHECK(rat_str(rat_parse("2/-4")) == "-1/2");
    CHECK_THROWS_AS(rat_parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(rat_parse(""), std::domain_error);
    CHECK_THROWS_AS(rat_parse("abc"), std::domain_error);
    // big values survive untouched (numerator is 1 mod 7, so reduced)
    std::string big = "123456789012345678901234567891/7";
    CHECK(rat_str(rat_parse(big)) == big);
}

TEST_CASE("canonical form: reduced, positive denominator") {
    Rat r = make_rat(Int(-6), Int(-8));
    CHECK(r.get_num() == 3);
    CHECK(r.get_den() == 4);
    CHECK(is_integer(rat_parse("8/4")));
}

TEST_CASE("rng is deterministic and respects the bound") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    const long bound = 1L << 20;
    for (int i = 0; i < 1000; ++i) {
        long v = c.int_in(bound);
        CHECK(v >= -bound);
        CHECK(v <= bound);
    }
    // forked streams differ from the parent and from each other
    Rng p(5);
    CHECK(p.fork(0).next() != p.fork(1).next());
}
