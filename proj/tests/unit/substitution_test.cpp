#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delone/substitution.hpp"

using namespace delone;

TEST_CASE("substitute basics") {
    auto fib = SubstRule::fibonacci();
    CHECK(substitute(fib, "a", 0) == "a");
    CHECK(substitute(fib, "a", 1) == "ab");
    CHECK(substitute(fib, "a", 3) == "abaab");
    CHECK_THROWS(substitute(fib, "x", 1));
    CHECK_THROWS(substitute(fib, "a", -1));
}

TEST_CASE("word lengths follow the Fibonacci recurrence") {
    auto fib = SubstRule::fibonacci();
    // |sigma^n(a)| = F(n+2), F(1)=F(2)=1
    long long F1 = 1, F2 = 1;
    for (int i = 3; i <= 22; ++i) {
        long long t = F1 + F2;
        F1 = F2;
        F2 = t;
    }
    CHECK((long long)substitute(fib, "a", 20).size() == F2); // F(22) = 17711
    CHECK(F2 == 17711);
}

TEST_CASE("primitivity") {
    CHECK(SubstRule::fibonacci().is_primitive());
    SubstRule bad;
    bad.images = {{'a', "a"}, {'b', "b"}};
    bad.lengths = {{'a', Golden::integer(1)}, {'b', Golden::integer(1)}};
    CHECK(!bad.is_primitive());
}

TEST_CASE("seed pairs for the Fibonacci rule") {
    auto seeds = find_seed_pairs(SubstRule::fibonacci());
    REQUIRE(!seeds.empty());
    bool has_aa = false, has_ba = false;
    for (auto& s : seeds) {
        if (s.l == 'a' && s.r == 'a') has_aa = true;
        if (s.l == 'b' && s.r == 'a') has_ba = true;
    }
    CHECK(has_aa);
    CHECK(has_ba);
}

TEST_CASE("two-sided fixed point is sigma^k-invariant around the origin") {
    TwoSidedWord w(SubstRule::fibonacci(), "aa");
    w.ensure_extent(200.0);
    CHECK(w.letter(-1) == 'a');
    CHECK(w.letter(0) == 'a');
    CHECK(w.start(0) == Golden{0, 0});
    CHECK(w.start(1) == Golden{0, 1});             // tile a has length phi
    CHECK(w.start(-1) == Golden{0, -1});
    // right half agrees with the one-sided fixed point sigma^inf(a)
    std::string prefix = substitute(w.rule(), "a", 10);
    for (size_t k = 0; k < prefix.size() && k < 100; ++k) CHECK(w.letter((long long)k) == prefix[k]);
    // no "bb" factor ever
    for (long long k = w.lo_index(); k + 1 < w.hi_index() && k < 500; ++k)
        CHECK(!(w.letter(k) == 'b' && w.letter(k + 1) == 'b'));
}

TEST_CASE("starts are consistent with tile lengths") {
    TwoSidedWord w(SubstRule::fibonacci(), "ba");
    w.ensure_extent(100.0);
    for (long long k = -50; k < 50; ++k)
        CHECK(w.start(k + 1) == w.start(k) + w.length_of(w.letter(k)));
}

TEST_CASE("tile_index_at finds the covering tile") {
    TwoSidedWord w(SubstRule::fibonacci(), "aa");
    for (double x : {-40.3, -1.0, 0.0, 0.7, 5.2, 33.3}) {
        long long k = w.tile_index_at(frac_of_double(x));
        CHECK(w.start(k).value() <= x + 1e-9);
        CHECK(w.start(k + 1).value() > x - 1e-9);
    }
}

TEST_CASE("starts_in returns exactly the tile starts inside the window") {
    TwoSidedWord w(SubstRule::fibonacci(), "aa");
    auto [k0, k1] = w.starts_in(frac_of_double(-10.0), frac_of_double(10.0));
    CHECK(w.start(k0).value() >= -10.0);
    CHECK(w.start(k0 - 1).value() < -10.0);
    CHECK(w.start(k1).value() <= 10.0);
    CHECK(w.start(k1 + 1).value() > 10.0);
}
