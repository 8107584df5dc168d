#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "delone/golden.hpp"

using namespace delone;

TEST_CASE("ring operations") {
    Golden x{2, 3}, y{-1, 5};
    CHECK(x + y == Golden{1, 8});
    CHECK(x - y == Golden{3, -2});
    // (2+3phi)(-1+5phi) = -2 +10phi -3phi +15phi^2 = -2+7phi+15(phi+1) = 13+22phi
    CHECK(x * y == Golden{13, 22});
    CHECK(-x == Golden{-2, -3});
    CHECK(Golden::phi() * Golden::phi() == Golden{1, 1});
}

TEST_CASE("exact sign agrees with floating evaluation away from zero") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 20000; ++i) {
        Golden g{d(gen), d(gen)};
        double v = g.value();
        if (std::abs(v) > 1e-6) CHECK(sign(g) == (v > 0 ? 1 : -1));
    }
    CHECK(sign(Golden{0, 0}) == 0);
}

TEST_CASE("sign near zero: phi is irrational so a+b*phi=0 only at (0,0)") {
    // convergents p/q of phi give the closest integer relations q*phi - p
    long long p = 1, q = 1;
    for (int i = 0; i < 40; ++i) {
        long long np = p + q, nq = p;
        p = np;
        q = nq;
        CHECK(sign(Golden{-p, q}) != 0); // q*phi - p != 0
    }
}

TEST_CASE("comparison is monotone with value") {
    Golden a{1, 1}, b{0, 2};
    // 1+phi = 2.618..., 2phi = 3.236...
    CHECK(a < b);
    CHECK(b > a);
    CHECK(a <= a);
}

TEST_CASE("star conjugation") {
    Golden x{3, -2};
    // phi* = 1 - phi
    CHECK(x.star() == Golden{1, 2});
    CHECK(x.star().star() == x);
    // norm a^2+ab-b^2 = x * x.star() is rational
    Golden n = x * x.star();
    CHECK(n.b == 0);
}

TEST_CASE("floor") {
    CHECK(floor_int(Golden{0, 1}) == 1);    // phi = 1.618
    CHECK(floor_int(Golden{0, -1}) == -2);  // -phi = -1.618
    CHECK(floor_int(Golden{5, 0}) == 5);
    CHECK(floor_int(GoldenFrac{{1, 1}, 2}) == 1); // (1+phi)/2 = 1.309
    CHECK(floor_int(GoldenFrac{{-1, -1}, 2}) == -2);
}

TEST_CASE("fractions") {
    GoldenFrac half{Golden::integer(1), 2};
    CHECK(sign(half) == 1);
    CHECK(half < GoldenFrac::integer(1));
    CHECK(GoldenFrac::integer(0) < half);
    GoldenFrac r = frac_of_double(2.5);
    CHECK(r.value() == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(Golden{2, 0} < r);
    CHECK(r < Golden{3, 0});
    // dyadic doubles survive quantization exactly: 2.5 * 2^20 integral
    CHECK(sign(r - GoldenFrac{Golden::integer(5), 2}) == 0);
}

TEST_CASE("parsing") {
    CHECK(parse_golden("phi") == Golden{0, 1});
    CHECK(parse_golden("1") == Golden{1, 0});
    CHECK(parse_golden("-2") == Golden{-2, 0});
    CHECK(parse_golden("2+3phi") == Golden{2, 3});
    CHECK(parse_golden("1-phi") == Golden{1, -1});
    CHECK(parse_golden(" -1 + phi") == Golden{-1, 1});
    auto f = parse_golden_frac("(1+phi)/2");
    CHECK(f.num == Golden{1, 1});
    CHECK(f.den == 2);
    CHECK(parse_golden_frac("phi/2").num == Golden{0, 1});
    CHECK_THROWS(parse_golden("xyz"));
}
