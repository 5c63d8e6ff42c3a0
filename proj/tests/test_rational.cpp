#include "lprev/rational.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using lprev::Rational;

TEST_CASE("rational literals round-trip through p/q text") {
    CHECK(Rational::parse("3/6").to_string() == "1/2");
    CHECK(Rational::parse("-4/2").to_string() == "-2");
    CHECK(Rational::parse("0/7").to_string() == "0");
    CHECK(Rational::parse("+5").to_string() == "5");
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
}

TEST_CASE("malformed rational literals are rejected") {
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1/2/3"));
    CHECK_THROWS(Rational::parse("2/-3"));
}

TEST_CASE("values beyond 63 bits promote and demote exactly") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    Rational x = big + Rational(1);
    CHECK(x.to_string() == "9223372036854775808");
    x -= Rational(1);
    CHECK(x == big);
    Rational y = big * big;
    CHECK(y / big == big);
    Rational tiny(1, std::numeric_limits<std::int64_t>::max());
    CHECK((tiny * tiny).inverse() == y);
    CHECK(Rational(std::numeric_limits<long>::min()).to_string() == "-9223372036854775808");
}

TEST_CASE("ordering and equality agree with GMP on random operands") {
    std::mt19937_64 rng(7);
    auto pick = [&]() -> std::pair<Rational, mpq_class> {
        // mix small values and values close to the 63-bit boundary
        const bool wide = rng() % 4 == 0;
        std::int64_t n = wide ? static_cast<std::int64_t>(rng() >> 2) : static_cast<std::int64_t>(rng() % 2001) - 1000;
        std::int64_t d = wide ? static_cast<std::int64_t>(rng() >> 2) + 1 : static_cast<std::int64_t>(rng() % 60) + 1;
        if (rng() % 2) n = -n;
        mpq_class m(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
        m.canonicalize();
        return {Rational(n, d), m};
    };
    for (int iter = 0; iter < 20000; ++iter) {
        auto [a, ma] = pick();
        auto [b, mb] = pick();
        CHECK(Rational(mpq_class(ma + mb)) == a + b);
        CHECK(Rational(mpq_class(ma - mb)) == a - b);
        CHECK(Rational(mpq_class(ma * mb)) == a * b);
        if (mb != 0) CHECK(Rational(mpq_class(ma / mb)) == a / b);
        CHECK(((a < b) == (ma < mb)));
        CHECK(((a == b) == (ma == mb)));
        Rational c = a * b + a;  // chained results stay canonical
        CHECK(c.to_string() == mpq_class(ma * mb + ma).get_str());
    }
}

TEST_CASE("division by zero is a domain error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}
