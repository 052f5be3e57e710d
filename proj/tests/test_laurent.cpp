#include "doctest.h"

#include "qschur/laurent.hpp"

using namespace qschur;

TEST_CASE("quantum integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1).is_one());
    CHECK(qint(2) == Laurent::v_pow(1) + Laurent::v_pow(-1));
    CHECK(qint(-2) == -(Laurent::v_pow(1) + Laurent::v_pow(-1)));
    CHECK(qint(3) == Laurent::v_pow(2) + Laurent(1) + Laurent::v_pow(-2));
}

TEST_CASE("quantum factorials") {
    CHECK(qfact(0).is_one());
    CHECK(qfact(1).is_one());
    CHECK(qfact(2) == qint(2));
    // [3]! = (v+v^-1)(v^2+1+v^-2), multiplied out
    CHECK(qfact(3) == qint(2) * qint(3));
    CHECK(qfact(3) == Laurent::v_pow(3) + Laurent::v_pow(1, 2) + Laurent::v_pow(-1, 2) +
                          Laurent::v_pow(-3));
}

TEST_CASE("Gaussian binomials: pinned values") {
    CHECK(gauss_binom(5, 0).is_one());
    CHECK(gauss_binom(-7, 0).is_one());
    CHECK(gauss_binom(3, 4).is_zero());  // t > c >= 0
    CHECK(gauss_binom(3, 2) == qint(3)); // v^2 + 1 + v^-2, by expanding the product
    CHECK(gauss_binom(2, 1) == qint(2));
    CHECK(gauss_binom(4, 2) * qfact(2) * qfact(2) == qfact(4));
}

TEST_CASE("bar symmetry of Gaussian binomials") {
    for (long long c = -12; c <= 12; ++c)
        for (int t = 0; t <= 12; ++t) {
            Laurent g = gauss_binom(c, t);
            CHECK(g == g.bar());
        }
}

TEST_CASE("quantum Pascal identity") {
    // [c over t] = v^t [c-1 over t] + v^{t-c} [c-1 over t-1]
    for (long long c = 1; c <= 12; ++c)
        for (int t = 1; t <= static_cast<int>(c); ++t) {
            Laurent lhs = gauss_binom(c, t);
            Laurent rhs = Laurent::v_pow(t) * gauss_binom(c - 1, t) +
                          Laurent::v_pow(static_cast<int>(t - c)) * gauss_binom(c - 1, t - 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("factorial identity") {
    // [c over t] [t]! [c-t]! = [c]!
    for (long long c = 0; c <= 10; ++c)
        for (int t = 0; t <= static_cast<int>(c); ++t)
            CHECK(gauss_binom(c, t) * qfact(t) * qfact(static_cast<int>(c) - t) ==
                  qfact(static_cast<int>(c)));
}

TEST_CASE("exact division") {
    Laurent a = qfact(4);
    Laurent b = qint(3);
    CHECK(Laurent::exact_div(a * b, b) == a);
    CHECK_THROWS_AS(Laurent::exact_div(qint(2) + Laurent(1), qint(2)), internal_error);
    // (v + v^-1)^2 = [3] + 1
    CHECK(Laurent::exact_div(qint(3) + Laurent(1), qint(2)) == qint(2));
}

TEST_CASE("rendering") {
    CHECK(qint(3).str() == "v^-2 + 1 + v^2");
    CHECK(Laurent().str() == "0");
    CHECK((-qint(2)).str() == "-v^-1 - v");
    CHECK(Laurent::v_pow(2, 3).str() == "3*v^2");
}
