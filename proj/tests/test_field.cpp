#include "doctest.h"

#include "qschur/cyclotomic.hpp"
#include "qschur/laurent.hpp"

using namespace qschur;

TEST_CASE("field spec derived data") {
    FieldSpec f3 = FieldSpec::cyclotomic_field(3);
    CHECK(f3.l() == 3);
    FieldSpec f4 = FieldSpec::cyclotomic_field(4);
    CHECK(f4.l() == 2);
    FieldSpec f6 = FieldSpec::cyclotomic_field(6);
    CHECK(f6.l() == 3);
    CHECK_THROWS_AS(FieldSpec::cyclotomic_field(2), domain_error);
}

TEST_CASE("cyclotomic arithmetic basics") {
    const CycloField* F5 = CycloField::get(5);
    CHECK(F5->phi == 4);
    Cyclo e = Cyclo::eps_pow(F5, 1);
    // eps^5 = 1 and 1 + eps + ... + eps^4 = 0
    CHECK(e.pow(5) == Cyclo::one(F5));
    Cyclo s = Cyclo::zero(F5);
    for (int k = 0; k < 5; ++k) s += Cyclo::eps_pow(F5, k);
    CHECK(s.is_zero());
    // inverse
    Cyclo x = Cyclo::one(F5) + e;
    CHECK((x * x.inv()).is_one());
    Cyclo y = Cyclo::from_mpq(F5, mpq_class(3, 7)) * e + Cyclo::from_int(F5, 2);
    CHECK((y * y.inv()).is_one());
}

TEST_CASE("specialization v -> eps") {
    FieldSpec f4 = FieldSpec::cyclotomic_field(4);
    const CycloField* F4 = CycloField::get(4);
    // [l'] specializes to 0 at a primitive l'-th root
    CHECK(specialize(qint(4), f4).is_zero());
    FieldSpec f3 = FieldSpec::cyclotomic_field(3);
    CHECK(specialize(qint(3), f3).is_zero());
    // gauss_binom(2,1) = v + v^-1 -> eps + eps^3 at l' = 4
    Cyclo expect = Cyclo::eps_pow(F4, 1) + Cyclo::eps_pow(F4, 3);
    CHECK(specialize(gauss_binom(2, 1), f4) == expect);
    CHECK(specialize(Laurent(1), f4).is_one());
}

TEST_CASE("eps_log") {
    FieldSpec f3 = FieldSpec::cyclotomic_field(3);
    const CycloField* F3 = CycloField::get(3);
    CHECK(eps_log(Cyclo::one(F3), f3) == 0);
    CHECK(eps_log(Cyclo::eps_pow(F3, 2), f3) == 2);
    Cyclo bad = Cyclo::eps_pow(F3, 1) + Cyclo::one(F3);
    CHECK(!eps_log(bad, f3).has_value());
}

TEST_CASE("Lusztig integrality of binomial differences") {
    // specialize([m+c over l]) - specialize([m+c' over l]) lies in the image of Z
    for (int lprime : {3, 4, 5}) {
        FieldSpec f = FieldSpec::cyclotomic_field(lprime);
        int l = f.l();
        for (int m = -2 * lprime; m <= 2 * lprime; m += 3)
            for (int c = -2 * lprime; c <= 2 * lprime; c += 5)
                for (int cp = -2 * lprime; cp <= 2 * lprime; cp += 7) {
                    Cyclo d = specialize(gauss_binom(m + c, l), f) -
                              specialize(gauss_binom(m + cp, l), f);
                    mpz_class z;
                    CHECK(d.is_rational_integer(z));
                }
    }
}

TEST_CASE("prime-field backend") {
    FieldSpec f = FieldSpec::prime_field(5);
    CHECK(f.p == 11);  // smallest p with 5 | p-1
    GFp e(static_cast<unsigned long long>(f.eps_p), static_cast<unsigned long long>(f.p));
    CHECK(e.pow(5).v == 1);
    CHECK(e.v != 1);
    CHECK(specialize_prime(qint(5), f).is_zero());
    CHECK(eps_log_prime(e * e, f) == 2);
    // order check: l' must divide p-1
    CHECK_THROWS_AS(FieldSpec::prime_field(5, 13), domain_error);
}
