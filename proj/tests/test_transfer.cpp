#include "doctest.h"

#include "qschur/transfer.hpp"

using namespace qschur;

TEST_CASE("psi generator images and unitality") {
    for (int lprime : {3, 4}) {
        FieldSpec f = FieldSpec::cyclotomic_field(lprime);
        PsiMap psi(2, 1, f);
        CHECK(psi.verify_generator_images());
    }
    FieldSpec f3 = FieldSpec::cyclotomic_field(3);
    PsiMap psi31(3, 1, f3);
    CHECK(psi31.verify_generator_images());
}

TEST_CASE("psi is an algebra homomorphism") {
    FieldSpec f = FieldSpec::cyclotomic_field(3);
    for (int r = 1; r <= 3; ++r) {
        PsiMap psi(2, r, f);
        CHECK(psi.verify_homomorphism());
    }
}

TEST_CASE("psi restricts to the little subalgebras") {
    for (int lprime : {3, 4}) {
        FieldSpec f = FieldSpec::cyclotomic_field(lprime);
        PsiMap psi(2, 2, f);
        CHECK(psi.verify_little_restriction());
    }
}

TEST_CASE("rho displayed actions") {
    for (int lprime : {3, 4}) {
        FieldSpec f = FieldSpec::cyclotomic_field(lprime);
        for (int r = 1; r <= 3; ++r) {
            RhoMap rho(2, r, f);
            CHECK(rho.verify_generator_images());
            CHECK(rho.verify_p_images());
            CHECK(rho.surjective());
        }
    }
}

TEST_CASE("rho homomorphism law") {
    for (int lprime : {3, 4}) {
        FieldSpec f = FieldSpec::cyclotomic_field(lprime);
        for (int r = 1; r <= (lprime == 3 ? 4 : 3); ++r) {
            RhoMap rho(2, r, f);
            CHECK(rho.verify_homomorphism());
        }
    }
    RhoMap rho32(3, 1, FieldSpec::cyclotomic_field(3));
    CHECK(rho32.verify_homomorphism());
}

TEST_CASE("rho dualizes multiplication by c_11^{l'}") {
    FieldSpec f = FieldSpec::cyclotomic_field(3);
    RhoMap rho(2, 2, f);
    CHECK(rho.verify_coordinate_dual());
    RhoMap rho4(2, 1, FieldSpec::cyclotomic_field(4));
    CHECK(rho4.verify_coordinate_dual());
}

TEST_CASE("stabilization") {
    FieldSpec f = FieldSpec::cyclotomic_field(3);
    auto st = stabilization_check(2, 6, f);
    CHECK(st.dim_r == st.dim_r_plus);
    CHECK(st.rho_bijective);
    CHECK(st.bound_predicts_equality);

    auto st2 = stabilization_check(2, 2, f);
    CHECK(st2.dim_r < st2.dim_r_plus);
    CHECK(!st2.rho_bijective);
    CHECK(!st2.bound_predicts_equality);

    // bar Lambda stabilizes exactly from r = (n-1)(l'-1) on
    CHECK(stabilization_check(2, 2, f).lambda_bar_stable);       // r = (n-1)(l'-1) = 2
    CHECK(!stabilization_check(2, 1, f).lambda_bar_stable);
}
