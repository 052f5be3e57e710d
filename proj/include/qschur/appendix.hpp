#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qschur/schur_algebra.hpp"

namespace qschur {

/// Element of the integral zero part U^0_Z(n,r) in the k_lambda coordinates:
/// one Laurent polynomial per composition, multiplied pointwise.
struct DiagElt {
    std::shared_ptr<const SchurTable> T;
    std::vector<Laurent> val;  // indexed like T->lambdas

    static DiagElt unit(std::shared_ptr<const SchurTable> T);
    static DiagElt k_indicator(std::shared_ptr<const SchurTable> T, const Weight& lam);

    friend DiagElt operator+(const DiagElt& a, const DiagElt& b);
    friend DiagElt operator-(const DiagElt& a, const DiagElt& b);
    friend DiagElt operator*(const DiagElt& a, const DiagElt& b);  // pointwise
    DiagElt scaled(const Laurent& c) const;
    friend bool operator==(const DiagElt& a, const DiagElt& b) { return a.val == b.val; }
};

/// Expression tree certifying that k_lambda lies in the image of the integral
/// zero part of quantum sl_n: leaves are the generators [k~_i; c over t]
/// (optionally on k~_i^{-1}) and references to previously certified k_mu.
struct CertNode {
    enum class Op { unit, gen_binom, gen_binom_inv, kref, sum, prod, scale };
    Op op = Op::unit;
    int i = 0;
    long long c = 0;
    int t = 0;
    Weight mu;       // kref
    Laurent coeff;   // scale
    std::vector<std::shared_ptr<CertNode>> kids;
};

struct KLambdaCertificate {
    Weight lambda;
    std::shared_ptr<CertNode> expr;
};

/// Shared store of certificates for one (n, r); built by downward induction
/// over the strata X_i of the appendix proof.
class CertStore {
public:
    CertStore(int n, int r);

    int n, r;
    std::shared_ptr<const SchurTable> T;

    const KLambdaCertificate& certify(const Weight& lambda);

    /// Evaluate an expression in U^0_Z(n,r) (with kref expansion).
    DiagElt eval(const CertNode& node);

    /// Every certificate re-evaluates exactly to its k_lambda.
    bool verify_all();

    std::string render(const CertNode& node) const;

private:
    std::shared_ptr<CertNode> slice_sum(const Weight& lambda, int i0, int k);
    std::map<Weight, KLambdaCertificate> store_;
    std::map<Weight, DiagElt> eval_memo_;
};

bool verify_integral_surjectivity(int n, int r);

struct LittleZeroReport {
    int generated_dim = 0;  // subalgebra of u~0(n,r) generated by the k~_i images
    int dim_zero = 0;       // #Lambda-bar(n,r)_{l'}
    bool equal = false;
};

/// Dimension of the zero-part image of the little quantum sl_n, compared with
/// the zero part of the little algebra itself.
LittleZeroReport little_zero_image(int n, int r, const FieldSpec& f);

/// The relation k~_2 = eps^{-r} k~_1 from the counterexample at n = l' = 3.
bool counterexample_relation_holds(int n, int r, const FieldSpec& f);

}
