#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "qschur/cyclotomic.hpp"
#include "qschur/laurent.hpp"
#include "qschur/linear_algebra.hpp"
#include "qschur/matrix_index.hpp"
#include "qschur/quantum_matrix.hpp"
#include "qschur/weights.hpp"

namespace qschur {

/// Structure constants of the q-Schur algebra U(n,r) over Z[v,v^-1], obtained
/// by dualizing the degree-r coalgebra: (xi_A xi_B)(c^C) is the coefficient of
/// c^A (x) c^B in the coproduct of c^C.  Built once per (n,r) and then frozen.
class SchurTable {
public:
    int n, r;
    std::vector<Mat> labels;                       // Xi(n,r), sorted
    std::unordered_map<Mat, int, MatHash> index;
    std::vector<Weight> lambdas;                   // Lambda(n,r), sorted
    std::vector<int> diag_label;                   // lambda index -> label index
    std::vector<int> ro_of, co_of;                 // label -> lambda index
    std::vector<long long> dA;                     // label -> d_A

    /// Shared, immutable after construction.
    static std::shared_ptr<const SchurTable> get(int n, int r);

    int idx(const Mat& m) const {
        auto it = index.find(m);
        return it == index.end() ? -1 : it->second;
    }

    int lambda_idx(const Weight& w) const;

    /// Product row of xi_a xi_b as (label, coefficient) pairs.
    const std::vector<std::pair<int, Laurent>>& row(int a, int b) const;

    /// All nonzero product rows keyed by (a << 32) | b.
    const std::unordered_map<uint64_t, std::vector<std::pair<int, Laurent>>>& products() const {
        return prod_;
    }

    bool convention_flipped() const { return flipped_; }

private:
    SchurTable(int n_, int r_);
    void build();

    std::unordered_map<uint64_t, std::vector<std::pair<int, Laurent>>> prod_;
    std::vector<std::pair<int, Laurent>> empty_row_;
    bool flipped_ = false;
};

/// Element of U(n,r) over the generic Laurent domain.
struct GenElt {
    std::shared_ptr<const SchurTable> T;
    SparseVec<Laurent> v;

    bool is_zero() const { return v.empty(); }
    friend GenElt operator+(const GenElt& a, const GenElt& b);
    friend GenElt operator-(const GenElt& a, const GenElt& b);
    friend GenElt operator*(const GenElt& a, const GenElt& b);
    GenElt scaled(const Laurent& c) const;
    friend bool operator==(const GenElt& a, const GenElt& b);
};

/// Generic basis and generator elements.
GenElt gen_xi(std::shared_ptr<const SchurTable> T, const Mat& A);
GenElt gen_bracket(std::shared_ptr<const SchurTable> T, const Mat& A);   // [A] = v^{-d_A} xi_A
GenElt gen_k_lambda(std::shared_ptr<const SchurTable> T, const Weight& lam);
GenElt gen_unit(std::shared_ptr<const SchurTable> T);
GenElt gen_e(std::shared_ptr<const SchurTable> T, int i);                // 1 <= i <= n-1
GenElt gen_f(std::shared_ptr<const SchurTable> T, int i);
GenElt gen_k(std::shared_ptr<const SchurTable> T, int j, int sign = +1); // k_j^{+-1}
GenElt gen_ktilde(std::shared_ptr<const SchurTable> T, int i, int sign = +1);

/// [k~_i; c over t] (inverted = true uses k~_i^{-1}): the diagonal operator
/// sum_lambda [ +-(lambda_i - lambda_{i+1}) + c over t ] k_lambda.
GenElt gen_binom_op(std::shared_ptr<const SchurTable> T, int i, long long c, int t,
                    bool inverted = false);

/// [k_j; c over t] built on k_j itself: sum_lambda [lambda_j + c over t] k_lambda.
GenElt gen_binom_op_k(std::shared_ptr<const SchurTable> T, int j, long long c, int t);

/// Divided power g^N / [N]!; every coefficient divides exactly in Z[v,v^-1].
GenElt divided_power(const GenElt& g, int N);

/// Operator identities for adjacent divided powers, checked exactly in U(n,r):
/// F_i^{(N)} F_j^{(M)} = sum_s (-1)^{s+N-M} [s-1 over N-M-1] F_i^{(N-s)} F_j^{(M)} F_i^{(s)}
/// and the transposed form.  Requires N > M >= 0 and |i-j| = 1.
bool verify_higher_dp_identity(int n, int r, int N, int M, int i, int j);

/// U(n,r) specialized at a field: carries per-field caches of the structure
/// constants and the standard specialized elements.
class SchurField {
public:
    SchurField(std::shared_ptr<const SchurTable> T, const FieldSpec& f);

    /// Shared per-(n, r, l') instance so specialized rows are cached once.
    static std::shared_ptr<SchurField> get(int n, int r, const FieldSpec& f);

    const SchurTable& table() const { return *T_; }
    std::shared_ptr<const SchurTable> table_ptr() const { return T_; }
    const FieldSpec& field() const { return f_; }
    const CycloField* cyclo() const { return F_; }

    int dim() const { return static_cast<int>(T_->labels.size()); }

    Cyclo zero() const { return Cyclo::zero(F_); }
    Cyclo one() const { return Cyclo::one(F_); }
    Cyclo eps(long long k) const { return Cyclo::eps_pow(F_, k); }

    SparseVec<Cyclo> specialize_elt(const GenElt& x) const;
    SparseVec<Cyclo> mult(const SparseVec<Cyclo>& a, const SparseVec<Cyclo>& b) const;

    SparseVec<Cyclo> xi(const Mat& A) const;
    SparseVec<Cyclo> bracket(const Mat& A) const;
    SparseVec<Cyclo> k_lambda(const Weight& lam) const;
    SparseVec<Cyclo> unit() const;
    SparseVec<Cyclo> e(int i) const;
    SparseVec<Cyclo> f(int i) const;
    SparseVec<Cyclo> k(int j, int sign = +1) const;
    SparseVec<Cyclo> ktilde(int i, int sign = +1) const;

    /// p_{bar lambda} = sum of k_mu over the bar class mod l'.
    SparseVec<Cyclo> p_bar(const Residue& lb) const;

    /// Residue classes mod l' of row and column sums of a label.
    const std::vector<Residue>& bar_classes() const { return bar_classes_; }
    int bar_class_idx(const Residue& x) const;
    int ro_class(int label) const { return ro_class_[static_cast<size_t>(label)]; }
    int co_class(int label) const { return co_class_[static_cast<size_t>(label)]; }

private:
    const std::vector<std::pair<int, Cyclo>>& srow(int a, int b) const;

    std::shared_ptr<const SchurTable> T_;
    FieldSpec f_;
    const CycloField* F_;
    std::vector<Residue> bar_classes_;             // Lambda-bar(n,r)_{l'}
    std::map<Residue, int> bar_index_;
    std::vector<int> lam_class_;                   // lambda idx -> class idx
    std::vector<int> ro_class_, co_class_;         // label -> class idx
    mutable std::mutex mu_;
    mutable std::unordered_map<uint64_t, std::vector<std::pair<int, Cyclo>>> srows_;
};

}
