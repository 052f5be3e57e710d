#include "qschur/schur_algebra.hpp"

#include <algorithm>
#include <map>

namespace qschur {

namespace {

inline uint64_t pair_key(int a, int b) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
           static_cast<uint32_t>(b);
}

std::mutex g_table_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const SchurTable>> g_tables;

}

SchurTable::SchurTable(int n_, int r_) : n(n_), r(r_) {}

std::shared_ptr<const SchurTable> SchurTable::get(int n, int r) {
    if (n < 1 || r < 0) throw domain_error("SchurTable: need n >= 1, r >= 0");
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto key = std::make_pair(n, r);
    auto it = g_tables.find(key);
    if (it != g_tables.end()) return it->second;
    std::shared_ptr<SchurTable> t(new SchurTable(n, r));
    t->build();
    g_tables[key] = t;
    return t;
}

int SchurTable::lambda_idx(const Weight& w) const {
    auto it = std::lower_bound(lambdas.begin(), lambdas.end(), w);
    if (it == lambdas.end() || *it != w) return -1;
    return static_cast<int>(it - lambdas.begin());
}

const std::vector<std::pair<int, Laurent>>& SchurTable::row(int a, int b) const {
    auto it = prod_.find(pair_key(a, b));
    return it == prod_.end() ? empty_row_ : it->second;
}

void SchurTable::build() {
    labels = enumerate_xi(n, r);
    for (size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
    lambdas = enumerate_lambda(n, r);
    diag_label.resize(lambdas.size());
    for (size_t i = 0; i < lambdas.size(); ++i)
        diag_label[i] = index.at(Mat::diag(lambdas[i]));
    ro_of.resize(labels.size());
    co_of.resize(labels.size());
    dA.resize(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        ro_of[i] = lambda_idx(labels[i].row_sums());
        co_of[i] = lambda_idx(labels[i].col_sums());
        dA[i] = d_A(labels[i]);
    }

    // (xi_A xi_B)(c^C) := coefficient of c^A (x) c^B in Delta(c^C)
    NormalizeMemo memo;
    for (size_t ci = 0; ci < labels.size(); ++ci) {
        TensorPoly d = coproduct(n, labels[ci], &memo);
        for (const auto& [key, coeff] : d) {
            int a = index.at(key.first);
            int b = index.at(key.second);
            prod_[pair_key(a, b)].push_back({static_cast<int>(ci), coeff});
        }
    }
    for (auto& [k, row] : prod_)
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });

    // Fix the dual-pairing leg order.  Orthogonality of the k_lambda holds in
    // either order, so probe with a chirality-sensitive relation as well:
    // k~_1 e~_1 = v^2 e~_1 k~_1 must hold in U(n,r) for n >= 2, r >= 1.
    if (n >= 2 && r >= 1) {
        auto mult_oriented = [&](const SparseVec<Laurent>& x, const SparseVec<Laurent>& y,
                                 bool flip) {
            SparseVec<Laurent> out;
            std::map<int, Laurent> acc;
            for (const auto& [a, ca] : x)
                for (const auto& [b, cb] : y) {
                    auto it = prod_.find(flip ? pair_key(b, a) : pair_key(a, b));
                    if (it == prod_.end()) continue;
                    for (const auto& [c, m] : it->second) {
                        auto [jt, fresh] = acc.try_emplace(c, ca * cb * m);
                        if (!fresh) jt->second += ca * cb * m;
                    }
                }
            for (auto& [i, c] : acc)
                if (!c.is_zero()) out.emplace_back(i, c);
            return out;
        };
        SparseVec<Laurent> kt, e1;
        for (size_t li = 0; li < lambdas.size(); ++li)
            kt.emplace_back(diag_label[li], Laurent::v_pow(lambdas[li][0] - lambdas[li][1]));
        for (size_t li = 0; li < labels.size(); ++li) {
            const Mat& A = labels[li];
            bool ok = A.at(0, 1) == 1;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && !(i == 0 && j == 1) && A.at(i, j) != 0) { ok = false; break; }
            if (ok) e1.emplace_back(static_cast<int>(li), Laurent::v_pow(-static_cast<int>(dA[li])));
        }
        std::sort(kt.begin(), kt.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
        std::sort(e1.begin(), e1.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
        auto relation_holds = [&](bool flip) {
            SparseVec<Laurent> lhs = mult_oriented(kt, e1, flip);
            SparseVec<Laurent> rhs = mult_oriented(e1, kt, flip);
            for (auto& [i, c] : rhs) c = c * Laurent::q();
            return lhs == rhs;
        };
        bool primary = relation_holds(false);
        bool opposite = relation_holds(true);
        if (primary == opposite)
            throw internal_error("pairing-convention self-check did not discriminate");
        flipped_ = !primary;
        if (flipped_) {
            decltype(prod_) swapped;
            for (auto& [k, row] : prod_) {
                int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
                swapped[pair_key(b, a)] = std::move(row);
            }
            prod_ = std::move(swapped);
        }
    }
    // idempotent self-check: k_lambda k_mu = delta k_lambda
    for (size_t li = 0; li < lambdas.size() && li < 3; ++li)
        for (size_t mj = 0; mj < lambdas.size() && mj < 3; ++mj) {
            const auto& rw = row(diag_label[li], diag_label[mj]);
            if (li == mj) {
                if (rw.size() != 1 || rw[0].first != diag_label[li] || !rw[0].second.is_one())
                    throw internal_error("k_lambda idempotent self-check failed");
            } else if (!rw.empty()) {
                throw internal_error("k_lambda orthogonality self-check failed");
            }
        }
}

GenElt operator+(const GenElt& a, const GenElt& b) {
    GenElt r{a.T, {}};
    r.v = sv_axpy(a.v, Laurent(1), b.v);
    return r;
}

GenElt operator-(const GenElt& a, const GenElt& b) {
    GenElt r{a.T, {}};
    r.v = sv_axpy(a.v, Laurent(-1), b.v);
    return r;
}

GenElt GenElt::scaled(const Laurent& c) const { return {T, sv_scale(v, c)}; }

bool operator==(const GenElt& a, const GenElt& b) { return a.v == b.v; }

GenElt operator*(const GenElt& a, const GenElt& b) {
    if (a.T != b.T) throw domain_error("product of elements of different ambient algebras");
    std::map<int, Laurent> acc;
    for (const auto& [x, cx] : a.v)
        for (const auto& [y, cy] : b.v) {
            Laurent f = cx * cy;
            if (f.is_zero()) continue;
            for (const auto& [c, m] : a.T->row(x, y)) {
                auto [it, fresh] = acc.try_emplace(c, f * m);
                if (!fresh) it->second += f * m;
            }
        }
    GenElt r{a.T, {}};
    for (auto& [i, c] : acc)
        if (!c.is_zero()) r.v.emplace_back(i, c);
    return r;
}

GenElt gen_xi(std::shared_ptr<const SchurTable> T, const Mat& A) {
    if (A.sigma() != T->r) throw domain_error("xi_A: sigma(A) != r");
    int i = T->idx(A);
    if (i < 0) throw domain_error("xi_A: label not in Xi(n,r)");
    return {T, {{i, Laurent(1)}}};
}

GenElt gen_bracket(std::shared_ptr<const SchurTable> T, const Mat& A) {
    if (A.sigma() != T->r) throw domain_error("[A]: sigma(A) != r");
    int i = T->idx(A);
    if (i < 0) throw domain_error("[A]: label not in Xi(n,r)");
    return {T, {{i, Laurent::v_pow(static_cast<int>(-T->dA[static_cast<size_t>(i)]))}}};
}

GenElt gen_k_lambda(std::shared_ptr<const SchurTable> T, const Weight& lam) {
    int li = T->lambda_idx(lam);
    if (li < 0) throw domain_error("k_lambda: weight not in Lambda(n,r)");
    return {T, {{T->diag_label[static_cast<size_t>(li)], Laurent(1)}}};
}

GenElt gen_unit(std::shared_ptr<const SchurTable> T) {
    GenElt r{T, {}};
    for (int d : T->diag_label) r.v.emplace_back(d, Laurent(1));
    std::sort(r.v.begin(), r.v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

namespace {

GenElt gen_root_sum(std::shared_ptr<const SchurTable> T, int row, int col) {
    GenElt out{T, {}};
    for (const Weight& mu : enumerate_lambda(T->n, T->r - 1)) {
        Mat A = Mat::diag(mu);
        A.at(row, col) += 1;
        int i = T->idx(A);
        out.v.emplace_back(i, Laurent::v_pow(static_cast<int>(-T->dA[static_cast<size_t>(i)])));
    }
    std::sort(out.v.begin(), out.v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}

GenElt gen_e(std::shared_ptr<const SchurTable> T, int i) {
    if (i < 1 || i > T->n - 1) throw domain_error("e_i: index out of range");
    if (T->r == 0) return {T, {}};
    return gen_root_sum(T, i - 1, i);
}

GenElt gen_f(std::shared_ptr<const SchurTable> T, int i) {
    if (i < 1 || i > T->n - 1) throw domain_error("f_i: index out of range");
    if (T->r == 0) return {T, {}};
    return gen_root_sum(T, i, i - 1);
}

GenElt gen_k(std::shared_ptr<const SchurTable> T, int j, int sign) {
    if (j < 1 || j > T->n) throw domain_error("k_j: index out of range");
    GenElt r{T, {}};
    for (size_t li = 0; li < T->lambdas.size(); ++li)
        r.v.emplace_back(T->diag_label[li],
                         Laurent::v_pow(sign * T->lambdas[li][static_cast<size_t>(j - 1)]));
    std::sort(r.v.begin(), r.v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

GenElt gen_ktilde(std::shared_ptr<const SchurTable> T, int i, int sign) {
    if (i < 1 || i > T->n - 1) throw domain_error("k~_i: index out of range");
    GenElt r{T, {}};
    for (size_t li = 0; li < T->lambdas.size(); ++li) {
        int d = T->lambdas[li][static_cast<size_t>(i - 1)] - T->lambdas[li][static_cast<size_t>(i)];
        r.v.emplace_back(T->diag_label[li], Laurent::v_pow(sign * d));
    }
    std::sort(r.v.begin(), r.v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

GenElt gen_binom_op(std::shared_ptr<const SchurTable> T, int i, long long c, int t, bool inverted) {
    if (i < 1 || i > T->n - 1) throw domain_error("binom_op: index out of range");
    if (t < 0) throw domain_error("binom_op: t must be nonnegative");
    GenElt r{T, {}};
    for (size_t li = 0; li < T->lambdas.size(); ++li) {
        int d = T->lambdas[li][static_cast<size_t>(i - 1)] - T->lambdas[li][static_cast<size_t>(i)];
        Laurent coeff = gauss_binom((inverted ? -d : d) + c, t);
        if (!coeff.is_zero()) r.v.emplace_back(T->diag_label[li], coeff);
    }
    std::sort(r.v.begin(), r.v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

GenElt gen_binom_op_k(std::shared_ptr<const SchurTable> T, int j, long long c, int t) {
    if (j < 1 || j > T->n) throw domain_error("binom_op_k: index out of range");
    if (t < 0) throw domain_error("binom_op_k: t must be nonnegative");
    GenElt r{T, {}};
    for (size_t li = 0; li < T->lambdas.size(); ++li) {
        Laurent coeff = gauss_binom(T->lambdas[li][static_cast<size_t>(j - 1)] + c, t);
        if (!coeff.is_zero()) r.v.emplace_back(T->diag_label[li], coeff);
    }
    std::sort(r.v.begin(), r.v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

GenElt divided_power(const GenElt& g, int N) {
    if (N < 0) throw domain_error("divided_power: negative exponent");
    if (N == 0) return gen_unit(g.T);
    GenElt p = g;
    for (int k = 1; k < N; ++k) p = p * g;
    Laurent fact = qfact(N);
    GenElt out{g.T, {}};
    for (const auto& [i, c] : p.v)
        out.v.emplace_back(i, Laurent::exact_div(c, fact));
    return out;
}

bool verify_higher_dp_identity(int n, int r, int N, int M, int i, int j) {
    if (!(N > M && M >= 0)) throw domain_error("identity requires N > M >= 0");
    if (i < 1 || i > n - 1 || j < 1 || j > n - 1 || (i != j + 1 && j != i + 1))
        throw domain_error("identity requires adjacent indices");
    auto T = SchurTable::get(n, r);
    GenElt fi = gen_f(T, i), fj = gen_f(T, j);
    auto dp = [&](const GenElt& g, int m) { return divided_power(g, m); };

    GenElt lhs1 = dp(fi, N) * dp(fj, M);
    GenElt rhs1{T, {}};
    GenElt lhs2 = dp(fj, M) * dp(fi, N);
    GenElt rhs2{T, {}};
    for (int s = N - M; s <= N; ++s) {
        Laurent sign((s + N - M) % 2 == 0 ? 1 : -1);
        Laurent c = sign * gauss_binom(s - 1, N - M - 1);
        if (c.is_zero()) continue;
        rhs1 = rhs1 + (dp(fi, N - s) * dp(fj, M) * dp(fi, s)).scaled(c);
        rhs2 = rhs2 + (dp(fi, s) * dp(fj, M) * dp(fi, N - s)).scaled(c);
    }
    return lhs1 == rhs1 && lhs2 == rhs2;
}

namespace {
std::mutex g_sf_mutex;
std::map<std::tuple<int, int, int>, std::shared_ptr<SchurField>> g_sfields;
}

std::shared_ptr<SchurField> SchurField::get(int n, int r, const FieldSpec& f) {
    if (f.kind != FieldSpec::Kind::cyclotomic)
        throw unsupported_error("field-level algebra handles need the cyclotomic backend");
    auto T = SchurTable::get(n, r);
    std::lock_guard<std::mutex> lock(g_sf_mutex);
    auto key = std::make_tuple(n, r, f.lprime);
    auto it = g_sfields.find(key);
    if (it != g_sfields.end()) return it->second;
    auto S = std::make_shared<SchurField>(T, f);
    g_sfields[key] = S;
    return S;
}

SchurField::SchurField(std::shared_ptr<const SchurTable> T, const FieldSpec& f)
    : T_(std::move(T)), f_(f), F_(CycloField::get(f.lprime)) {
    if (f_.kind != FieldSpec::Kind::cyclotomic)
        throw unsupported_error("SchurField currently runs on the cyclotomic backend");
    for (const Residue& x : enumerate_lambda_bar(T_->n, T_->r, f_.lprime)) {
        bar_index_[x] = static_cast<int>(bar_classes_.size());
        bar_classes_.push_back(x);
    }
    lam_class_.resize(T_->lambdas.size());
    for (size_t li = 0; li < T_->lambdas.size(); ++li)
        lam_class_[li] = bar_index_.at(bar(T_->lambdas[li], f_.lprime));
    ro_class_.resize(T_->labels.size());
    co_class_.resize(T_->labels.size());
    for (size_t i = 0; i < T_->labels.size(); ++i) {
        ro_class_[i] = lam_class_[static_cast<size_t>(T_->ro_of[i])];
        co_class_[i] = lam_class_[static_cast<size_t>(T_->co_of[i])];
    }
}

int SchurField::bar_class_idx(const Residue& x) const {
    auto it = bar_index_.find(x);
    return it == bar_index_.end() ? -1 : it->second;
}

SparseVec<Cyclo> SchurField::specialize_elt(const GenElt& x) const {
    SparseVec<Cyclo> out;
    for (const auto& [i, c] : x.v) {
        Cyclo s = specialize(c, f_);
        if (!s.is_zero()) out.emplace_back(i, s);
    }
    return out;
}

const std::vector<std::pair<int, Cyclo>>& SchurField::srow(int a, int b) const {
    uint64_t key = pair_key(a, b);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = srows_.find(key);
    if (it != srows_.end()) return it->second;
    std::vector<std::pair<int, Cyclo>> row;
    for (const auto& [c, m] : T_->row(a, b)) {
        Cyclo s = specialize(m, f_);
        if (!s.is_zero()) row.emplace_back(c, s);
    }
    return srows_.emplace(key, std::move(row)).first->second;
}

SparseVec<Cyclo> SchurField::mult(const SparseVec<Cyclo>& a, const SparseVec<Cyclo>& b) const {
    std::map<int, Cyclo> acc;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            Cyclo f = cx * cy;
            if (f.is_zero()) continue;
            for (const auto& [c, m] : srow(x, y)) {
                auto [it, fresh] = acc.try_emplace(c, f * m);
                if (!fresh) it->second += f * m;
            }
        }
    SparseVec<Cyclo> out;
    for (auto& [i, c] : acc)
        if (!c.is_zero()) out.emplace_back(i, c);
    return out;
}

SparseVec<Cyclo> SchurField::xi(const Mat& A) const { return specialize_elt(gen_xi(T_, A)); }
SparseVec<Cyclo> SchurField::bracket(const Mat& A) const {
    return specialize_elt(gen_bracket(T_, A));
}
SparseVec<Cyclo> SchurField::k_lambda(const Weight& lam) const {
    return specialize_elt(gen_k_lambda(T_, lam));
}
SparseVec<Cyclo> SchurField::unit() const { return specialize_elt(gen_unit(T_)); }
SparseVec<Cyclo> SchurField::e(int i) const { return specialize_elt(gen_e(T_, i)); }
SparseVec<Cyclo> SchurField::f(int i) const { return specialize_elt(gen_f(T_, i)); }
SparseVec<Cyclo> SchurField::k(int j, int sign) const {
    return specialize_elt(gen_k(T_, j, sign));
}
SparseVec<Cyclo> SchurField::ktilde(int i, int sign) const {
    return specialize_elt(gen_ktilde(T_, i, sign));
}

SparseVec<Cyclo> SchurField::p_bar(const Residue& lb) const {
    SparseVec<Cyclo> out;
    if (lb.modulus != f_.lprime) throw domain_error("p_bar: residue modulus mismatch");
    auto it = bar_index_.find(lb);
    if (it == bar_index_.end()) return out;  // outside the bar image: zero
    int cls = it->second;
    for (size_t li = 0; li < T_->lambdas.size(); ++li)
        if (lam_class_[li] == cls) out.emplace_back(T_->diag_label[li], one());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}
