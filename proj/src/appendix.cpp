#include "qschur/appendix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qschur/linear_algebra.hpp"

namespace qschur {

DiagElt DiagElt::unit(std::shared_ptr<const SchurTable> T) {
    DiagElt d{T, std::vector<Laurent>(T->lambdas.size(), Laurent(1))};
    return d;
}

DiagElt DiagElt::k_indicator(std::shared_ptr<const SchurTable> T, const Weight& lam) {
    DiagElt d{T, std::vector<Laurent>(T->lambdas.size(), Laurent())};
    int li = T->lambda_idx(lam);
    if (li < 0) throw domain_error("k_indicator: weight outside Lambda(n,r)");
    d.val[static_cast<size_t>(li)] = Laurent(1);
    return d;
}

DiagElt operator+(const DiagElt& a, const DiagElt& b) {
    DiagElt r = a;
    for (size_t i = 0; i < r.val.size(); ++i) r.val[i] += b.val[i];
    return r;
}

DiagElt operator-(const DiagElt& a, const DiagElt& b) {
    DiagElt r = a;
    for (size_t i = 0; i < r.val.size(); ++i) r.val[i] -= b.val[i];
    return r;
}

DiagElt operator*(const DiagElt& a, const DiagElt& b) {
    DiagElt r = a;
    for (size_t i = 0; i < r.val.size(); ++i) r.val[i] *= b.val[i];
    return r;
}

DiagElt DiagElt::scaled(const Laurent& c) const {
    DiagElt r = *this;
    for (auto& x : r.val) x *= c;
    return r;
}

namespace {

int diff_at(const Weight& w, int i) {  // 1-based i, lambda_i - lambda_{i+1}
    return w[static_cast<size_t>(i - 1)] - w[static_cast<size_t>(i)];
}

int stratum(const Weight& w) {
    int m = -static_cast<int>(1e9);
    for (int i = 1; i < static_cast<int>(w.size()); ++i) m = std::max(m, diff_at(w, i));
    return m;
}

std::shared_ptr<CertNode> node_gen(int i, long long c, int t, bool inv) {
    auto n = std::make_shared<CertNode>();
    n->op = inv ? CertNode::Op::gen_binom_inv : CertNode::Op::gen_binom;
    n->i = i;
    n->c = c;
    n->t = t;
    return n;
}

std::shared_ptr<CertNode> node_kref(const Weight& mu) {
    auto n = std::make_shared<CertNode>();
    n->op = CertNode::Op::kref;
    n->mu = mu;
    return n;
}

std::shared_ptr<CertNode> node_scale(const Laurent& c, std::shared_ptr<CertNode> kid) {
    auto n = std::make_shared<CertNode>();
    n->op = CertNode::Op::scale;
    n->coeff = c;
    n->kids.push_back(std::move(kid));
    return n;
}

std::shared_ptr<CertNode> node_sum(std::vector<std::shared_ptr<CertNode>> kids) {
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<CertNode>();
    n->op = CertNode::Op::sum;
    n->kids = std::move(kids);
    return n;
}

std::shared_ptr<CertNode> node_prod(std::vector<std::shared_ptr<CertNode>> kids) {
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<CertNode>();
    n->op = CertNode::Op::prod;
    n->kids = std::move(kids);
    return n;
}

}

CertStore::CertStore(int n_, int r_) : n(n_), r(r_), T(SchurTable::get(n_, r_)) {}

DiagElt CertStore::eval(const CertNode& node) {
    switch (node.op) {
        case CertNode::Op::unit:
            return DiagElt::unit(T);
        case CertNode::Op::gen_binom:
        case CertNode::Op::gen_binom_inv: {
            DiagElt d{T, std::vector<Laurent>(T->lambdas.size(), Laurent())};
            for (size_t li = 0; li < T->lambdas.size(); ++li) {
                int df = diff_at(T->lambdas[li], node.i);
                if (node.op == CertNode::Op::gen_binom_inv) df = -df;
                d.val[li] = gauss_binom(df + node.c, node.t);
            }
            return d;
        }
        case CertNode::Op::kref: {
            auto it = eval_memo_.find(node.mu);
            if (it != eval_memo_.end()) return it->second;
            const KLambdaCertificate& cert = certify(node.mu);
            DiagElt d = eval(*cert.expr);
            eval_memo_[node.mu] = d;
            return d;
        }
        case CertNode::Op::sum: {
            DiagElt d = eval(*node.kids[0]);
            for (size_t k = 1; k < node.kids.size(); ++k) d = d + eval(*node.kids[k]);
            return d;
        }
        case CertNode::Op::prod: {
            DiagElt d = eval(*node.kids[0]);
            for (size_t k = 1; k < node.kids.size(); ++k) d = d * eval(*node.kids[k]);
            return d;
        }
        case CertNode::Op::scale:
            return eval(*node.kids[0]).scaled(node.coeff);
    }
    throw internal_error("unreachable certificate op");
}

std::shared_ptr<CertNode> CertStore::slice_sum(const Weight& lambda, int i0, int k) {
    // sum over Z = { nu in X_k : nu_{i0} - nu_{i0+1} = k } built per the proof
    std::vector<std::shared_ptr<CertNode>> terms{node_gen(i0, r, k + r, false)};
    for (const Weight& mu : T->lambdas) {
        if (stratum(mu) <= k) continue;
        Laurent c = gauss_binom(diff_at(mu, i0) + r, k + r);
        if (c.is_zero()) continue;
        terms.push_back(node_scale(-c, node_kref(mu)));
    }
    return node_sum(std::move(terms));
}

const KLambdaCertificate& CertStore::certify(const Weight& lambda) {
    auto it = store_.find(lambda);
    if (it != store_.end()) return it->second;
    if (T->lambda_idx(lambda) < 0) throw domain_error("certify: weight outside Lambda(n,r)");

    KLambdaCertificate cert;
    cert.lambda = lambda;

    if (n == 1) {
        auto u = std::make_shared<CertNode>();
        u->op = CertNode::Op::unit;
        cert.expr = u;
    } else {
        int k = stratum(lambda);
        int i0 = 0;
        for (int i = 1; i < n; ++i)
            if (diff_at(lambda, i) == k) { i0 = i; break; }

        bool top = false;
        for (int i = 1; i < n; ++i)
            if (lambda == Weight([&] {
                    Weight w(static_cast<size_t>(n), 0);
                    w[static_cast<size_t>(i - 1)] = r;
                    return w;
                }())) {
                cert.expr = node_gen(i, r, 2 * r, false);
                top = true;
                break;
            }
        Weight last(static_cast<size_t>(n), 0);
        last[static_cast<size_t>(n - 1)] = r;
        if (!top && lambda == last) {
            cert.expr = node_gen(n - 1, r, 2 * r, true);
            top = true;
        }
        if (!top) {
            auto SZ = slice_sum(lambda, i0, k);
            // refine Z by the other coordinates: S_{s,i} by downward induction on s
            std::set<Weight> Z;
            for (const Weight& nu : T->lambdas)
                if (stratum(nu) == k && diff_at(nu, i0) == k) Z.insert(nu);
            std::vector<std::shared_ptr<CertNode>> factors;
            for (int i = 1; i < n; ++i) {
                if (i == i0) continue;
                std::set<int> slice_vals;
                for (const Weight& nu : Z) slice_vals.insert(diff_at(nu, i));
                int target = diff_at(lambda, i);
                // walk s downward from the maximum, building each slice sum
                std::map<int, std::shared_ptr<CertNode>> S;
                std::vector<int> vals(slice_vals.rbegin(), slice_vals.rend());
                for (int s : vals) {
                    std::vector<std::shared_ptr<CertNode>> inner{node_gen(i, r, s + r, false)};
                    for (int sp : vals) {
                        if (sp <= s) continue;
                        Laurent c = gauss_binom(sp + r, s + r);
                        if (c.is_zero()) continue;
                        inner.push_back(node_scale(-c, S.at(sp)));
                    }
                    S[s] = node_prod({SZ, node_sum(std::move(inner))});
                    if (s == target) break;
                }
                factors.push_back(S.at(target));
            }
            cert.expr = factors.empty() ? SZ : node_prod(std::move(factors));
        }
    }

    // soundness: the certificate must evaluate exactly to k_lambda
    DiagElt got = eval(*cert.expr);
    if (!(got == DiagElt::k_indicator(T, lambda)))
        throw internal_error("k_lambda certificate failed to re-evaluate");
    auto [sit, fresh] = store_.emplace(lambda, std::move(cert));
    (void)fresh;
    return sit->second;
}

bool CertStore::verify_all() {
    for (const Weight& lam : T->lambdas) {
        const KLambdaCertificate& c = certify(lam);
        if (!(eval(*c.expr) == DiagElt::k_indicator(T, lam))) return false;
    }
    return true;
}

std::string CertStore::render(const CertNode& node) const {
    std::ostringstream os;
    switch (node.op) {
        case CertNode::Op::unit:
            os << "1";
            break;
        case CertNode::Op::gen_binom:
            os << "[k~_" << node.i << ";" << node.c << " over " << node.t << "]";
            break;
        case CertNode::Op::gen_binom_inv:
            os << "[k~_" << node.i << "^-1;" << node.c << " over " << node.t << "]";
            break;
        case CertNode::Op::kref: {
            os << "k(";
            for (size_t i = 0; i < node.mu.size(); ++i) {
                if (i) os << ",";
                os << node.mu[i];
            }
            os << ")";
            break;
        }
        case CertNode::Op::sum: {
            os << "(";
            for (size_t i = 0; i < node.kids.size(); ++i) {
                if (i) os << " + ";
                os << render(*node.kids[i]);
            }
            os << ")";
            break;
        }
        case CertNode::Op::prod: {
            os << "(";
            for (size_t i = 0; i < node.kids.size(); ++i) {
                if (i) os << " * ";
                os << render(*node.kids[i]);
            }
            os << ")";
            break;
        }
        case CertNode::Op::scale:
            os << "(" << node.coeff.str() << ") * " << render(*node.kids[0]);
            break;
    }
    return os.str();
}

bool verify_integral_surjectivity(int n, int r) {
    CertStore store(n, r);
    return store.verify_all();
}

LittleZeroReport little_zero_image(int n, int r, const FieldSpec& f) {
    auto S = SchurField::get(n, r, f);
    const SchurTable& T = S->table();
    size_t m = T.lambdas.size();
    Cyclo one = S->one();
    // diagonal vectors over Lambda(n,r); pointwise products
    auto as_vec = [&](auto&& eigen) {
        SparseVec<Cyclo> v;
        for (size_t li = 0; li < m; ++li) {
            Cyclo c = eigen(T.lambdas[li]);
            if (!c.is_zero()) v.emplace_back(static_cast<int>(li), c);
        }
        return v;
    };
    std::vector<SparseVec<Cyclo>> gens;
    for (int i = 1; i < n; ++i) {
        int ii = i;
        gens.push_back(as_vec([&](const Weight& w) { return S->eps(diff_at(w, ii)); }));
        gens.push_back(as_vec([&](const Weight& w) { return S->eps(-diff_at(w, ii)); }));
    }
    Echelon<Cyclo> ech;
    std::vector<SparseVec<Cyclo>> frontier;
    auto add = [&](const SparseVec<Cyclo>& v) {
        if (ech.insert(v).has_value()) frontier.push_back(v);
    };
    add(as_vec([&](const Weight&) { return one; }));
    for (const auto& g : gens) add(g);
    for (size_t qi = 0; qi < frontier.size(); ++qi) {
        SparseVec<Cyclo> x = frontier[qi];
        for (const auto& g : gens) {
            // pointwise product
            SparseVec<Cyclo> prod;
            size_t a = 0, b = 0;
            while (a < x.size() && b < g.size()) {
                if (x[a].first < g[b].first) ++a;
                else if (x[a].first > g[b].first) ++b;
                else {
                    Cyclo c = x[a].second * g[b].second;
                    if (!c.is_zero()) prod.emplace_back(x[a].first, c);
                    ++a, ++b;
                }
            }
            add(prod);
        }
    }
    LittleZeroReport rep;
    rep.generated_dim = ech.rank();
    rep.dim_zero = static_cast<int>(enumerate_lambda_bar(n, r, f.lprime).size());
    rep.equal = rep.generated_dim == rep.dim_zero;
    return rep;
}

bool counterexample_relation_holds(int n, int r, const FieldSpec& f) {
    auto S = SchurField::get(n, r, f);
    if (n < 3) throw domain_error("counterexample relation needs n >= 3");
    SparseVec<Cyclo> lhs = S->ktilde(2);
    SparseVec<Cyclo> rhs = sv_scale(S->ktilde(1), S->eps(-r));
    return lhs == rhs;
}

}
