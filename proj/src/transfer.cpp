#include "qschur/transfer.hpp"

#include <map>

namespace qschur {

PsiMap::PsiMap(int n_, int r_, const FieldSpec& f_) : n(n_), r(r_), f(f_) {
    src = SchurField::get(n, r + n, f);
    tgt = SchurField::get(n, r, f);
    const SchurTable& Ts = src->table();
    const SchurTable& Tt = tgt->table();
    img_.assign(Ts.labels.size(), {});
    // psi(xi'_X)(c^C) = xi'_X(D_q c^C): expand D_q c^C over the source basis
    CoordPoly det = qdet(n);
    NormalizeMemo memo;
    std::map<int, std::map<int, Laurent>> cols;  // src label -> (tgt label -> coeff)
    for (size_t ci = 0; ci < Tt.labels.size(); ++ci) {
        CoordPoly prod = coord_mul(n, det, {{Tt.labels[ci], Laurent(1)}}, {}, &memo);
        for (const auto& [m, c] : prod) {
            int x = Ts.idx(m);
            if (x < 0) throw internal_error("psi: product degree mismatch");
            cols[x][static_cast<int>(ci)] += c;
        }
    }
    // The raw dual of D_q-multiplication sends e_i to v e_i and f_i to
    // v^{-1} f_i; conjugating by the diagonal unit sum_lam v^{sum_j j lam_j}
    // k_lam rescales xi_C by v^{sum_j j (ro_j - co_j)} and restores the
    // displayed generator images.
    for (auto& [x, col] : cols) {
        for (auto& [ci, c] : col) {
            if (c.is_zero()) continue;
            const Mat& C = Tt.labels[static_cast<size_t>(ci)];
            auto ro = C.row_sums(), co = C.col_sums();
            int tw = 0;
            for (int j = 0; j < n; ++j) tw += (j + 1) * (ro[static_cast<size_t>(j)] - co[static_cast<size_t>(j)]);
            img_[static_cast<size_t>(x)].emplace_back(ci, c * Laurent::v_pow(tw));
        }
    }
}

SparseVec<Cyclo> PsiMap::apply(const SparseVec<Cyclo>& x) const {
    std::map<int, Cyclo> acc;
    for (const auto& [i, c] : x)
        for (const auto& [j, m] : img_[static_cast<size_t>(i)]) {
            Cyclo v = c * specialize(m, f);
            auto [it, fresh] = acc.try_emplace(j, v);
            if (!fresh) it->second += v;
        }
    SparseVec<Cyclo> out;
    for (auto& [j, c] : acc)
        if (!c.is_zero()) out.emplace_back(j, c);
    return out;
}

bool PsiMap::verify_generator_images() const {
    for (int i = 1; i < n; ++i) {
        if (!(apply(src->e(i)) == tgt->e(i))) return false;
        if (!(apply(src->f(i)) == tgt->f(i))) return false;
    }
    for (int j = 1; j <= n; ++j) {
        SparseVec<Cyclo> want = sv_scale(tgt->k(j), tgt->eps(1));
        if (!(apply(src->k(j)) == want)) return false;
    }
    return apply(src->unit()) == tgt->unit();
}

bool PsiMap::verify_homomorphism() const {
    int dim = static_cast<int>(src->table().labels.size());
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            SparseVec<Cyclo> xa{{a, src->one()}}, xb{{b, src->one()}};
            SparseVec<Cyclo> lhs = apply(src->mult(xa, xb));
            SparseVec<Cyclo> rhs = tgt->mult(apply(xa), apply(xb));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool PsiMap::verify_little_restriction() const {
    SubalgebraBasis ls = little_basis(n, r + n, f);
    SubalgebraBasis lt = little_basis(n, r, f);
    for (const auto& v : ls.vecs)
        if (!lt.contains(apply(v))) return false;
    return true;
}

RhoMap::RhoMap(int n_, int r_, const FieldSpec& f_) : n(n_), r(r_), f(f_) {
    src = little_basis(n, r + f.lprime, f);
    tgt = little_basis(n, r, f);
    std::map<std::pair<Mat, Residue>, int> tgt_index;
    for (size_t i = 0; i < tgt.vecs.size(); ++i)
        tgt_index[{tgt.off_label[i], tgt.diag_label[i]}] = static_cast<int>(i);
    label_map_.assign(src.vecs.size(), -1);
    for (size_t i = 0; i < src.vecs.size(); ++i) {
        auto it = tgt_index.find({src.off_label[i], src.diag_label[i]});
        if (it != tgt_index.end()) label_map_[i] = it->second;
    }
}

SparseVec<Cyclo> RhoMap::apply_coords(const SparseVec<Cyclo>& coords) const {
    SparseVec<Cyclo> out;
    for (const auto& [i, c] : coords)
        if (label_map_[static_cast<size_t>(i)] >= 0)
            out.emplace_back(label_map_[static_cast<size_t>(i)], c);
    sv_cleanup(out);
    return out;
}

SparseVec<Cyclo> RhoMap::apply_ambient(const SparseVec<Cyclo>& amb) const {
    SparseVec<Cyclo> coords = src.coords_of(amb);
    SparseVec<Cyclo> img = apply_coords(coords);
    SparseVec<Cyclo> out;
    for (const auto& [i, c] : img)
        out = sv_axpy(out, c, tgt.vecs[static_cast<size_t>(i)]);
    return out;
}

bool RhoMap::verify_generator_images() const {
    for (int i = 1; i < n; ++i) {
        if (!(apply_ambient(src.S->e(i)) == tgt.S->e(i))) return false;
        if (!(apply_ambient(src.S->f(i)) == tgt.S->f(i))) return false;
    }
    for (int j = 1; j <= n; ++j)
        if (!(apply_ambient(src.S->k(j)) == tgt.S->k(j))) return false;
    return apply_ambient(src.S->unit()) == tgt.S->unit();
}

bool RhoMap::verify_p_images() const {
    for (const Residue& lb : enumerate_lambda_bar(n, r + f.lprime, f.lprime)) {
        SparseVec<Cyclo> img = apply_ambient(src.S->p_bar(lb));
        SparseVec<Cyclo> want = tgt.S->p_bar(lb);  // zero when lb is outside the image
        if (!(img == want)) return false;
    }
    return true;
}

bool RhoMap::verify_homomorphism() const {
    int dim = static_cast<int>(src.vecs.size());
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            SparseVec<Cyclo> prod = src.S->mult(src.vecs[static_cast<size_t>(a)],
                                                src.vecs[static_cast<size_t>(b)]);
            SparseVec<Cyclo> lhs = apply_ambient(prod);
            SparseVec<Cyclo> ra = apply_coords({{a, src.S->one()}});
            SparseVec<Cyclo> rb = apply_coords({{b, src.S->one()}});
            SparseVec<Cyclo> la, lb_;
            for (const auto& [i, c] : ra) la = sv_axpy(la, c, tgt.vecs[static_cast<size_t>(i)]);
            for (const auto& [i, c] : rb) lb_ = sv_axpy(lb_, c, tgt.vecs[static_cast<size_t>(i)]);
            SparseVec<Cyclo> rhs = tgt.S->mult(la, lb_);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool RhoMap::surjective() const {
    Echelon<Cyclo> im;
    int rank = 0;
    for (size_t i = 0; i < src.vecs.size(); ++i) {
        SparseVec<Cyclo> img = apply_coords({{static_cast<int>(i), src.S->one()}});
        if (!img.empty() && im.insert(img).has_value()) ++rank;
    }
    return rank == tgt.rank();
}

bool RhoMap::verify_coordinate_dual() const {
    // every monomial class m at level r pairs with xi' through c_11^{l'} m:
    // <rho(xi'), m>_r = <xi', c_11^{l'} m>_{r+l'} on the I-tilde quotient bases.
    int lp = f.lprime;
    const SchurTable& Tt = tgt.S->table();
    for (size_t bi = 0; bi < src.vecs.size(); ++bi) {
        SparseVec<Cyclo> img = apply_coords({{static_cast<int>(bi), src.S->one()}});
        for (const Mat& C : Tt.labels) {
            // skip classes that die in the quotient
            bool killed = false;
            for (int i = 0; i < C.n && !killed; ++i)
                for (int j = 0; j < C.n; ++j)
                    if (i != j && C.at(i, j) >= f.l()) { killed = true; break; }
            if (killed) continue;
            Mat Cup = C;
            Cup.at(0, 0) += lp;
            // <[[B+diag(mb), r']], c^X> = eps^{-d_X} [X in the class]
            auto pair_with = [&](const SubalgebraBasis& B, size_t idx, const Mat& X) {
                const Mat& off = B.off_label[idx];
                const Residue& db = B.diag_label[idx];
                Mat diff = X;
                bool match = true;
                for (int i = 0; i < X.n && match; ++i)
                    for (int j = 0; j < X.n; ++j) {
                        if (i == j) continue;
                        if (diff.at(i, j) != off.at(i, j)) { match = false; break; }
                    }
                if (!match) return Cyclo::zero(B.S->cyclo());
                Weight d(static_cast<size_t>(X.n));
                for (int i = 0; i < X.n; ++i) {
                    d[static_cast<size_t>(i)] = X.at(i, i) - off.at(i, i);
                    if (d[static_cast<size_t>(i)] < 0) return Cyclo::zero(B.S->cyclo());
                }
                if (!(bar(d, lp) == db)) return Cyclo::zero(B.S->cyclo());
                return B.S->eps(-d_A(X));
            };
            Cyclo rhs = pair_with(src, bi, Cup);
            Cyclo lhs = Cyclo::zero(tgt.S->cyclo());
            for (const auto& [ti, c] : img) lhs += c * pair_with(tgt, static_cast<size_t>(ti), C);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

StabilizationReport stabilization_check(int n, int r, const FieldSpec& f) {
    StabilizationReport rep;
    int l = f.l(), lp = f.lprime;
    rep.dim_r = static_cast<int>(count_pr_classes(n, r, l, lp));
    rep.dim_r_plus = static_cast<int>(count_pr_classes(n, r + lp, l, lp));
    RhoMap rho(n, r, f);
    rep.rho_bijective = rho.surjective() && rep.dim_r == rep.dim_r_plus;
    rep.bound_predicts_equality = r >= (l - 1) * (n * n - n) + (n - 1) * (lp - 1);
    rep.lambda_bar_stable =
        enumerate_lambda_bar(n, r, lp) == enumerate_lambda_bar(n, r + lp, lp);
    return rep;
}

}
