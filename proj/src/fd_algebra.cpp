#include "qschur/fd_algebra.hpp"

#include <set>

namespace qschur {

Cyclo FDAlgebra::trace_left_mult(const SparseVec<Cyclo>& x) const {
    Cyclo t = zero();
    for (int i = 0; i < dim; ++i) {
        SparseVec<Cyclo> col = mult(x, {{i, one()}});
        for (const auto& [j, c] : col)
            if (j == i) t += c;
    }
    return t;
}

namespace {

// residue of the row/column class of a labelled element (off + diag class)
Residue shift_class(const Residue& diag, const std::vector<int>& off_sums, int modulus) {
    Residue out;
    out.modulus = modulus;
    out.r.resize(diag.r.size());
    for (size_t i = 0; i < diag.r.size(); ++i)
        out.r[i] = ((diag.r[i] + off_sums[i]) % modulus + modulus) % modulus;
    return out;
}

}

FDAlgebra build_fd(const SubalgebraBasis& B) {
    FDAlgebra A;
    A.S = B.S;
    A.kind = B.kind;
    A.dim = static_cast<int>(B.vecs.size());
    A.basis_ambient = B.vecs;
    A.span = B.ech;
    A.off_label = B.off_label;
    A.diag_label = B.diag_label;
    if (B.kind != SubalgKind::corner) A.unit = A.from_ambient(B.S->unit());

    const SchurTable& T = B.S->table();
    const FieldSpec& f = B.S->field();
    int n = T.n, r = T.r;

    // Peirce data
    bool labelled = B.kind == SubalgKind::little || B.kind == SubalgKind::u1 ||
                    B.kind == SubalgKind::infinitesimal || B.kind == SubalgKind::full_schur;
    if (labelled) {
        PeirceData& P = A.peirce;
        P.valid = true;
        int modulus;
        if (B.kind == SubalgKind::little) {
            modulus = f.lprime;
        } else if (B.kind == SubalgKind::u1) {
            modulus = f.l();
        } else {
            // literal compositions; encode as residues mod a modulus exceeding r
            modulus = r + 1;
        }
        std::map<Residue, int> cls_index;
        auto class_of = [&](const Residue& x) {
            auto it = cls_index.find(x);
            if (it != cls_index.end()) return it->second;
            int id = static_cast<int>(P.classes.size());
            cls_index[x] = id;
            P.classes.push_back(x);
            return id;
        };
        P.cell.resize(static_cast<size_t>(A.dim));
        for (int i = 0; i < A.dim; ++i) {
            const Mat& off = B.off_label[static_cast<size_t>(i)];
            Residue d = B.diag_label[static_cast<size_t>(i)];
            if (B.kind == SubalgKind::infinitesimal || B.kind == SubalgKind::full_schur) {
                // literal: label matrix determines exact row/column sums
                Mat M = off;
                Residue ro{modulus, M.row_sums()}, co{modulus, M.col_sums()};
                P.cell[static_cast<size_t>(i)] = {class_of(ro), class_of(co)};
            } else {
                P.cell[static_cast<size_t>(i)] = {
                    class_of(shift_class(d, off.row_sums(), modulus)),
                    class_of(shift_class(d, off.col_sums(), modulus))};
            }
        }
        // class idempotents
        P.p.resize(P.classes.size());
        for (size_t c = 0; c < P.classes.size(); ++c) {
            SparseVec<Cyclo> amb;
            if (B.kind == SubalgKind::infinitesimal || B.kind == SubalgKind::full_schur) {
                Weight lam(P.classes[c].r.begin(), P.classes[c].r.end());
                amb = B.S->k_lambda(lam);
            } else {
                // sum of k_mu over the class (mod l' or mod l)
                for (const Weight& mu : enumerate_lambda(n, r))
                    if (bar(mu, P.classes[c].modulus) == P.classes[c])
                        amb = sv_axpy(amb, B.S->one(), B.S->k_lambda(mu));
            }
            P.p[c] = A.from_ambient(amb);
        }
        // k_j acts on class c by eps^{k_exp[c][j]} when well defined
        P.k_exp_valid = B.kind != SubalgKind::u1;
        if (P.k_exp_valid) {
            P.k_exp.resize(P.classes.size());
            for (size_t c = 0; c < P.classes.size(); ++c) {
                P.k_exp[c].resize(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j)
                    P.k_exp[c][static_cast<size_t>(j)] =
                        ((P.classes[c].r[static_cast<size_t>(j)]) % f.lprime + f.lprime) % f.lprime;
            }
        }
    }

    // generator sets
    auto amb_to_fd = [&](const SparseVec<Cyclo>& v) { return A.from_ambient(v); };
    if (B.kind == SubalgKind::little || B.kind == SubalgKind::infinitesimal ||
        B.kind == SubalgKind::full_schur || B.kind == SubalgKind::u1) {
        for (int i = 1; i < n; ++i) {
            A.plain_e.push_back(amb_to_fd(B.S->e(i)));
            A.plain_f.push_back(amb_to_fd(B.S->f(i)));
            A.pos_gens.push_back(A.plain_e.back());
            A.neg_gens.push_back(A.plain_f.back());
        }
        if (B.kind == SubalgKind::full_schur) {
            auto Tp = B.S->table_ptr();
            for (int i = 1; i < n; ++i)
                for (int m = 2; m <= r; ++m) {
                    A.pos_gens.push_back(amb_to_fd(B.S->specialize_elt(divided_power(gen_e(Tp, i), m))));
                    A.neg_gens.push_back(amb_to_fd(B.S->specialize_elt(divided_power(gen_f(Tp, i), m))));
                }
        }
        A.gens = A.pos_gens;
        A.gens.insert(A.gens.end(), A.neg_gens.begin(), A.neg_gens.end());
        for (int j = 1; j <= n; ++j) A.gens.push_back(amb_to_fd(B.S->k(j)));
        if (B.kind == SubalgKind::infinitesimal || B.kind == SubalgKind::full_schur) {
            auto Tp = B.S->table_ptr();
            for (int j = 1; j <= n; ++j) {
                A.gens.push_back(amb_to_fd(B.S->k(j, -1)));
                for (int t = 1; t <= r; ++t)
                    A.gens.push_back(amb_to_fd(B.S->specialize_elt(gen_binom_op_k(Tp, j, 0, t))));
            }
        }
    } else {
        // fall back to the whole basis as a generating set
        for (int i = 0; i < A.dim; ++i) A.gens.push_back({{i, A.one()}});
    }
    return A;
}

FDAlgebra corner_algebra(const SparseVec<Cyclo>& e, const SubalgebraBasis& B) {
    const auto& S = B.S;
    if (!(S->mult(e, e) == e)) throw domain_error("corner: element is not idempotent");
    if (!B.ech.contains(e)) throw domain_error("corner: idempotent is outside the subalgebra");
    SubalgebraBasis C;
    C.S = S;
    C.kind = SubalgKind::corner;
    for (const auto& b : B.vecs) {
        SparseVec<Cyclo> ebe = S->mult(S->mult(e, b), e);
        if (ebe.empty()) continue;
        if (C.ech.insert(ebe).has_value()) C.vecs.push_back(std::move(ebe));
    }
    FDAlgebra A = build_fd(C);
    A.unit = A.from_ambient(e);
    return A;
}

}
