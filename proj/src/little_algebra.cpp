#include "qschur/little_algebra.hpp"

#include <deque>
#include <set>

namespace qschur {

bool SubalgebraBasis::contains_subspace(const SubalgebraBasis& other) const {
    for (const auto& v : other.vecs)
        if (!ech.contains(v)) return false;
    return true;
}

SparseVec<Cyclo> SubalgebraBasis::coords_of(const SparseVec<Cyclo>& v) const {
    SparseVec<Cyclo> combo;
    SparseVec<Cyclo> residual = ech.reduce(v, &combo);
    if (!residual.empty())
        throw domain_error("vector lies outside the subalgebra span");
    return combo;
}

namespace {

SubalgebraBasis class_sum_basis(int n, int r, const FieldSpec& f, int diag_modulus,
                                bool with_bracket_scalars, SubalgKind kind) {
    SubalgebraBasis B;
    B.S = SchurField::get(n, r, f);
    B.kind = kind;
    const SchurTable& T = B.S->table();
    for (const Mat& A : enumerate_xipm1_upto(n, r, f.l())) {
        int rem = r - A.sigma();
        std::set<Residue> classes;
        for (const Weight& mu : enumerate_lambda(n, rem)) classes.insert(bar(mu, diag_modulus));
        for (const Residue& lb : classes) {
            SparseVec<Cyclo> v;
            for (const Weight& mu : enumerate_lambda(n, rem)) {
                if (bar(mu, diag_modulus) != lb) continue;
                Mat M = A + Mat::diag(mu);
                int idx = T.idx(M);
                Cyclo c = with_bracket_scalars
                              ? B.S->eps(-d_A(M))
                              : B.S->one();
                v.emplace_back(idx, c);
            }
            sv_cleanup(v);
            if (v.empty()) continue;
            if (!B.ech.insert(v).has_value())
                throw internal_error("class-sum spanning set unexpectedly dependent");
            B.vecs.push_back(std::move(v));
            B.off_label.push_back(A);
            B.diag_label.push_back(lb);
        }
    }
    return B;
}

}

SubalgebraBasis little_basis(int n, int r, const FieldSpec& f) {
    return class_sum_basis(n, r, f, f.lprime, true, SubalgKind::little);
}

SubalgebraBasis u1_basis(int n, int r, const FieldSpec& f) {
    return class_sum_basis(n, r, f, f.l(), false, SubalgKind::u1);
}

SubalgebraBasis infinitesimal_basis(int n, int r, const FieldSpec& f) {
    SubalgebraBasis B;
    B.S = SchurField::get(n, r, f);
    B.kind = SubalgKind::infinitesimal;
    for (const Mat& A : enumerate_xi1(n, r, f.l())) {
        SparseVec<Cyclo> v = B.S->bracket(A);
        if (!B.ech.insert(v).has_value())
            throw internal_error("infinitesimal basis unexpectedly dependent");
        B.vecs.push_back(std::move(v));
        B.off_label.push_back(A);
        B.diag_label.push_back(bar(A.diagonal(), f.lprime));
    }
    return B;
}

SubalgebraBasis full_schur_basis(int n, int r, const FieldSpec& f) {
    SubalgebraBasis B;
    B.S = SchurField::get(n, r, f);
    B.kind = SubalgKind::full_schur;
    for (const Mat& A : B.S->table().labels) {
        SparseVec<Cyclo> v = B.S->bracket(A);
        B.ech.insert(v);
        B.vecs.push_back(std::move(v));
        B.off_label.push_back(A);
        B.diag_label.push_back(bar(A.diagonal(), f.lprime));
    }
    return B;
}

SubalgebraBasis generated_subalgebra(std::shared_ptr<SchurField> S,
                                     const std::vector<SparseVec<Cyclo>>& gens) {
    SubalgebraBasis B;
    B.S = std::move(S);
    B.kind = SubalgKind::generated;
    std::deque<SparseVec<Cyclo>> frontier;
    auto add = [&](const SparseVec<Cyclo>& v) {
        if (B.ech.insert(v).has_value()) {
            B.vecs.push_back(v);
            frontier.push_back(v);
        }
    };
    add(B.S->unit());
    for (const auto& g : gens) add(g);
    while (!frontier.empty()) {
        SparseVec<Cyclo> x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) add(B.S->mult(x, g));
    }
    return B;
}

SandwichReport sandwich_check(int n, int r, const FieldSpec& f) {
    SubalgebraBasis u1 = u1_basis(n, r, f);
    SubalgebraBasis little = little_basis(n, r, f);
    SubalgebraBasis inf = infinitesimal_basis(n, r, f);
    SandwichReport rep;
    rep.dim_u1 = u1.rank();
    rep.dim_little = little.rank();
    rep.dim_infinitesimal = inf.rank();
    rep.u1_in_little = little.contains_subspace(u1);
    rep.little_in_inf = inf.contains_subspace(little);
    rep.u1_eq_little = rep.u1_in_little && rep.dim_u1 == rep.dim_little;
    return rep;
}

}
