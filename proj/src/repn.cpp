#include "qschur/repn.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qschur {

SparseVec<Cyclo> FDModule::lift(const SparseVec<Cyclo>& m) const {
    SparseVec<Cyclo> out;
    for (const auto& [j, c] : m) out = sv_axpy(out, c, reps[static_cast<size_t>(j)]);
    return out;
}

SparseVec<Cyclo> FDModule::project(const SparseVec<Cyclo>& fd_vec) const {
    SparseVec<Cyclo> w = denom.reduce(fd_vec);
    SparseVec<Cyclo> combo;
    SparseVec<Cyclo> residual = basis.reduce(w, &combo);
    if (!residual.empty()) throw internal_error("module projection escaped the basis span");
    return combo;
}

SparseVec<Cyclo> FDModule::act(const SparseVec<Cyclo>& a, const SparseVec<Cyclo>& m) const {
    return project(A->mult(a, lift(m)));
}

Dense FDModule::action_matrix(const SparseVec<Cyclo>& a) const {
    Dense M(static_cast<size_t>(dim), std::vector<Cyclo>(static_cast<size_t>(dim), A->zero()));
    for (int j = 0; j < dim; ++j) {
        SparseVec<Cyclo> col = act(a, {{j, A->one()}});
        for (const auto& [i, c] : col) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = c;
    }
    return M;
}

FDModule make_module(const FDAlgebra& A, const std::vector<SparseVec<Cyclo>>& spanning,
                     const std::vector<SparseVec<Cyclo>>& denominators) {
    FDModule M;
    M.A = &A;
    for (const auto& d : denominators) M.denom.insert(d);
    for (const auto& s : spanning) {
        SparseVec<Cyclo> w = M.denom.reduce(s);
        if (M.basis.insert(w).has_value()) M.reps.push_back(s);
    }
    M.dim = static_cast<int>(M.reps.size());
    return M;
}

FDModule regular_module(const FDAlgebra& A) {
    std::vector<SparseVec<Cyclo>> reps;
    for (int i = 0; i < A.dim; ++i) reps.push_back({{i, A.one()}});
    return make_module(A, reps, {});
}

std::vector<SparseVec<Cyclo>> radical(const FDAlgebra& A) {
    if (A.S->field().kind != FieldSpec::Kind::cyclotomic)
        throw unsupported_error("radical: requires the characteristic-0 cyclotomic backend");
    Cyclo zero = A.zero(), one = A.one();
    std::vector<SparseVec<Cyclo>> rad;

    auto coeff_of = [](const SparseVec<Cyclo>& v, int i) {
        for (const auto& [j, c] : v)
            if (j == i) return c;
        return Cyclo();
    };

    if (A.peirce.valid) {
        // tau_C = tr(L_{b_C}), nonzero only on diagonal Peirce cells
        std::map<std::pair<int, int>, std::vector<int>> cells;
        for (int i = 0; i < A.dim; ++i) cells[A.peirce.cell[static_cast<size_t>(i)]].push_back(i);
        std::vector<Cyclo> tau(static_cast<size_t>(A.dim), zero);
        for (int C = 0; C < A.dim; ++C) {
            auto [a, b] = A.peirce.cell[static_cast<size_t>(C)];
            if (a != b) continue;
            Cyclo t = zero;
            for (const auto& [cell, members] : cells) {
                if (cell.first != b) continue;
                for (int i : members) {
                    SparseVec<Cyclo> col = A.mult({{C, one}}, {{i, one}});
                    Cyclo c = coeff_of(col, i);
                    if (!c.is_zero()) t += c;
                }
            }
            tau[static_cast<size_t>(C)] = t;
        }
        auto tau_of = [&](const SparseVec<Cyclo>& v) {
            Cyclo t = zero;
            for (const auto& [i, c] : v) {
                if (tau[static_cast<size_t>(i)].is_zero()) continue;
                t += c * tau[static_cast<size_t>(i)];
            }
            return t;
        };
        for (const auto& [cell, I] : cells) {
            auto op = cells.find({cell.second, cell.first});
            if (op == cells.end()) {
                // no opposite cell: the whole cell pairs to zero, all radical
                for (int i : I) rad.push_back({{i, one}});
                continue;
            }
            const std::vector<int>& J = op->second;
            // Gram block G[i][j] = tau(b_i b_j); x in span(I) is radical iff x^T G = 0
            std::vector<std::vector<Cyclo>> G(I.size(),
                                              std::vector<Cyclo>(J.size(), zero));
            for (size_t ii = 0; ii < I.size(); ++ii)
                for (size_t jj = 0; jj < J.size(); ++jj)
                    G[ii][jj] = tau_of(A.mult({{I[ii], one}}, {{J[jj], one}}));
            // left kernel = kernel of the transpose
            std::vector<std::vector<Cyclo>> GT(J.size(), std::vector<Cyclo>(I.size(), zero));
            for (size_t ii = 0; ii < I.size(); ++ii)
                for (size_t jj = 0; jj < J.size(); ++jj) GT[jj][ii] = G[ii][jj];
            for (const auto& kv : dense_kernel(GT, static_cast<int>(I.size()), zero, one)) {
                SparseVec<Cyclo> v;
                for (size_t ii = 0; ii < I.size(); ++ii)
                    if (!kv[ii].is_zero()) v.emplace_back(I[ii], kv[ii]);
                std::sort(v.begin(), v.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                rad.push_back(std::move(v));
            }
        }
    } else {
        std::vector<Cyclo> tau(static_cast<size_t>(A.dim), zero);
        for (int C = 0; C < A.dim; ++C) tau[static_cast<size_t>(C)] = A.trace_left_mult({{C, one}});
        std::vector<std::vector<Cyclo>> G(static_cast<size_t>(A.dim),
                                          std::vector<Cyclo>(static_cast<size_t>(A.dim), zero));
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j) {
                Cyclo t = zero;
                for (const auto& [c, coeff] : A.mult({{i, one}}, {{j, one}}))
                    t += coeff * tau[static_cast<size_t>(c)];
                G[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
        for (const auto& kv : dense_kernel(G, A.dim, zero, one)) {
            SparseVec<Cyclo> v;
            for (int i = 0; i < A.dim; ++i)
                if (!kv[static_cast<size_t>(i)].is_zero()) v.emplace_back(i, kv[static_cast<size_t>(i)]);
            rad.push_back(std::move(v));
        }
    }
    return rad;
}

FDModule quotient_module(const FDModule& M, const std::vector<SparseVec<Cyclo>>& sub_reps_fd) {
    std::vector<SparseVec<Cyclo>> denoms;
    for (const auto& row : M.denom.rows()) denoms.push_back(row);
    for (const auto& v : sub_reps_fd) denoms.push_back(v);
    return make_module(*M.A, M.reps, denoms);
}

FDModule head(const FDModule& M, const std::vector<SparseVec<Cyclo>>& rad) {
    std::vector<SparseVec<Cyclo>> extra;
    for (const auto& r : rad)
        for (const auto& rep : M.reps) extra.push_back(M.A->mult(r, rep));
    return quotient_module(M, extra);
}

FDModule socle(const FDModule& M, const std::vector<SparseVec<Cyclo>>& rad) {
    Cyclo zero = M.A->zero(), one = M.A->one();
    std::vector<std::vector<Cyclo>> rows;
    for (const auto& r : rad) {
        Dense R = M.action_matrix(r);
        for (int i = 0; i < M.dim; ++i) rows.push_back(R[static_cast<size_t>(i)]);
    }
    std::vector<SparseVec<Cyclo>> reps;
    if (rows.empty()) {
        reps = M.reps;
    } else {
        for (const auto& kv : dense_kernel(rows, M.dim, zero, one)) {
            SparseVec<Cyclo> m;
            for (int j = 0; j < M.dim; ++j)
                if (!kv[static_cast<size_t>(j)].is_zero()) m.emplace_back(j, kv[static_cast<size_t>(j)]);
            reps.push_back(M.lift(m));
        }
    }
    std::vector<SparseVec<Cyclo>> denoms;
    for (const auto& row : M.denom.rows()) denoms.push_back(row);
    return make_module(*M.A, reps, denoms);
}

FDModule spin_submodule(const FDModule& M, const std::vector<SparseVec<Cyclo>>& vectors) {
    Echelon<Cyclo> span;
    std::deque<SparseVec<Cyclo>> frontier;
    std::vector<SparseVec<Cyclo>> kept;
    auto add = [&](const SparseVec<Cyclo>& m) {
        if (span.insert(m).has_value()) {
            kept.push_back(m);
            frontier.push_back(m);
        }
    };
    for (const auto& v : vectors) add(v);
    while (!frontier.empty()) {
        SparseVec<Cyclo> x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : M.A->gens) add(M.act(g, x));
    }
    std::vector<SparseVec<Cyclo>> reps;
    for (const auto& m : kept) reps.push_back(M.lift(m));
    std::vector<SparseVec<Cyclo>> denoms;
    for (const auto& row : M.denom.rows()) denoms.push_back(row);
    return make_module(*M.A, reps, denoms);
}

FDModule cyclic_hw_module(const FDAlgebra& A, const Weight& lambda) {
    if (!A.peirce.valid || !A.peirce.k_exp_valid)
        throw unsupported_error("cyclic_hw_module needs weight data for this algebra");
    const SchurTable& T = A.S->table();
    if (static_cast<int>(lambda.size()) != T.n || sigma(lambda) != T.r)
        throw domain_error("cyclic_hw_module: sigma(lambda) != r");
    int lprime = A.S->field().lprime;
    auto cls_matches = [&](int cls) {
        for (int j = 0; j < T.n; ++j) {
            int lj = ((lambda[static_cast<size_t>(j)] % lprime) + lprime) % lprime;
            if (A.peirce.k_exp[static_cast<size_t>(cls)][static_cast<size_t>(j)] % lprime != lj)
                return false;
        }
        return true;
    };
    std::vector<SparseVec<Cyclo>> denoms;
    for (int i = 0; i < A.dim; ++i)
        if (!cls_matches(A.peirce.cell[static_cast<size_t>(i)].second))
            denoms.push_back({{i, A.one()}});
    for (const auto& e : A.plain_e)
        for (int b = 0; b < A.dim; ++b) denoms.push_back(A.mult({{b, A.one()}}, e));
    std::vector<SparseVec<Cyclo>> reps;
    for (int i = 0; i < A.dim; ++i) reps.push_back({{i, A.one()}});
    return make_module(A, reps, denoms);
}

std::vector<std::vector<SparseVec<Cyclo>>> hw_spaces(const FDModule& M) {
    const FDAlgebra& A = *M.A;
    Cyclo zero = A.zero(), one = A.one();
    std::vector<std::vector<Cyclo>> rows;
    for (const auto& g : A.pos_gens) {
        Dense R = M.action_matrix(g);
        for (int i = 0; i < M.dim; ++i) rows.push_back(R[static_cast<size_t>(i)]);
    }
    std::vector<SparseVec<Cyclo>> kernel;
    if (rows.empty()) {
        for (int j = 0; j < M.dim; ++j) kernel.push_back({{j, one}});
    } else {
        for (const auto& kv : dense_kernel(rows, M.dim, zero, one)) {
            SparseVec<Cyclo> m;
            for (int j = 0; j < M.dim; ++j)
                if (!kv[static_cast<size_t>(j)].is_zero()) m.emplace_back(j, kv[static_cast<size_t>(j)]);
            kernel.push_back(std::move(m));
        }
    }
    size_t nclasses = A.peirce.valid ? A.peirce.classes.size() : 1;
    std::vector<std::vector<SparseVec<Cyclo>>> out(nclasses);
    if (!A.peirce.valid) {
        out[0] = kernel;
        return out;
    }
    for (size_t c = 0; c < nclasses; ++c) {
        // project the kernel onto the class and collect an independent set
        Echelon<Cyclo> ech;
        for (const auto& v : kernel) {
            SparseVec<Cyclo> pv = M.act(A.peirce.p[c], v);
            if (!pv.empty() && ech.insert(pv).has_value()) out[c].push_back(pv);
        }
    }
    return out;
}

namespace {

std::vector<Dense> generator_matrices(const FDModule& M) {
    std::vector<Dense> out;
    for (const auto& g : M.A->gens) out.push_back(M.action_matrix(g));
    return out;
}

}

std::vector<Dense> hom_basis(const FDModule& M, const FDModule& N) {
    const FDAlgebra& A = *M.A;
    Cyclo zero = A.zero(), one = A.one();
    int dm = M.dim, dn = N.dim;
    if (dm == 0 || dn == 0) return {};
    std::vector<Dense> gm = generator_matrices(M), gn = generator_matrices(N);
    // unknowns X (dn x dm) flattened; constraints gn[g] X - X gm[g] = 0
    std::vector<std::vector<Cyclo>> rows;
    for (size_t g = 0; g < gm.size(); ++g)
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j) {
                std::vector<Cyclo> row(static_cast<size_t>(dn * dm), zero);
                for (int t = 0; t < dn; ++t)
                    row[static_cast<size_t>(t * dm + j)] +=
                        gn[g][static_cast<size_t>(i)][static_cast<size_t>(t)];
                for (int t = 0; t < dm; ++t)
                    row[static_cast<size_t>(i * dm + t)] -=
                        gm[g][static_cast<size_t>(t)][static_cast<size_t>(j)];
                rows.push_back(std::move(row));
            }
    std::vector<Dense> out;
    for (const auto& kv : dense_kernel(rows, dn * dm, zero, one)) {
        Dense X(static_cast<size_t>(dn), std::vector<Cyclo>(static_cast<size_t>(dm), zero));
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j) X[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                kv[static_cast<size_t>(i * dm + j)];
        out.push_back(std::move(X));
    }
    return out;
}

int hom_dim(const FDModule& M, const FDModule& N) {
    return static_cast<int>(hom_basis(M, N).size());
}

namespace {

// Split a semisimple module into simples: spin highest-weight vectors, peel,
// recurse; certify leaves by End = k.
void split_semisimple(const FDModule& M, std::vector<FDModule>& out) {
    if (M.dim == 0) return;
    if (M.dim == 1) {
        out.push_back(M);
        return;
    }
    auto hw = hw_spaces(M);
    std::vector<SparseVec<Cyclo>> candidates;
    for (const auto& cls : hw)
        for (const auto& v : cls) candidates.push_back(v);
    for (const auto& cls : hw)
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b) {
                candidates.push_back(sv_axpy(cls[a], M.A->one(), cls[b]));
                candidates.push_back(sv_axpy(cls[a], Cyclo::from_int(M.A->S->cyclo(), -1), cls[b]));
            }
    for (const auto& w : candidates) {
        if (w.empty()) continue;
        FDModule N = spin_submodule(M, {w});
        if (N.dim > 0 && N.dim < M.dim) {
            FDModule Q = quotient_module(M, N.reps);
            split_semisimple(N, out);
            split_semisimple(Q, out);
            return;
        }
    }
    if (hom_dim(M, M) == 1) {
        out.push_back(M);
        return;
    }
    throw internal_error("split_semisimple: could not split a non-simple semisimple module");
}

}

Residue label_simple(const FDModule& S, const FDAlgebra& A) {
    if (!A.peirce.valid || !A.peirce.k_exp_valid)
        throw unsupported_error("label_simple needs weight data");
    auto hw = hw_spaces(S);
    int lprime = A.S->field().lprime;
    std::set<std::vector<int>> labels;
    for (size_t c = 0; c < hw.size(); ++c) {
        if (hw[c].empty()) continue;
        std::vector<int> lab(A.peirce.k_exp[c].size());
        for (size_t j = 0; j < lab.size(); ++j)
            lab[j] = ((A.peirce.k_exp[c][j] % lprime) + lprime) % lprime;
        labels.insert(lab);
    }
    if (labels.empty()) throw internal_error("simple module with empty highest-weight space");
    if (labels.size() > 1)
        throw internal_error("simple module with non-scalar k-action on its hw space");
    Residue out;
    out.modulus = lprime;
    out.r = *labels.begin();
    return out;
}

std::vector<int> semisimple_multiplicities(const FDModule& M,
                                           const std::vector<SimpleModule>& simples) {
    const FDAlgebra& A = *M.A;
    Cyclo zero = A.zero(), one = A.one();
    if (M.dim == 0) return std::vector<int>(simples.size(), 0);
    auto hw = hw_spaces(M);
    size_t nc = hw.size();
    std::vector<std::vector<Cyclo>> rows(nc, std::vector<Cyclo>(simples.size(), zero));
    std::vector<Cyclo> rhs(nc, zero);
    for (size_t c = 0; c < nc; ++c) {
        for (size_t s = 0; s < simples.size(); ++s)
            rows[c][s] = Cyclo::from_int(A.S->cyclo(), simples[s].spectrum[c]);
        rhs[c] = Cyclo::from_int(A.S->cyclo(), static_cast<long long>(hw[c].size()));
    }
    auto sol = solve_affine(rows, rhs, zero);
    std::vector<int> mult(simples.size(), 0);
    bool ok = sol.has_value();
    long long total = 0;
    if (ok) {
        // spectra are linearly independent on the grid; a non-integer or
        // inconsistent solve falls back to Hom computations
        for (size_t s = 0; s < simples.size() && ok; ++s) {
            mpz_class z;
            if ((*sol)[s].is_rational_integer(z) && z >= 0) {
                mult[s] = static_cast<int>(z.get_si());
                total += mult[s] * simples[s].dim;
            } else {
                ok = false;
            }
        }
        if (ok && total != M.dim) ok = false;
    }
    if (!ok) {
        total = 0;
        for (size_t s = 0; s < simples.size(); ++s) {
            mult[s] = hom_dim(simples[s].M, M);
            total += mult[s] * simples[s].dim;
        }
        if (total != M.dim)
            throw internal_error("semisimple multiplicity bookkeeping failed");
    }
    return mult;
}

SimplesResult simples(const FDAlgebra& A, const std::vector<SparseVec<Cyclo>>* rad_opt) {
    SimplesResult res;
    std::vector<SparseVec<Cyclo>> rad = rad_opt ? *rad_opt : radical(A);
    res.rad_dim = static_cast<int>(rad.size());
    const SchurTable& T = A.S->table();
    int lprime = A.S->field().lprime;

    std::vector<FDModule> found;
    for (const Residue& lb : enumerate_lambda_bar(T.n, T.r, lprime)) {
        // lift the class to a composition
        Weight lam;
        for (const Weight& mu : enumerate_lambda(T.n, T.r))
            if (bar(mu, lprime) == lb) { lam = mu; break; }
        FDModule M = cyclic_hw_module(A, lam);
        FDModule H = head(M, rad);
        if (H.dim == 0) continue;
        split_semisimple(H, found);
    }
    // deduplicate isomorphic copies found under different classes
    std::vector<FDModule> distinct;
    for (auto& L : found) {
        bool dup = false;
        for (auto& K : distinct)
            if (K.dim == L.dim && hom_dim(L, K) > 0) { dup = true; break; }
        if (!dup) distinct.push_back(std::move(L));
    }
    long long sq = 0;
    for (const auto& L : distinct) sq += static_cast<long long>(L.dim) * L.dim;
    res.split_certified = (sq == A.dim - res.rad_dim);
    if (!res.split_certified)
        res.diagnostic = "sum of squares " + std::to_string(sq) + " != dim A - rad = " +
                         std::to_string(A.dim - res.rad_dim);

    for (auto& L : distinct) {
        SimpleModule S;
        S.dim = L.dim;
        S.M = std::move(L);
        auto hw = hw_spaces(S.M);
        S.spectrum.resize(hw.size());
        for (size_t c = 0; c < hw.size(); ++c) S.spectrum[c] = static_cast<int>(hw[c].size());
        S.label = label_simple(S.M, A);
        res.simples.push_back(std::move(S));
    }
    std::sort(res.simples.begin(), res.simples.end(),
              [](const SimpleModule& a, const SimpleModule& b) { return a.label < b.label; });
    return res;
}

namespace {

// Newton refinement of an almost-idempotent (idempotent mod radical).
SparseVec<Cyclo> newton_idempotent(const FDAlgebra& A, SparseVec<Cyclo> x) {
    for (int it = 0; it < 60; ++it) {
        SparseVec<Cyclo> x2 = A.mult(x, x);
        if (x2 == x) return x;
        // x := 3x^2 - 2x^3
        SparseVec<Cyclo> x3 = A.mult(x2, x);
        SparseVec<Cyclo> nx = sv_axpy(sv_scale(x2, Cyclo::from_int(A.S->cyclo(), 3)),
                                      Cyclo::from_int(A.S->cyclo(), -2), x3);
        x = std::move(nx);
    }
    throw internal_error("idempotent refinement did not converge");
}

}

AnalysisResult analyze_algebra(const FDAlgebra& A) {
    AnalysisResult out;
    out.rad = radical(A);
    out.s = simples(A, &out.rad);
    if (!out.s.split_certified)
        throw internal_error("analyze_algebra: simples not certified: " + out.s.diagnostic);
    size_t ns = out.s.simples.size();
    Cyclo zero = A.zero(), one = A.one();

    // projective covers
    out.proj.resize(ns);
    if (out.rad.empty()) {
        for (size_t i = 0; i < ns; ++i) {
            out.proj[i].P = out.s.simples[i].M;
            out.proj[i].loewy = {std::vector<int>(ns, 0)};
            out.proj[i].loewy[0][i] = 1;
            out.proj[i].cartan = out.proj[i].loewy[0];
        }
    } else {
        // rho : A -> sum End(L_i); lift a matrix-unit preimage per simple
        std::vector<std::vector<Dense>> act(ns);
        int rows_total = 0;
        for (size_t i = 0; i < ns; ++i) {
            act[i].resize(static_cast<size_t>(A.dim));
            for (int b = 0; b < A.dim; ++b)
                act[i][static_cast<size_t>(b)] = out.s.simples[i].M.action_matrix({{b, one}});
            rows_total += out.s.simples[i].dim * out.s.simples[i].dim;
        }
        std::vector<std::vector<Cyclo>> R(static_cast<size_t>(rows_total),
                                          std::vector<Cyclo>(static_cast<size_t>(A.dim), zero));
        for (int b = 0; b < A.dim; ++b) {
            int off = 0;
            for (size_t i = 0; i < ns; ++i) {
                int d = out.s.simples[i].dim;
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q)
                        R[static_cast<size_t>(off + p * d + q)][static_cast<size_t>(b)] =
                            act[i][static_cast<size_t>(b)][static_cast<size_t>(p)][static_cast<size_t>(q)];
                off += d * d;
            }
        }
        for (size_t i = 0; i < ns; ++i) {
            std::vector<Cyclo> target(static_cast<size_t>(rows_total), zero);
            int off = 0;
            for (size_t t = 0; t < i; ++t) off += out.s.simples[t].dim * out.s.simples[t].dim;
            target[static_cast<size_t>(off)] = one;  // matrix unit E_00 in block i
            auto x = solve_affine(R, target, zero);
            if (!x)
                throw internal_error("projective cover: matrix-unit preimage not found (non-split?)");
            SparseVec<Cyclo> xv;
            for (int b = 0; b < A.dim; ++b)
                if (!(*x)[static_cast<size_t>(b)].is_zero()) xv.emplace_back(b, (*x)[static_cast<size_t>(b)]);
            SparseVec<Cyclo> e = newton_idempotent(A, xv);
            out.proj[i].idempotent = e;
            std::vector<SparseVec<Cyclo>> spanning;
            for (int b = 0; b < A.dim; ++b) spanning.push_back(A.mult({{b, one}}, e));
            out.proj[i].P = make_module(A, spanning, {});
        }
        // Loewy layers of each P via radical powers
        for (size_t i = 0; i < ns; ++i) {
            std::vector<std::vector<SparseVec<Cyclo>>> layers_fd;
            std::vector<SparseVec<Cyclo>> cur = out.proj[i].P.reps;
            while (!cur.empty()) {
                layers_fd.push_back(cur);
                std::vector<SparseVec<Cyclo>> next;
                Echelon<Cyclo> ech;
                for (const auto& r : out.rad)
                    for (const auto& v : cur) {
                        SparseVec<Cyclo> w = A.mult(r, v);
                        if (!w.empty() && ech.insert(w).has_value()) next.push_back(w);
                    }
                cur = std::move(next);
            }
            out.proj[i].cartan.assign(ns, 0);
            for (size_t m = 0; m < layers_fd.size(); ++m) {
                std::vector<SparseVec<Cyclo>> denom_next =
                    (m + 1 < layers_fd.size()) ? layers_fd[m + 1] : std::vector<SparseVec<Cyclo>>{};
                FDModule layer = make_module(A, layers_fd[m], denom_next);
                std::vector<int> mult = semisimple_multiplicities(layer, out.s.simples);
                out.proj[i].loewy.push_back(mult);
                for (size_t sidx = 0; sidx < ns; ++sidx)
                    out.proj[i].cartan[sidx] += mult[sidx];
            }
            // head must be the matching simple
            if (out.proj[i].loewy.empty() || out.proj[i].loewy[0][i] != 1)
                throw internal_error("projective cover head mismatch");
        }
    }

    // Ext^1 from the second Loewy layer
    out.ext1.assign(ns, std::vector<int>(ns, 0));
    for (size_t i = 0; i < ns; ++i)
        if (out.proj[i].loewy.size() > 1) out.ext1[i] = out.proj[i].loewy[1];

    // blocks: components of the Ext graph, then central idempotents
    std::vector<int> comp(ns, -1);
    int ncomp = 0;
    for (size_t i = 0; i < ns; ++i) {
        if (comp[i] >= 0) continue;
        std::deque<size_t> q{i};
        comp[i] = ncomp;
        while (!q.empty()) {
            size_t x = q.front();
            q.pop_front();
            for (size_t y = 0; y < ns; ++y)
                if (comp[y] < 0 && (out.ext1[x][y] || out.ext1[y][x])) {
                    comp[y] = ncomp;
                    q.push_back(y);
                }
        }
        ++ncomp;
    }
    out.block_of = comp;

    // central idempotent per block: solve z central with rho_i(z) = [i in B] id
    for (int B = 0; B < ncomp; ++B) {
        std::vector<std::vector<Cyclo>> rows;
        std::vector<Cyclo> rhs;
        // centrality: [z, b] = 0 for every basis element
        for (int b = 0; b < A.dim; ++b) {
            std::vector<SparseVec<Cyclo>> colL(static_cast<size_t>(A.dim)),
                colR(static_cast<size_t>(A.dim));
            for (int c = 0; c < A.dim; ++c) {
                colL[static_cast<size_t>(c)] = A.mult({{c, one}}, {{b, one}});
                colR[static_cast<size_t>(c)] = A.mult({{b, one}}, {{c, one}});
            }
            for (int i = 0; i < A.dim; ++i) {
                std::vector<Cyclo> row(static_cast<size_t>(A.dim), zero);
                bool nonzero = false;
                for (int c = 0; c < A.dim; ++c) {
                    Cyclo v = zero;
                    for (const auto& [t, co] : colL[static_cast<size_t>(c)])
                        if (t == i) v += co;
                    for (const auto& [t, co] : colR[static_cast<size_t>(c)])
                        if (t == i) v -= co;
                    if (!v.is_zero()) { row[static_cast<size_t>(c)] = v; nonzero = true; }
                }
                if (nonzero) {
                    rows.push_back(std::move(row));
                    rhs.push_back(zero);
                }
            }
        }
        // image conditions
        for (size_t i = 0; i < ns; ++i) {
            const FDModule& L = out.s.simples[i].M;
            Cyclo want = comp[i] == B ? one : zero;
            for (int p = 0; p < L.dim; ++p)
                for (int q = 0; q < L.dim; ++q) {
                    std::vector<Cyclo> row(static_cast<size_t>(A.dim), zero);
                    for (int c = 0; c < A.dim; ++c) {
                        SparseVec<Cyclo> col = L.act({{c, one}}, {{q, one}});
                        for (const auto& [t, co] : col)
                            if (t == p) row[static_cast<size_t>(c)] += co;
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(p == q ? want : zero);
                }
        }
        auto z = solve_affine(rows, rhs, zero);
        if (!z) throw internal_error("block idempotent: central interpolation failed");
        SparseVec<Cyclo> zv;
        for (int c = 0; c < A.dim; ++c)
            if (!(*z)[static_cast<size_t>(c)].is_zero()) zv.emplace_back(c, (*z)[static_cast<size_t>(c)]);
        out.block_idempotents.push_back(newton_idempotent(A, zv));
    }
    // invariants: orthogonal, sum to 1
    SparseVec<Cyclo> sum;
    for (const auto& e : out.block_idempotents) sum = sv_axpy(sum, one, e);
    if (!(sum == A.unit)) throw internal_error("block idempotents do not sum to 1");
    for (size_t a = 0; a < out.block_idempotents.size(); ++a)
        for (size_t b = 0; b < out.block_idempotents.size(); ++b) {
            auto prod = A.mult(out.block_idempotents[a], out.block_idempotents[b]);
            if (a == b ? !(prod == out.block_idempotents[a]) : !prod.empty())
                throw internal_error("block idempotents not orthogonal");
        }
    return out;
}

BabyWeylReport baby_weyl_compare(const FDAlgebra& U, const std::vector<SparseVec<Cyclo>>& radU,
                                 const FDAlgebra& little,
                                 const std::vector<SparseVec<Cyclo>>& rad_little,
                                 const Weight& lambda) {
    BabyWeylReport rep;
    FDModule V = cyclic_hw_module(U, lambda);
    rep.dim_V = V.dim;
    SparseVec<Cyclo> x0 = V.project(V.denom.reduce(U.unit));

    // little-algebra elements rewritten in U coordinates
    std::vector<SparseVec<Cyclo>> lt;
    for (const auto& amb : little.basis_ambient) lt.push_back(U.from_ambient(amb));
    std::vector<SparseVec<Cyclo>> rad_lt;
    for (const auto& r : rad_little) rad_lt.push_back(U.from_ambient(little.to_ambient(r)));

    // V' = u~ x0 inside V
    Echelon<Cyclo> vp;
    std::vector<SparseVec<Cyclo>> vp_basis;
    for (const auto& b : lt) {
        SparseVec<Cyclo> w = V.act(b, x0);
        if (!w.empty() && vp.insert(w).has_value()) vp_basis.push_back(w);
    }
    rep.dim_Vprime = static_cast<int>(vp_basis.size());
    rep.vprime_equals_v = rep.dim_Vprime == rep.dim_V;

    // rad(U) V and rad(u~) V' as subspaces of V
    Echelon<Cyclo> ru, rl;
    int dim_ru = 0, dim_rl = 0;
    for (const auto& r : radU)
        for (int j = 0; j < V.dim; ++j) {
            SparseVec<Cyclo> w = V.act(r, {{j, U.one()}});
            if (!w.empty() && ru.insert(w).has_value()) ++dim_ru;
        }
    std::vector<SparseVec<Cyclo>> rl_rows;
    for (const auto& r : rad_lt)
        for (const auto& v : vp_basis) {
            SparseVec<Cyclo> w = V.act(r, v);
            if (!w.empty() && rl.insert(w).has_value()) {
                ++dim_rl;
                rl_rows.push_back(w);
            }
        }
    rep.head_V = rep.dim_V - dim_ru;
    rep.head_Vprime = rep.dim_Vprime - dim_rl;
    bool same = dim_ru == dim_rl;
    for (const auto& w : rl_rows)
        if (same && !ru.contains(w)) same = false;
    rep.heads_equal_subspace = same && rep.vprime_equals_v;
    return rep;
}

std::vector<int> projective_decomposition(const SparseVec<Cyclo>& e_fd, const FDAlgebra& A,
                                          const SimplesResult& s) {
    if (!(A.mult(e_fd, e_fd) == e_fd)) throw domain_error("projective_decomposition: not idempotent");
    std::vector<int> mult(s.simples.size(), 0);
    for (size_t i = 0; i < s.simples.size(); ++i) {
        // dim(e L_i) = rank of the action of e on L_i
        const FDModule& L = s.simples[i].M;
        Echelon<Cyclo> im;
        int rank = 0;
        for (int j = 0; j < L.dim; ++j) {
            SparseVec<Cyclo> v = L.act(e_fd, {{j, A.one()}});
            if (!v.empty() && im.insert(v).has_value()) ++rank;
        }
        mult[i] = rank;
    }
    return mult;
}

}
