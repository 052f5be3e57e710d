#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschur/fd_algebra.hpp"

namespace qschur {

using Dense = std::vector<std::vector<Cyclo>>;

/// A left module over a concrete algebra, realized as a subquotient of the
/// regular module: representatives in FD coordinates modulo an ideal-like
/// denominator subspace.
class FDModule {
public:
    const FDAlgebra* A = nullptr;
    int dim = 0;
    std::vector<SparseVec<Cyclo>> reps;  // FD coordinates, independent mod denom
    Echelon<Cyclo> denom;
    Echelon<Cyclo> basis{true};          // reduced reps with coordinate tracking

    FDModule() = default;

    /// Action of an algebra element (FD coordinates) on a module vector
    /// (coordinates over reps).
    SparseVec<Cyclo> act(const SparseVec<Cyclo>& a, const SparseVec<Cyclo>& m) const;

    /// Express a denominator-reduced FD vector in module coordinates.
    SparseVec<Cyclo> project(const SparseVec<Cyclo>& fd_vec) const;

    SparseVec<Cyclo> lift(const SparseVec<Cyclo>& m) const;

    Dense action_matrix(const SparseVec<Cyclo>& a) const;
};

/// Build a module from spanning representatives and denominator rows; picks
/// an independent subset of the representatives.
FDModule make_module(const FDAlgebra& A, const std::vector<SparseVec<Cyclo>>& spanning,
                     const std::vector<SparseVec<Cyclo>>& denominators);

FDModule regular_module(const FDAlgebra& A);

/// Jacobson radical over the characteristic-0 field: kernel of the trace form
/// T(x,y) = tr(L_{xy}), computed blockwise along the Peirce cells when they
/// are available.  Rejects non-cyclotomic backends by construction.
std::vector<SparseVec<Cyclo>> radical(const FDAlgebra& A);

/// Quotient by the left submodule generated by extra denominator vectors.
FDModule quotient_module(const FDModule& M, const std::vector<SparseVec<Cyclo>>& sub_reps_fd);

/// Head M / rad(A) M.
FDModule head(const FDModule& M, const std::vector<SparseVec<Cyclo>>& rad);

/// Socle: annihilator of rad(A) in M, as a submodule.
FDModule socle(const FDModule& M, const std::vector<SparseVec<Cyclo>>& rad);

/// Submodule generated by module vectors (closure under the generator set).
FDModule spin_submodule(const FDModule& M, const std::vector<SparseVec<Cyclo>>& vectors);

/// Spec ideal quotient A / (sum A e_i + sum A (k_j - eps^{lambda_j})).
FDModule cyclic_hw_module(const FDAlgebra& A, const Weight& lambda);

/// hw spaces: joint kernel of the raising generators, split by weight class;
/// returns per class a basis (module coordinates).
std::vector<std::vector<SparseVec<Cyclo>>> hw_spaces(const FDModule& M);

/// Dimension of Hom_A(M, N) via the generator commutant.
int hom_dim(const FDModule& M, const FDModule& N);
std::vector<Dense> hom_basis(const FDModule& M, const FDModule& N);

struct SimpleModule {
    FDModule M;
    Residue label;                 // recovered from the highest-weight space
    std::vector<int> spectrum;     // dim of the singular space per Peirce class
    int dim = 0;
};

struct SimplesResult {
    std::vector<SimpleModule> simples;
    int rad_dim = 0;
    bool split_certified = false;  // sum of squares matches dim A - rad_dim
    std::string diagnostic;
};

/// All simple modules, found as heads of the cyclic modules over every
/// diagonal weight class, split and certified by the sum-of-squares count.
SimplesResult simples(const FDAlgebra& A, const std::vector<SparseVec<Cyclo>>* rad_opt = nullptr);

/// Label of a simple module: the k_j eigenvalues on its singular space.
Residue label_simple(const FDModule& S, const FDAlgebra& A);

/// Multiplicities of each simple inside a semisimple module, solved from the
/// singular-space dimensions (falls back to Hom computations when needed).
std::vector<int> semisimple_multiplicities(const FDModule& M,
                                           const std::vector<SimpleModule>& simples);

struct ProjectiveData {
    SparseVec<Cyclo> idempotent;          // primitive, FD coordinates
    FDModule P;                            // A e
    std::vector<std::vector<int>> loewy;   // per layer: multiplicity of each simple
    std::vector<int> cartan;               // composition multiplicities (column of C)
};

struct AnalysisResult {
    SimplesResult s;
    std::vector<SparseVec<Cyclo>> rad;
    std::vector<ProjectiveData> proj;      // aligned with s.simples
    std::vector<std::vector<int>> ext1;    // ext1[i][j]
    std::vector<int> block_of;             // block id per simple
    std::vector<SparseVec<Cyclo>> block_idempotents;
};

/// Radical, simples, projective covers, Loewy layers, Ext^1, Cartan data and
/// blocks of a concrete algebra.
AnalysisResult analyze_algebra(const FDAlgebra& A);

/// Multiplicities dim(e L_i) of P(L_i) in the projective module A e.
std::vector<int> projective_decomposition(const SparseVec<Cyclo>& e_fd, const FDAlgebra& A,
                                          const SimplesResult& s);

struct BabyWeylReport {
    int dim_V = 0;         // Weyl module: cyclic quotient over the q-Schur algebra
    int dim_Vprime = 0;    // baby Weyl module: the little-algebra orbit of x_0 in V
    int head_V = 0;        // dim V / rad(U) V
    int head_Vprime = 0;   // dim V' / rad(u~) V'
    bool vprime_equals_v = false;
    bool heads_equal_subspace = false;  // rad(U) V = rad(u~) V' inside V
};

/// Compare the Weyl module V(lambda) with the baby Weyl module u~ x_0 and
/// their heads.  `U` is the full q-Schur algebra, `little` the little algebra
/// over the same ambient, with their radicals.
BabyWeylReport baby_weyl_compare(const FDAlgebra& U, const std::vector<SparseVec<Cyclo>>& radU,
                                 const FDAlgebra& little,
                                 const std::vector<SparseVec<Cyclo>>& rad_little,
                                 const Weight& lambda);

}
