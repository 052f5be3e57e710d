#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qschur/linear_algebra.hpp"
#include "qschur/schur_algebra.hpp"

namespace qschur {

enum class SubalgKind { little, infinitesimal, u1, full_schur, generated, corner };

/// An identified subalgebra of a q-Schur algebra over a field: a linearly
/// independent spanning set (labelled for the three named subalgebras) kept
/// together with its row space.
struct SubalgebraBasis {
    std::shared_ptr<SchurField> S;
    SubalgKind kind = SubalgKind::generated;
    std::vector<SparseVec<Cyclo>> vecs;   // ambient xi-coordinates
    std::vector<Mat> off_label;           // little/u1/infinitesimal: off-diagonal part
    std::vector<Residue> diag_label;      // little/u1: diagonal bar class
    Echelon<Cyclo> ech{true};

    int rank() const { return ech.rank(); }
    bool contains(const SparseVec<Cyclo>& v) const { return ech.contains(v); }
    bool contains_subspace(const SubalgebraBasis& other) const;
    /// Express an ambient vector over the spanning set; throws if outside.
    SparseVec<Cyclo> coords_of(const SparseVec<Cyclo>& v) const;
};

/// Basis of the little algebra u~(n,r): [[A + diag(lb), r]] summed over the
/// diagonal bar class mod l', with bracket scalars.
SubalgebraBasis little_basis(int n, int r, const FieldSpec& f);

/// Basis of the infinitesimal algebra s(n,r): [A] over Xi(n,r)_1.
SubalgebraBasis infinitesimal_basis(int n, int r, const FieldSpec& f);

/// Basis of u(n,r)_1: xi sums over diagonal classes mod l (no bracket scalars).
SubalgebraBasis u1_basis(int n, int r, const FieldSpec& f);

/// The whole ambient algebra in the bracket basis.
SubalgebraBasis full_schur_basis(int n, int r, const FieldSpec& f);

/// Smallest unital subalgebra containing the given elements.
SubalgebraBasis generated_subalgebra(std::shared_ptr<SchurField> S,
                                     const std::vector<SparseVec<Cyclo>>& gens);

struct SandwichReport {
    int dim_u1 = 0, dim_little = 0, dim_infinitesimal = 0;
    bool u1_in_little = false, little_in_inf = false, u1_eq_little = false;
};

/// Row-space inclusions u_1 <= u~ <= s with the three dimensions.
SandwichReport sandwich_check(int n, int r, const FieldSpec& f);

}
