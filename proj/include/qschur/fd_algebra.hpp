#pragma once

#include <memory>
#include <vector>

#include "qschur/little_algebra.hpp"

namespace qschur {

/// Weight (Peirce) bookkeeping of a concrete algebra: the diagonal idempotent
/// family, the cell of each basis element, and the eps-exponents by which the
/// k_j act on each class.
struct PeirceData {
    bool valid = false;
    bool k_exp_valid = false;
    std::vector<Residue> classes;
    std::vector<std::pair<int, int>> cell;     // per basis element (ro, co), -1 when mixed
    std::vector<SparseVec<Cyclo>> p;           // class idempotents, FD coordinates
    std::vector<std::vector<int>> k_exp;       // per class: eps-exponent of k_j (mod l')
};

/// A finite-dimensional algebra given by an independent spanning set inside a
/// q-Schur algebra; products are computed ambiently and re-expressed in the
/// spanning coordinates, so closure is verified on every multiplication.
class FDAlgebra {
public:
    std::shared_ptr<SchurField> S;
    SubalgKind kind = SubalgKind::generated;
    int dim = 0;
    std::vector<SparseVec<Cyclo>> basis_ambient;
    Echelon<Cyclo> span{true};
    SparseVec<Cyclo> unit;                     // FD coordinates
    PeirceData peirce;
    std::vector<SparseVec<Cyclo>> pos_gens;    // raising generators, FD coordinates
    std::vector<SparseVec<Cyclo>> neg_gens;
    std::vector<SparseVec<Cyclo>> gens;        // a generating set of the algebra
    std::vector<SparseVec<Cyclo>> plain_e;     // the e_i themselves (no divided powers)
    std::vector<SparseVec<Cyclo>> plain_f;
    std::vector<Mat> off_label;                // inherited labels when available
    std::vector<Residue> diag_label;

    Cyclo zero() const { return Cyclo::zero(S->cyclo()); }
    Cyclo one() const { return Cyclo::one(S->cyclo()); }

    SparseVec<Cyclo> to_ambient(const SparseVec<Cyclo>& coords) const {
        SparseVec<Cyclo> out;
        for (const auto& [i, c] : coords)
            out = sv_axpy(out, c, basis_ambient[static_cast<size_t>(i)]);
        return out;
    }

    SparseVec<Cyclo> from_ambient(const SparseVec<Cyclo>& amb) const {
        SparseVec<Cyclo> combo;
        SparseVec<Cyclo> residual = span.reduce(amb, &combo);
        if (!residual.empty())
            throw internal_error("product escaped the subalgebra span (closure violated)");
        return combo;
    }

    SparseVec<Cyclo> mult(const SparseVec<Cyclo>& x, const SparseVec<Cyclo>& y) const {
        return from_ambient(S->mult(to_ambient(x), to_ambient(y)));
    }

    /// Trace of left multiplication by the element with the given coordinates.
    Cyclo trace_left_mult(const SparseVec<Cyclo>& x) const;
};

/// Concretize a subalgebra basis, wiring up the Peirce data and generator
/// sets appropriate for its kind.
FDAlgebra build_fd(const SubalgebraBasis& B);

/// Corner algebra e B e for an idempotent e of B (ambient coordinates).
/// The returned algebra has unit e; corner_ambient receives the basis.
FDAlgebra corner_algebra(const SparseVec<Cyclo>& e, const SubalgebraBasis& B);

}
