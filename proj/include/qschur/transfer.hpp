#pragma once

#include <memory>
#include <vector>

#include "qschur/little_algebra.hpp"

namespace qschur {

/// Transfer map psi : U(n, r+n) -> U(n, r), the dual of multiplication by the
/// quantum determinant on the coordinate side.
class PsiMap {
public:
    PsiMap(int n, int r, const FieldSpec& f);

    int n, r;
    FieldSpec f;
    std::shared_ptr<SchurField> src;   // U(n, r+n)
    std::shared_ptr<SchurField> tgt;   // U(n, r)

    /// Generic image of a source basis element.
    const SparseVec<Laurent>& image_generic(int src_label) const {
        return img_[static_cast<size_t>(src_label)];
    }

    SparseVec<Cyclo> apply(const SparseVec<Cyclo>& x) const;

    /// psi(e_i') = e_i, psi(f_i') = f_i, psi(k_i') = eps k_i, psi(1) = 1.
    bool verify_generator_images() const;
    /// psi(xy) = psi(x) psi(y) on all pairs of basis elements.
    bool verify_homomorphism() const;
    /// psi maps the little subalgebra at level r+n into the one at level r.
    bool verify_little_restriction() const;

private:
    std::vector<SparseVec<Laurent>> img_;
};

/// Baby transfer map rho : u~(n, r+l') -> u~(n, r) with the displayed action
/// on the [[A + diag(lb), r]] basis.
class RhoMap {
public:
    RhoMap(int n, int r, const FieldSpec& f);

    int n, r;
    FieldSpec f;
    SubalgebraBasis src;   // little basis at level r + l'
    SubalgebraBasis tgt;   // little basis at level r

    /// Image of a source element given in source-basis coordinates.
    SparseVec<Cyclo> apply_coords(const SparseVec<Cyclo>& coords) const;
    /// Image of an ambient element of the source little algebra.
    SparseVec<Cyclo> apply_ambient(const SparseVec<Cyclo>& amb) const;

    bool verify_generator_images() const;   // e, f, k and the unit
    bool verify_p_images() const;           // rho(p') = p or 0
    bool verify_homomorphism() const;       // on all basis pairs
    bool surjective() const;
    /// Pairing cross-check of the coordinate-side realization: the dual of
    /// multiplication by c_11^{l'} in the I-tilde quotient.
    bool verify_coordinate_dual() const;

private:
    std::vector<int> label_map_;  // src basis index -> tgt basis index or -1
};

struct StabilizationReport {
    int dim_r = 0;
    int dim_r_plus = 0;
    bool rho_bijective = false;
    bool bound_predicts_equality = false;   // r >= (l-1)(n^2-n) + (n-1)(l'-1)
    bool lambda_bar_stable = false;         // bar Lambda(n,r) = bar Lambda(n,r+l')
};

StabilizationReport stabilization_check(int n, int r, const FieldSpec& f);

}
