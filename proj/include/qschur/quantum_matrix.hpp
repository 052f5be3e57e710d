#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qschur/laurent.hpp"
#include "qschur/matrix_index.hpp"

namespace qschur {

/// One generator c_{row,col} of the quantum coordinate algebra (0-indexed).
struct Letter {
    int8_t row = 0;
    int8_t col = 0;
    friend bool operator==(Letter a, Letter b) { return a.row == b.row && a.col == b.col; }
    // normal order is column-major: smaller column first, then smaller row
    friend bool operator<(Letter a, Letter b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    }
};

using Word = std::vector<Letter>;

struct MemoKey {
    int n = 0;
    Word w;
    friend bool operator==(const MemoKey& a, const MemoKey& b) { return a.n == b.n && a.w == b.w; }
};

struct MemoKeyHash {
    size_t operator()(const MemoKey& k) const {
        size_t h = static_cast<size_t>(k.n) * 1315423911u + k.w.size();
        for (Letter x : k.w) h = h * 131u + static_cast<size_t>(x.row) * 16 + x.col;
        return h;
    }
};

/// Polynomial in the c_{ij} written in the c^A normal basis.
using CoordPoly = std::map<Mat, Laurent>;

/// Element of A_q(n) tensor A_q(n), both legs in normal form.
using TensorPoly = std::map<std::pair<Mat, Mat>, Laurent>;

enum class RewriteStrategy { leftmost, random };

struct NormalizeOptions {
    int sigma_cap = 12;             // reject longer words
    RewriteStrategy strategy = RewriteStrategy::leftmost;
    std::mt19937_64* rng = nullptr; // used by the random strategy
    long long step_budget = 50'000'000;
};

using NormalizeMemo = std::unordered_map<MemoKey, CoordPoly, MemoKeyHash>;

/// The exponent matrix of a word.
Mat word_matrix(int n, const Word& w);

/// The normal-order factor sequence of c^A (column 1 rows 1..n, column 2, ...).
Word word_of(const Mat& A);

/// Rewrites coeff * (product of the word's letters) into the c^A basis.
CoordPoly normalize_word(int n, const Word& w, const Laurent& coeff,
                         const NormalizeOptions& opt = {}, NormalizeMemo* memo = nullptr);

/// Product of two normal-form polynomials.
CoordPoly coord_mul(int n, const CoordPoly& a, const CoordPoly& b,
                    const NormalizeOptions& opt = {}, NormalizeMemo* memo = nullptr);

/// Coproduct of the basis monomial c^A, both tensor legs normalized.
TensorPoly coproduct(int n, const Mat& A, NormalizeMemo* memo = nullptr);

/// Counit: 1 on monomials with zero off-diagonal part, 0 otherwise.
Laurent counit(const Mat& A);

/// Quantum determinant of A_q(n) in normal form.
CoordPoly qdet(int n);

enum class IdealKind { J, Itilde, I };

/// Image of a normal-form polynomial in the h = 1 quotient by J, I-tilde or I:
/// monomials with an off-diagonal exponent >= l die; diagonal exponents are
/// reduced mod l' (I-tilde), mod l (I), or kept (J).
std::map<ReducedMat, Laurent> project_h1(const CoordPoly& x, IdealKind kind, int l, int lprime);

}
