#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

/// Sparse vector over a field type K: (index, value) pairs sorted by index,
/// no stored zeros.
template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

template <class K>
void sv_cleanup(SparseVec<K>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<K> out;
    out.reserve(v.size());
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    v = std::move(out);
}

/// y += c * x (both sorted).
template <class K>
SparseVec<K> sv_axpy(const SparseVec<K>& y, const K& c, const SparseVec<K>& x) {
    SparseVec<K> out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() && j < x.size()) {
        if (y[i].first < x[j].first) {
            out.push_back(y[i++]);
        } else if (y[i].first > x[j].first) {
            K v = c * x[j].second;
            if (!v.is_zero()) out.emplace_back(x[j].first, v);
            ++j;
        } else {
            K v = y[i].second + c * x[j].second;
            if (!v.is_zero()) out.emplace_back(y[i].first, v);
            ++i, ++j;
        }
    }
    for (; i < y.size(); ++i) out.push_back(y[i]);
    for (; j < x.size(); ++j) {
        K v = c * x[j].second;
        if (!v.is_zero()) out.emplace_back(x[j].first, v);
    }
    return out;
}

template <class K>
SparseVec<K> sv_scale(const SparseVec<K>& x, const K& c) {
    SparseVec<K> out;
    if (c.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(i, c * v);
    return out;
}

/// Incrementally maintained row echelon form, optionally tracking how each
/// row decomposes over the inserted spanning vectors.
template <class K>
class Echelon {
public:
    explicit Echelon(bool track_coords = false) : track_(track_coords) {}

    /// Reduce v against the rows; if independent, add it and return its new
    /// row index, otherwise return nullopt.  Tracking coordinates refer to
    /// the successfully inserted spanning vectors, in insertion order.
    /// `coords_out`, when requested, receives the expression of a dependent
    /// v over those vectors.
    std::optional<int> insert(SparseVec<K> v, SparseVec<K>* coords_out = nullptr) {
        SparseVec<K> coords;
        reduce_inplace(v, track_ ? &coords : nullptr);
        if (v.empty()) {
            // v_orig = coords . spanning vectors
            if (coords_out) *coords_out = std::move(coords);
            return std::nullopt;
        }
        // normalize to pivot 1
        K piv = v.front().second;
        v = sv_scale(v, piv.inv());
        if (track_) {
            for (auto& [i, c] : coords) c = -(piv.inv() * c);
            coords.emplace_back(inserted_, piv.inv());
            sv_cleanup(coords);
            row_coords_.push_back(coords);
        }
        int row = static_cast<int>(rows_.size());
        pivot_of_[v.front().first] = row;
        rows_.push_back(std::move(v));
        if (coords_out) coords_out->clear();
        ++inserted_;
        return row;
    }

    /// Residual of v after reduction (empty iff v lies in the row space).
    /// With tracking on, combo receives coefficients over the inserted
    /// spanning vectors with v = residual + combo . spanning.
    SparseVec<K> reduce(SparseVec<K> v, SparseVec<K>* combo = nullptr) const {
        SparseVec<K> coords;
        const_cast<Echelon*>(this)->reduce_inplace(v, combo ? &coords : nullptr);
        if (combo) *combo = std::move(coords);
        return v;
    }

    bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec<K>>& rows() const { return rows_; }

    /// Coordinates of inserted spanning vectors making up row k (tracking only).
    const SparseVec<K>& row_combo(int k) const {
        if (!track_) throw internal_error("Echelon: coordinate tracking disabled");
        return row_coords_[static_cast<size_t>(k)];
    }

private:
    void reduce_inplace(SparseVec<K>& v, SparseVec<K>* coords) {
        // repeatedly cancel the leading entry while it matches a pivot
        while (!v.empty()) {
            auto it = pivot_of_.find(v.front().first);
            if (it == pivot_of_.end()) break;
            K c = v.front().second;
            v = sv_axpy(v, -c, rows_[static_cast<size_t>(it->second)]);
            if (coords && track_) {
                SparseVec<K> add = sv_scale(row_coords_[static_cast<size_t>(it->second)], c);
                coords->insert(coords->end(), add.begin(), add.end());
                sv_cleanup(*coords);
            }
        }
        // the remaining entries may still have reducible tails; full reduction
        if (!v.empty()) {
            SparseVec<K> acc;
            size_t k = 0;
            while (k < v.size()) {
                auto it = pivot_of_.find(v[k].first);
                if (it == pivot_of_.end()) {
                    ++k;
                    continue;
                }
                K c = v[k].second;
                v = sv_axpy(v, -c, rows_[static_cast<size_t>(it->second)]);
                if (coords && track_) {
                    SparseVec<K> add = sv_scale(row_coords_[static_cast<size_t>(it->second)], c);
                    coords->insert(coords->end(), add.begin(), add.end());
                    sv_cleanup(*coords);
                }
            }
        }
    }

    bool track_;
    int inserted_ = 0;
    std::vector<SparseVec<K>> rows_;
    std::vector<SparseVec<K>> row_coords_;
    std::map<int, int> pivot_of_;
};

/// One solution of A x = b (dense), or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve_affine(std::vector<std::vector<K>> m, std::vector<K> b,
                                           const K& zero) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(rank)]);
        std::swap(b[static_cast<size_t>(sel)], b[static_cast<size_t>(rank)]);
        K inv = m[static_cast<size_t>(rank)][static_cast<size_t>(c)].inv();
        for (int j = c; j < cols; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                inv * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        b[static_cast<size_t>(rank)] = inv * b[static_cast<size_t>(rank)];
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            K f = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
            b[static_cast<size_t>(i)] = b[static_cast<size_t>(i)] - f * b[static_cast<size_t>(rank)];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (!b[static_cast<size_t>(i)].is_zero()) return std::nullopt;
    std::vector<K> x(static_cast<size_t>(cols), zero);
    for (int i = 0; i < rank; ++i)
        x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = b[static_cast<size_t>(i)];
    return x;
}

/// Kernel of a dense matrix (rows x cols), returned as a basis of dense rows.
template <class K>
std::vector<std::vector<K>> dense_kernel(std::vector<std::vector<K>> m, int cols, const K& zero,
                                         const K& one) {
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(rank)]);
        K inv = m[static_cast<size_t>(rank)][static_cast<size_t>(c)].inv();
        for (int j = c; j < cols; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                inv * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            K f = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<K>> ker;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<K> v(static_cast<size_t>(cols), zero);
        v[static_cast<size_t>(c)] = one;
        for (int i = 0; i < rank; ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
                zero - m[static_cast<size_t>(i)][static_cast<size_t>(c)];
        ker.push_back(std::move(v));
    }
    return ker;
}

}
