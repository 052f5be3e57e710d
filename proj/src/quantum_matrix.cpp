#include "qschur/quantum_matrix.hpp"

#include <algorithm>

namespace qschur {

Mat word_matrix(int n, const Word& w) {
    Mat m(n);
    for (Letter x : w) ++m.at(x.row, x.col);
    return m;
}

Word word_of(const Mat& A) {
    Word w;
    for (int j = 0; j < A.n; ++j)
        for (int i = 0; i < A.n; ++i)
            for (int k = 0; k < A.at(i, j); ++k)
                w.push_back({static_cast<int8_t>(i), static_cast<int8_t>(j)});
    return w;
}

namespace {

// compare words by the normal letter order, largest first
struct WordGreater {
    bool operator()(const Word& a, const Word& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

int first_inversion(const Word& w) {
    for (size_t t = 0; t + 1 < w.size(); ++t)
        if (w[t + 1] < w[t]) return static_cast<int>(t);
    return -1;
}

int random_inversion(const Word& w, std::mt19937_64& rng) {
    std::vector<int> pos;
    for (size_t t = 0; t + 1 < w.size(); ++t)
        if (w[t + 1] < w[t]) pos.push_back(static_cast<int>(t));
    if (pos.empty()) return -1;
    return pos[rng() % pos.size()];
}

}

CoordPoly normalize_word(int n, const Word& w, const Laurent& coeff,
                         const NormalizeOptions& opt, NormalizeMemo* memo) {
    if (static_cast<int>(w.size()) > opt.sigma_cap)
        throw domain_error("normalize: word length exceeds the configured cap");
    CoordPoly out;
    if (coeff.is_zero()) return out;
    bool memoizable = memo && opt.strategy == RewriteStrategy::leftmost;
    if (memoizable) {
        auto it = memo->find(MemoKey{n, w});
        if (it != memo->end()) {
            for (const auto& [m, c] : it->second) {
                Laurent v = c * coeff;
                if (!v.is_zero()) out[m] = v;
            }
            return out;
        }
    }

    const Laurent q = Laurent::q();
    const Laurent qinv = Laurent::q(-1);
    const Laurent qm1 = q - Laurent(1);

    std::map<Word, Laurent, WordGreater> pending;
    pending[w] = Laurent(1);
    CoordPoly normal;  // coefficient of the input word, scaled at the end
    long long steps = 0;

    while (!pending.empty()) {
        auto node = pending.begin();
        Word cur = node->first;
        Laurent c = node->second;
        pending.erase(node);
        if (c.is_zero()) continue;
        if (++steps > opt.step_budget)
            throw internal_error("normalize: rewrite step budget exhausted");

        int t = opt.strategy == RewriteStrategy::leftmost ? first_inversion(cur)
                                                          : random_inversion(cur, *opt.rng);
        if (t < 0) {
            Mat m = word_matrix(n, cur);
            auto [it, fresh] = normal.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) normal.erase(it);
            }
            continue;
        }

        Letter x = cur[static_cast<size_t>(t)];
        Letter y = cur[static_cast<size_t>(t) + 1];
        // x > y in normal order; relations of the quantum matrix algebra:
        //   same row: commute
        //   same column (row of x larger): x y = q y x
        //   x strictly south-east of y when read as (row, col):
        //     c_{ij} c_{rs} = (q-1) c_{rj} c_{is} + c_{rs} c_{ij}  (i > r, j > s)
        //   x north-east of y: x y = q^{-1} y x
        auto push = [&](Word nw, const Laurent& f) {
            Laurent v = c * f;
            if (v.is_zero()) return;
            auto [it, fresh] = pending.try_emplace(std::move(nw), v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) pending.erase(it);
            }
        };

        Word swapped = cur;
        std::swap(swapped[static_cast<size_t>(t)], swapped[static_cast<size_t>(t) + 1]);
        if (x.row == y.row) {
            push(std::move(swapped), Laurent(1));
        } else if (x.col == y.col) {
            push(std::move(swapped), q);
        } else if (x.row > y.row) {  // x.col > y.col is forced here
            Word mixed = cur;
            mixed[static_cast<size_t>(t)] = {y.row, x.col};
            mixed[static_cast<size_t>(t) + 1] = {x.row, y.col};
            push(std::move(mixed), qm1);
            push(std::move(swapped), Laurent(1));
        } else {
            push(std::move(swapped), qinv);
        }
    }

    if (memoizable) (*memo)[MemoKey{n, w}] = normal;
    for (const auto& [m, c] : normal) {
        Laurent v = c * coeff;
        if (!v.is_zero()) out[m] = v;
    }
    return out;
}

CoordPoly coord_mul(int n, const CoordPoly& a, const CoordPoly& b,
                    const NormalizeOptions& opt, NormalizeMemo* memo) {
    CoordPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Word w = word_of(ma);
            Word wb = word_of(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            for (const auto& [m, c] : normalize_word(n, w, ca * cb, opt, memo)) {
                auto [it, fresh] = out.try_emplace(m, c);
                if (!fresh) {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    return out;
}

TensorPoly coproduct(int n, const Mat& A, NormalizeMemo* memo) {
    Word w = word_of(A);
    size_t m = w.size();
    TensorPoly out;
    NormalizeMemo local;
    if (!memo) memo = &local;
    // expand Delta multiplicatively: each letter c_{ij} -> sum_t c_{it} (x) c_{tj}
    std::vector<int> mid(m, 0);
    while (true) {
        Word left(m), right(m);
        for (size_t k = 0; k < m; ++k) {
            left[k] = {w[k].row, static_cast<int8_t>(mid[k])};
            right[k] = {static_cast<int8_t>(mid[k]), w[k].col};
        }
        CoordPoly nl = normalize_word(n, left, Laurent(1), {}, memo);
        CoordPoly nr = normalize_word(n, right, Laurent(1), {}, memo);
        for (const auto& [ml, cl] : nl)
            for (const auto& [mr, cr] : nr) {
                Laurent v = cl * cr;
                if (v.is_zero()) continue;
                auto key = std::make_pair(ml, mr);
                auto [it, fresh] = out.try_emplace(key, v);
                if (!fresh) {
                    it->second += v;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        // next middle-index tuple
        size_t k = 0;
        while (k < m && mid[k] == n - 1) mid[k++] = 0;
        if (k == m) break;
        ++mid[k];
    }
    return out;
}

Laurent counit(const Mat& A) {
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            if (i != j && A.at(i, j) != 0) return Laurent();
    return Laurent(1);
}

CoordPoly qdet(int n) {
    if (n < 1) throw domain_error("qdet needs n >= 1");
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    CoordPoly out;
    NormalizeMemo memo;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        Word w;
        for (int i = 0; i < n; ++i)
            w.push_back({static_cast<int8_t>(i), static_cast<int8_t>(perm[static_cast<size_t>(i)])});
        for (const auto& [m, c] : normalize_word(n, w, Laurent(inv % 2 ? -1 : 1), {}, &memo)) {
            auto [it, fresh] = out.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::map<ReducedMat, Laurent> project_h1(const CoordPoly& x, IdealKind kind, int l, int lprime) {
    std::map<ReducedMat, Laurent> out;
    for (const auto& [m, c] : x) {
        bool killed = false;
        for (int i = 0; i < m.n && !killed; ++i)
            for (int j = 0; j < m.n; ++j)
                if (i != j && m.at(i, j) >= l) { killed = true; break; }
        if (killed) continue;
        int modulus = kind == IdealKind::J ? 0 : (kind == IdealKind::Itilde ? lprime : l);
        ReducedMat rm = modulus ? pr_reduce(m, modulus) : ReducedMat{m.n, 0, m.a};
        auto [it, fresh] = out.try_emplace(rm, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

}
