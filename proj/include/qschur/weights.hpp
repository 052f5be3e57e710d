#pragma once

#include <string>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

using Weight = std::vector<int>;  // integer vector of length n

inline int sigma(const Weight& w) {
    int s = 0;
    for (int x : w) s += x;
    return s;
}

/// Componentwise residue vector with its modulus.
struct Residue {
    int modulus = 0;
    std::vector<int> r;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus == b.modulus && a.r == b.r;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }
    friend bool operator<(const Residue& a, const Residue& b) { return a.r < b.r; }
    std::string str() const;
};

Residue bar(const Weight& w, int m);

/// Compositions of r into n nonnegative parts, lexicographically sorted.
std::vector<Weight> enumerate_lambda(int n, int r);

/// Dominant compositions (weakly decreasing).
std::vector<Weight> enumerate_lambda_plus(int n, int r);

/// Bar image of Lambda(n,r) mod m, deduplicated and sorted.
std::vector<Residue> enumerate_lambda_bar(int n, int r, int m);

/// Restricted weights X_1: 0 <= lambda_i - lambda_{i+1} < l with lambda_{n+1} = 0.
std::vector<Weight> enumerate_x1(int n, int l);

/// X_1(l,r) = (X_1 + l N^n) at entry sum r.
std::vector<Weight> enumerate_x1_lr(int n, int l, int r);

/// bar_{l'} X_1(l,r): the simple-module index set of the little algebra.
std::vector<Residue> simple_index_set(int n, int r, int l, int lprime);

/// Verifies bar_l X_1(l,r) = bar_l X_1(l,r-l) union { bar lambda : lambda in X_1, sigma = r }
/// by enumeration (l' = l odd only).
bool recursion_check(int n, int r, int l);

/// Block of the little algebra at n = 2 containing the simple labelled bar(lambda):
/// bar_l(S_2-dot-orbit of lambda) intersected with bar_l Lambda^+(2,r).
std::vector<Residue> little_block_n2(const Weight& lambda, int r, int l);

/// Semisimplicity criterion: l > r, or l = n = 2 and r >= 3 odd.
bool semisimple_predicate(int n, int r, int l);

/// Finite representation type criterion (valid for l' odd only): l > r.
bool finite_type_predicate(int n, int r, int l, int lprime);

}
