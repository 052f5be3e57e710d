#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

/// An n x n matrix of nonnegative integers labelling monomials c^A and the
/// dual basis elements xi_A of the q-Schur algebra.
struct Mat {
    int n = 0;
    std::vector<int> a;  // row-major, size n*n

    Mat() = default;
    explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

    int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    int sigma() const {
        int s = 0;
        for (int x : a) s += x;
        return s;
    }

    bool is_diagonal() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && at(i, j) != 0) return false;
        return true;
    }

    std::vector<int> row_sums() const {
        std::vector<int> r(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[static_cast<size_t>(i)] += at(i, j);
        return r;
    }

    std::vector<int> col_sums() const {
        std::vector<int> c(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] += at(i, j);
        return c;
    }

    Mat transpose() const {
        Mat t(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    static Mat unit(int n, int i, int j, int v = 1) {
        Mat m(n);
        m.at(i, j) = v;
        return m;
    }

    static Mat diag(const std::vector<int>& d) {
        Mat m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    std::vector<int> diagonal() const {
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = at(i, i);
        return d;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r = x;
        for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
    friend bool operator<(const Mat& x, const Mat& y) { return x.a < y.a; }

    std::string str() const;
};

struct MatHash {
    size_t operator()(const Mat& m) const {
        size_t h = static_cast<size_t>(m.n);
        for (int x : m.a) h = h * 1000003u + static_cast<size_t>(x + 7);
        return h;
    }
};

/// Xi(n,r): all n x n nonnegative matrices with entry sum r, in lex order.
std::vector<Mat> enumerate_xi(int n, int r);

/// Xi(n,r)_1: entries off the diagonal bounded by l (the h = 1 level).
std::vector<Mat> enumerate_xi1(int n, int r, int l);

/// Xi^pm(n)_1 with entry sum at most r: zero diagonal, off-diagonals < l.
std::vector<Mat> enumerate_xipm1_upto(int n, int r, int l);

/// Reduction key of pr: off-diagonal part verbatim, diagonal entries mod m.
struct ReducedMat {
    int n = 0;
    int modulus = 0;
    std::vector<int> a;  // row-major; diagonal entries reduced

    friend bool operator==(const ReducedMat& x, const ReducedMat& y) {
        return x.n == y.n && x.modulus == y.modulus && x.a == y.a;
    }
    friend bool operator<(const ReducedMat& x, const ReducedMat& y) { return x.a < y.a; }
    std::string str() const;
};

ReducedMat pr_reduce(const Mat& m, int modulus);

/// #pr(Xi(n,r)_1) with diagonals mod `modulus` -- the little dimension formula.
long long count_pr_classes(int n, int r, int l, int modulus);

/// d_A = -sum_{(i,j),(s,t): i<s, j>t} a_{ij} a_{st} + sum_{i, j>t} a_{ij} a_{it}.
long long d_A(const Mat& m);

}
