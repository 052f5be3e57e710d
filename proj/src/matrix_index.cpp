#include "qschur/matrix_index.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qschur {

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        if (i) os << ";";
        for (int j = 0; j < n; ++j) {
            if (j) os << ",";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

std::string ReducedMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        if (i) os << ";";
        for (int j = 0; j < n; ++j) {
            if (j) os << ",";
            os << a[static_cast<size_t>(i) * n + j];
        }
    }
    os << "]%" << modulus;
    return os.str();
}

namespace {

void fill_cells(int n, int r, size_t cell, Mat& cur, std::vector<Mat>& out,
                const std::vector<int>& cap) {
    size_t cells = static_cast<size_t>(n) * n;
    if (cell == cells) {
        if (r == 0) out.push_back(cur);
        return;
    }
    int bound = std::min(r, cap[cell]);
    for (int v = 0; v <= bound; ++v) {
        cur.a[cell] = v;
        fill_cells(n, r - v, cell + 1, cur, out, cap);
    }
    cur.a[cell] = 0;
}

}

std::vector<Mat> enumerate_xi(int n, int r) {
    std::vector<int> cap(static_cast<size_t>(n) * n, r);
    std::vector<Mat> out;
    Mat cur(n);
    fill_cells(n, r, 0, cur, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mat> enumerate_xi1(int n, int r, int l) {
    std::vector<int> cap(static_cast<size_t>(n) * n, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cap[static_cast<size_t>(i) * n + j] = l - 1;
    std::vector<Mat> out;
    Mat cur(n);
    fill_cells(n, r, 0, cur, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mat> enumerate_xipm1_upto(int n, int r, int l) {
    std::vector<Mat> out;
    for (int s = 0; s <= r; ++s) {
        std::vector<int> cap(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) cap[static_cast<size_t>(i) * n + j] = std::min(l - 1, s);
        Mat cur(n);
        fill_cells(n, s, 0, cur, out, cap);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ReducedMat pr_reduce(const Mat& m, int modulus) {
    ReducedMat r;
    r.n = m.n;
    r.modulus = modulus;
    r.a = m.a;
    for (int i = 0; i < m.n; ++i) {
        int& d = r.a[static_cast<size_t>(i) * m.n + i];
        d = ((d % modulus) + modulus) % modulus;
    }
    return r;
}

long long count_pr_classes(int n, int r, int l, int modulus) {
    std::set<ReducedMat> classes;
    for (const Mat& m : enumerate_xi1(n, r, l)) classes.insert(pr_reduce(m, modulus));
    return static_cast<long long>(classes.size());
}

long long d_A(const Mat& m) {
    long long first = 0, second = 0;
    int n = m.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) == 0) continue;
            for (int s = i + 1; s < n; ++s)
                for (int t = 0; t < j; ++t)
                    first += static_cast<long long>(m.at(i, j)) * m.at(s, t);
            for (int t = 0; t < j; ++t)
                second += static_cast<long long>(m.at(i, j)) * m.at(i, t);
        }
    return -first + second;
}

}
