#include "qschur/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qschur {

std::string Residue::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) os << ",";
        os << r[i];
    }
    os << ")%" << modulus;
    return os.str();
}

Residue bar(const Weight& w, int m) {
    Residue out;
    out.modulus = m;
    out.r.reserve(w.size());
    for (int x : w) out.r.push_back(((x % m) + m) % m);
    return out;
}

namespace {

void compositions(int n, int r, size_t idx, Weight& cur, std::vector<Weight>& out) {
    if (idx + 1 == static_cast<size_t>(n)) {
        cur[idx] = r;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= r; ++v) {
        cur[idx] = v;
        compositions(n, r - v, idx + 1, cur, out);
    }
}

}

std::vector<Weight> enumerate_lambda(int n, int r) {
    std::vector<Weight> out;
    Weight cur(static_cast<size_t>(n), 0);
    compositions(n, r, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> enumerate_lambda_plus(int n, int r) {
    std::vector<Weight> out;
    for (const Weight& w : enumerate_lambda(n, r)) {
        bool dom = true;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] < w[i + 1]) { dom = false; break; }
        if (dom) out.push_back(w);
    }
    return out;
}

std::vector<Residue> enumerate_lambda_bar(int n, int r, int m) {
    std::set<Residue> s;
    for (const Weight& w : enumerate_lambda(n, r)) s.insert(bar(w, m));
    return std::vector<Residue>(s.begin(), s.end());
}

std::vector<Weight> enumerate_x1(int n, int l) {
    // entries determined bottom-up: lambda_n in [0,l), lambda_i in lambda_{i+1} + [0,l)
    std::vector<Weight> out;
    Weight cur(static_cast<size_t>(n), 0);
    std::vector<int> gaps(static_cast<size_t>(n), 0);
    while (true) {
        int acc = 0;
        for (int i = n - 1; i >= 0; --i) {
            acc += gaps[static_cast<size_t>(i)];
            cur[static_cast<size_t>(i)] = acc;
        }
        out.push_back(cur);
        int k = n - 1;
        while (k >= 0 && gaps[static_cast<size_t>(k)] == l - 1) gaps[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
        ++gaps[static_cast<size_t>(k)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> enumerate_x1_lr(int n, int l, int r) {
    std::set<Weight> s;
    std::vector<Weight> base = enumerate_x1(n, l);
    for (const Weight& mu : base) {
        int rem = r - sigma(mu);
        if (rem < 0 || rem % l != 0) continue;
        int t = rem / l;
        for (const Weight& nu : enumerate_lambda(n, t)) {
            Weight w = mu;
            for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] += l * nu[static_cast<size_t>(i)];
            s.insert(w);
        }
    }
    return std::vector<Weight>(s.begin(), s.end());
}

std::vector<Residue> simple_index_set(int n, int r, int l, int lprime) {
    std::set<Residue> s;
    for (const Weight& w : enumerate_x1_lr(n, l, r)) s.insert(bar(w, lprime));
    return std::vector<Residue>(s.begin(), s.end());
}

bool recursion_check(int n, int r, int l) {
    if (r < l) throw domain_error("recursion_check needs r >= l");
    std::set<Residue> lhs;
    for (const Weight& w : enumerate_x1_lr(n, l, r)) lhs.insert(bar(w, l));
    std::set<Residue> rhs;
    if (r - l >= 0)
        for (const Weight& w : enumerate_x1_lr(n, l, r - l)) rhs.insert(bar(w, l));
    for (const Weight& w : enumerate_x1(n, l))
        if (sigma(w) == r) rhs.insert(bar(w, l));
    return lhs == rhs;
}

std::vector<Residue> little_block_n2(const Weight& lambda, int r, int l) {
    if (lambda.size() != 2) throw domain_error("little_block_n2 needs n = 2");
    if (sigma(lambda) != r) throw domain_error("little_block_n2: sigma(lambda) != r");
    if (lambda[0] < lambda[1]) throw domain_error("little_block_n2: lambda not dominant");
    // dot action of the transposition: s.(a,b) = (b-1, a+1) with rho = (1,0)
    Weight s_dot = {lambda[1] - 1, lambda[0] + 1};
    std::set<Residue> orbit_bar = {bar(lambda, l), bar(s_dot, l)};
    std::set<Residue> dom_bar;
    for (const Weight& w : enumerate_lambda_plus(2, r)) dom_bar.insert(bar(w, l));
    std::vector<Residue> out;
    for (const Residue& x : orbit_bar)
        if (dom_bar.count(x)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

bool semisimple_predicate(int n, int r, int l) {
    return l > r || (l == 2 && n == 2 && r >= 3 && r % 2 == 1);
}

bool finite_type_predicate(int n, int r, int l, int lprime) {
    (void)n;
    if (lprime % 2 == 0)
        throw domain_error("finite_type_predicate requires l' odd");
    (void)r;
    return l > r;
}

}
