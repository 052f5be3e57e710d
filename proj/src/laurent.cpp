#include "qschur/laurent.hpp"

#include <sstream>

namespace qschur {

Laurent Laurent::exact_div(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw internal_error("Laurent division by zero");
    if (num.is_zero()) return Laurent();
    // Shift both to ordinary polynomials and do long division from the top.
    int ns = num.min_exp(), ds = den.min_exp();
    std::vector<long long> a(static_cast<size_t>(num.max_exp() - ns + 1), 0);
    std::vector<long long> b(static_cast<size_t>(den.max_exp() - ds + 1), 0);
    for (const auto& [e, c] : num.terms()) a[static_cast<size_t>(e - ns)] = c;
    for (const auto& [e, c] : den.terms()) b[static_cast<size_t>(e - ds)] = c;
    if (a.size() < b.size()) throw internal_error("non-exact Laurent division (degree)");
    std::vector<long long> qv(a.size() - b.size() + 1, 0);
    long long lead = b.back();
    for (size_t k = qv.size(); k-- > 0;) {
        long long top = a[k + b.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw internal_error("non-exact Laurent division (leading term)");
        long long f = top / lead;
        qv[k] = f;
        for (size_t j = 0; j < b.size(); ++j)
            a[k + j] = detail::checked_add(a[k + j], -detail::checked_mul(f, b[j]));
    }
    for (long long rem : a)
        if (rem != 0) throw internal_error("non-exact Laurent division (remainder)");
    Laurent r;
    for (size_t k = 0; k < qv.size(); ++k)
        if (qv[k] != 0)
            r += Laurent::v_pow(static_cast<int>(k) + ns - ds, qv[k]);
    return r;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

Laurent qint(long long c) {
    if (c == 0) return Laurent();
    if (c < 0) return -qint(-c);
    // [c] = v^{c-1} + v^{c-3} + ... + v^{-(c-1)}
    Laurent r;
    for (long long e = -(c - 1); e <= c - 1; e += 2)
        r += Laurent::v_pow(static_cast<int>(e));
    return r;
}

Laurent qfact(int t) {
    if (t < 0) throw domain_error("qfact of negative argument");
    Laurent r(1);
    for (int s = 1; s <= t; ++s) r *= qint(s);
    return r;
}

Laurent gauss_binom(long long c, int t) {
    if (t < 0) throw domain_error("gauss_binom with negative lower argument");
    // [c over t] = prod_{s=1}^{t} (v^{c-s+1} - v^{-c+s-1}) / (v^s - v^{-s});
    // every prefix is itself a Gaussian binomial, so each step divides exactly.
    Laurent x(1);
    for (int s = 1; s <= t; ++s) {
        long long e = c - s + 1;
        Laurent numfac;
        if (e != 0)
            numfac = Laurent::v_pow(static_cast<int>(e)) - Laurent::v_pow(static_cast<int>(-e));
        x *= numfac;
        if (x.is_zero()) return x;
        x = Laurent::exact_div(x, Laurent::v_pow(s) - Laurent::v_pow(-s));
    }
    return x;
}

}
