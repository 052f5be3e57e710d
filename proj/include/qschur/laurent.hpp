#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw internal_error("integer overflow in Laurent coefficient addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw internal_error("integer overflow in Laurent coefficient multiplication");
    return r;
}

}

/// Exact Laurent polynomial in one variable v with integer coefficients.
/// Terms are kept sorted by ascending exponent; zero coefficients are never stored.
class Laurent {
public:
    using Term = std::pair<int, long long>;  // (exponent, coefficient)

    Laurent() = default;
    Laurent(long long c) {
        if (c != 0) terms_.push_back({0, c});
    }

    static Laurent v_pow(int e, long long c = 1) {
        Laurent x;
        if (c != 0) x.terms_.push_back({e, c});
        return x;
    }

    /// q = v^2 (the deformation parameter used by the coordinate algebra).
    static Laurent q(int power = 1) { return v_pow(2 * power); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }

    const std::vector<Term>& terms() const { return terms_; }

    long long coeff(int e) const {
        for (const auto& [exp, c] : terms_)
            if (exp == e) return c;
        return 0;
    }

    int min_exp() const {
        if (is_zero()) throw domain_error("min_exp of zero polynomial");
        return terms_.front().first;
    }
    int max_exp() const {
        if (is_zero()) throw domain_error("max_exp of zero polynomial");
        return terms_.back().first;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            if (a.terms_[i].first < b.terms_[j].first) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (a.terms_[i].first > b.terms_[j].first) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                long long c = detail::checked_add(a.terms_[i].second, b.terms_[j].second);
                if (c != 0) r.terms_.push_back({a.terms_[i].first, c});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        // dense accumulation over the exponent window
        int lo = a.min_exp() + b.min_exp();
        int hi = a.max_exp() + b.max_exp();
        std::vector<long long> acc(static_cast<size_t>(hi - lo + 1), 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                size_t k = static_cast<size_t>(ea + eb - lo);
                acc[k] = detail::checked_add(acc[k], detail::checked_mul(ca, cb));
            }
        Laurent r;
        for (size_t k = 0; k < acc.size(); ++k)
            if (acc[k] != 0) r.terms_.push_back({lo + static_cast<int>(k), acc[k]});
        return r;
    }

    Laurent& operator+=(const Laurent& b) { *this = *this + b; return *this; }
    Laurent& operator-=(const Laurent& b) { *this = *this - b; return *this; }
    Laurent& operator*=(const Laurent& b) { *this = *this * b; return *this; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    /// The bar involution v -> v^{-1}.
    Laurent bar() const {
        Laurent r;
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            r.terms_.push_back({-it->first, it->second});
        return r;
    }

    Laurent shifted(int e) const {
        Laurent r = *this;
        for (auto& t : r.terms_) t.first += e;
        return r;
    }

    /// Exact division; throws internal_error when the division is not exact,
    /// which signals an arithmetic bug upstream.
    static Laurent exact_div(const Laurent& num, const Laurent& den);

    /// If the value is a plain integer (only a v^0 term), return it.
    bool as_integer(long long& out) const {
        if (is_zero()) { out = 0; return true; }
        if (terms_.size() == 1 && terms_[0].first == 0) { out = terms_[0].second; return true; }
        return false;
    }

    /// Canonical text form with ascending exponents, e.g. "v^-2 + 1 + v^2".
    std::string str() const;

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        for (const auto& [e, c] : terms_) {
            h ^= static_cast<size_t>(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
            h ^= static_cast<size_t>(c) + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::vector<Term> terms_;
};

/// Balanced quantum integer [c] = (v^c - v^{-c})/(v - v^{-1}).
Laurent qint(long long c);

/// Quantum factorial [t]! = [1][2]...[t], with [0]! = 1 (empty product).
Laurent qfact(int t);

/// Balanced Gaussian binomial [c over t] for integer c and t >= 0,
/// with [c over 0] = 1.  Computed by the product formula with exact division.
Laurent gauss_binom(long long c, int t);

}
