#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

/// Choice of the coefficient field: either Q(eps) with eps a primitive
/// l'-th root of unity (exact cyclotomic arithmetic), or a prime field
/// F_p with a chosen element of multiplicative order l'.
struct FieldSpec {
    enum class Kind { cyclotomic, prime };

    Kind kind = Kind::cyclotomic;
    int lprime = 3;          // order of eps, >= 3
    long long p = 0;         // prime kind only
    long long eps_p = 0;     // prime kind: the chosen element of order l'

    static FieldSpec cyclotomic_field(int lprime);
    // p == 0 picks the smallest prime congruent to 1 mod l'.
    static FieldSpec prime_field(int lprime, long long p = 0);

    /// l = l' when l' is odd, l'/2 when even; q = eps^2 has order l.
    int l() const { return lprime % 2 == 1 ? lprime : lprime / 2; }
};

/// Shared immutable data of the field Q(eps): the cyclotomic polynomial
/// Phi_{l'} and reduction rows for powers of eps above the degree.
class CycloField {
public:
    int lprime;
    int phi;                                  // degree of Phi_{l'}
    std::vector<long long> phi_poly;          // monic, length phi+1
    std::vector<std::vector<long long>> pow_rows;  // eps^k for k in [0, 2*phi-1), coords

    static const CycloField* get(int lprime);

private:
    explicit CycloField(int lp);
};

/// An element of Q(eps): rational-coefficient polynomial of degree < phi(l'),
/// reduced mod Phi_{l'}, stored as integer coordinates over one denominator.
class Cyclo {
public:
    Cyclo() : F_(nullptr), den_(1) {}
    explicit Cyclo(const CycloField* F) : F_(F), num_(F->phi), den_(1) {}

    static Cyclo from_int(const CycloField* F, long long c);
    static Cyclo from_mpq(const CycloField* F, const mpq_class& c);
    static Cyclo eps_pow(const CycloField* F, long long k);
    static Cyclo zero(const CycloField* F) { return Cyclo(F); }
    static Cyclo one(const CycloField* F) { return from_int(F, 1); }

    const CycloField* field() const { return F_; }
    bool is_zero() const;
    bool is_one() const { return *this == one(F_); }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo inv() const;                        // throws domain_error on zero
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

    Cyclo& operator+=(const Cyclo& b) { *this = *this + b; return *this; }
    Cyclo& operator-=(const Cyclo& b) { *this = *this - b; return *this; }
    Cyclo& operator*=(const Cyclo& b) { *this = *this * b; return *this; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo pow(long long e) const;

    /// True when the element lies in the image of Z (an integer constant).
    bool is_rational_integer(mpz_class& out) const;

    /// Coefficient list "c0,c1,...": numerators over the common denominator.
    std::string str() const;

    const std::vector<mpz_class>& num() const { return num_; }
    const mpz_class& den() const { return den_; }

private:
    void normalize();
    const CycloField* F_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

/// Prime-field element; the modulus travels with the value.
struct GFp {
    unsigned long long v = 0;
    unsigned long long p = 0;

    GFp() = default;
    GFp(unsigned long long value, unsigned long long mod) : v(value % mod), p(mod) {}

    bool is_zero() const { return v == 0; }
    friend GFp operator+(GFp a, GFp b) { return GFp((a.v + b.v) % a.p, a.p); }
    friend GFp operator-(GFp a, GFp b) { return GFp((a.v + a.p - b.v) % a.p, a.p); }
    friend GFp operator*(GFp a, GFp b) {
        return GFp(static_cast<unsigned long long>(
                       (static_cast<unsigned __int128>(a.v) * b.v) % a.p),
                   a.p);
    }
    GFp operator-() const { return GFp(p - v, p); }
    GFp pow(unsigned long long e) const;
    GFp inv() const;
    friend bool operator==(GFp a, GFp b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(GFp a, GFp b) { return !(a == b); }
};

/// Ring-homomorphic specialization v -> eps into Q(eps).
Cyclo specialize(const Laurent& x, const FieldSpec& f);

/// Specialization into the prime-field backend.
GFp specialize_prime(const Laurent& x, const FieldSpec& f);

/// If x = eps^m, return m in [0, l'); otherwise nullopt.
std::optional<int> eps_log(const Cyclo& x, const FieldSpec& f);
std::optional<int> eps_log_prime(const GFp& x, const FieldSpec& f);

}
