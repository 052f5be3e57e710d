#include "qschur/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qschur {

namespace {

// Integer polynomial helpers for building Phi_{l'} (coefficients stay tiny
// at desk scale).  Polynomials are coefficient vectors, lowest degree first.
using IPoly = std::vector<long long>;

IPoly ipoly_div_exact(const IPoly& a, const IPoly& b) {
    IPoly r = a;
    IPoly q(a.size() - b.size() + 1, 0);
    long long lead = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        long long top = r[k + b.size() - 1];
        if (top % lead != 0) throw internal_error("cyclotomic polynomial division not exact");
        q[k] = top / lead;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= q[k] * b[j];
    }
    for (long long c : r)
        if (c != 0) throw internal_error("cyclotomic polynomial division remainder");
    return q;
}

IPoly cyclotomic_poly(int m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    IPoly num(static_cast<size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = ipoly_div_exact(num, cyclotomic_poly(d));
    return num;
}

std::mutex g_field_mutex;
std::map<int, std::unique_ptr<CycloField>> g_fields;

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long long gfp_pow(unsigned long long b, unsigned long long e, unsigned long long p) {
    unsigned __int128 r = 1, x = b % p;
    while (e) {
        if (e & 1) r = (r * x) % p;
        x = (x * x) % p;
        e >>= 1;
    }
    return static_cast<unsigned long long>(r);
}

}

CycloField::CycloField(int lp) : lprime(lp) {
    IPoly Phi = cyclotomic_poly(lp);
    phi = static_cast<int>(Phi.size()) - 1;
    phi_poly = Phi;
    // eps^k coordinates for k < 2*phi - 1 (enough to reduce degree-(2phi-2) products)
    pow_rows.assign(static_cast<size_t>(2 * phi - 1), std::vector<long long>(phi, 0));
    for (int k = 0; k < phi; ++k) pow_rows[static_cast<size_t>(k)][static_cast<size_t>(k)] = 1;
    for (int k = phi; k < 2 * phi - 1; ++k) {
        // x^k = x * x^{k-1} reduced mod Phi
        std::vector<long long> prev = pow_rows[static_cast<size_t>(k - 1)];
        std::vector<long long> cur(static_cast<size_t>(phi) + 1, 0);
        for (int j = 0; j < phi; ++j) cur[static_cast<size_t>(j) + 1] = prev[static_cast<size_t>(j)];
        long long top = cur[static_cast<size_t>(phi)];
        if (top != 0)
            for (int j = 0; j < phi; ++j)
                cur[static_cast<size_t>(j)] -= top * Phi[static_cast<size_t>(j)];
        cur.resize(static_cast<size_t>(phi));
        pow_rows[static_cast<size_t>(k)] = cur;
    }
}

const CycloField* CycloField::get(int lprime) {
    if (lprime < 2) throw domain_error("cyclotomic field needs order >= 2");
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_fields.find(lprime);
    if (it == g_fields.end())
        it = g_fields.emplace(lprime, std::unique_ptr<CycloField>(new CycloField(lprime))).first;
    return it->second.get();
}

FieldSpec FieldSpec::cyclotomic_field(int lprime) {
    if (lprime < 3) throw domain_error("l' must be at least 3");
    FieldSpec f;
    f.kind = Kind::cyclotomic;
    f.lprime = lprime;
    return f;
}

FieldSpec FieldSpec::prime_field(int lprime, long long p) {
    if (lprime < 3) throw domain_error("l' must be at least 3");
    if (p == 0) {
        p = lprime + 1;
        while (!(is_prime_ll(p) && (p - 1) % lprime == 0)) ++p;
    }
    if (!is_prime_ll(p)) throw domain_error("prime backend: modulus is not prime");
    if ((p - 1) % lprime != 0)
        throw domain_error("prime backend requires l' to divide p-1");
    FieldSpec f;
    f.kind = Kind::prime;
    f.lprime = lprime;
    f.p = p;
    // smallest base whose (p-1)/l' power has exact order l'
    for (long long a = 2; a < p; ++a) {
        unsigned long long e = gfp_pow(static_cast<unsigned long long>(a),
                                       static_cast<unsigned long long>((p - 1) / lprime),
                                       static_cast<unsigned long long>(p));
        bool exact = (gfp_pow(e, static_cast<unsigned long long>(lprime),
                              static_cast<unsigned long long>(p)) == 1);
        if (exact) {
            // order must be exactly l', not a proper divisor
            bool proper = false;
            for (int d = 1; d < lprime; ++d)
                if (lprime % d == 0 && gfp_pow(e, static_cast<unsigned long long>(d),
                                               static_cast<unsigned long long>(p)) == 1) {
                    proper = true;
                    break;
                }
            if (!proper) {
                f.eps_p = static_cast<long long>(e);
                return f;
            }
        }
    }
    throw internal_error("no element of order l' found in F_p");
}

void Cyclo::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    mpz_class g = den_;
    for (const auto& x : num_) {
        mpz_class ax = abs(x);
        g = gcd(g, ax);
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& x : num_) x /= g;
    }
}

Cyclo Cyclo::from_int(const CycloField* F, long long c) {
    Cyclo r(F);
    r.num_[0] = static_cast<long>(c);
    return r;
}

Cyclo Cyclo::from_mpq(const CycloField* F, const mpq_class& c) {
    Cyclo r(F);
    r.num_[0] = c.get_num();
    r.den_ = c.get_den();
    r.normalize();
    return r;
}

Cyclo Cyclo::eps_pow(const CycloField* F, long long k) {
    long long m = ((k % F->lprime) + F->lprime) % F->lprime;
    Cyclo r(F);
    if (m < F->phi) {
        r.num_[static_cast<size_t>(m)] = 1;
        return r;
    }
    // reduce eps^m by repeated multiplication rows: eps^m = eps^{phi-1} * eps^{m-phi+1}...
    // simplest: multiply eps^{phi-1} by eps until reaching m.
    r.num_[static_cast<size_t>(F->phi - 1)] = 1;
    Cyclo e(F);
    e.num_[1 % F->phi] = (F->phi > 1) ? 1 : 0;
    if (F->phi == 1) {
        // degenerate (l' = 1 or 2); eps is rational
        Cyclo c(F);
        c.num_[0] = static_cast<long>(-F->phi_poly[0]);
        e = c;
    }
    for (long long i = F->phi - 1; i < m; ++i) r = r * e;
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& x : num_)
        if (x != 0) return false;
    return true;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo r(a.F_);
    r.den_ = a.den_ * b.den_;
    for (int i = 0; i < a.F_->phi; ++i)
        r.num_[static_cast<size_t>(i)] =
            a.num_[static_cast<size_t>(i)] * b.den_ + b.num_[static_cast<size_t>(i)] * a.den_;
    r.normalize();
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.num_) x = -x;
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const CycloField* F = a.F_;
    int phi = F->phi;
    std::vector<mpz_class> conv(static_cast<size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
        if (a.num_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.num_[static_cast<size_t>(j)] == 0) continue;
            conv[static_cast<size_t>(i + j)] +=
                a.num_[static_cast<size_t>(i)] * b.num_[static_cast<size_t>(j)];
        }
    }
    Cyclo r(F);
    r.den_ = a.den_ * b.den_;
    for (int k = 0; k < 2 * phi - 1; ++k) {
        if (conv[static_cast<size_t>(k)] == 0) continue;
        const auto& row = F->pow_rows[static_cast<size_t>(k)];
        for (int j = 0; j < phi; ++j)
            if (row[static_cast<size_t>(j)] != 0)
                r.num_[static_cast<size_t>(j)] += conv[static_cast<size_t>(k)] * static_cast<long>(row[static_cast<size_t>(j)]);
    }
    r.normalize();
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw domain_error("inverse of zero cyclotomic element");
    const CycloField* F = F_;
    int phi = F->phi;
    // extended Euclid in Q[x]: u*a + w*Phi = gcd = constant
    using QPoly = std::vector<mpq_class>;
    auto deg = [](const QPoly& p) {
        for (size_t k = p.size(); k-- > 0;)
            if (p[k] != 0) return static_cast<int>(k);
        return -1;
    };
    QPoly r0(static_cast<size_t>(phi) + 1), r1(static_cast<size_t>(phi));
    for (int i = 0; i <= phi; ++i) r0[static_cast<size_t>(i)] = static_cast<long>(F->phi_poly[static_cast<size_t>(i)]);
    for (int i = 0; i < phi; ++i)
        r1[static_cast<size_t>(i)] = mpq_class(num_[static_cast<size_t>(i)]) / mpq_class(den_);
    QPoly s0{0}, s1{1};  // coefficients of the input element in the Bezout identity
    while (deg(r1) > 0) {
        int d0 = deg(r0), d1 = deg(r1);
        QPoly q(static_cast<size_t>(d0 - d1) + 1);
        QPoly rem = r0;
        for (int k = d0 - d1; k >= 0; --k) {
            mpq_class f = rem[static_cast<size_t>(k + d1)] / r1[static_cast<size_t>(d1)];
            q[static_cast<size_t>(k)] = f;
            for (int j = 0; j <= d1; ++j)
                rem[static_cast<size_t>(k + j)] -= f * r1[static_cast<size_t>(j)];
        }
        QPoly s2(std::max(s0.size(), q.size() + s1.size()));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    int d = deg(r1);
    if (d != 0) throw internal_error("cyclotomic element not invertible (gcd not constant)");
    mpq_class c = r1[0];
    Cyclo out(F);
    mpz_class den_lcm = 1;
    std::vector<mpq_class> coords(static_cast<size_t>(phi), 0);
    for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(phi); ++i)
        coords[i] = s1[i] / c;
    for (const auto& x : coords) den_lcm = lcm(den_lcm, x.get_den());
    out.den_ = den_lcm;
    for (int i = 0; i < phi; ++i) {
        mpq_class scaled = coords[static_cast<size_t>(i)] * mpq_class(den_lcm);
        out.num_[static_cast<size_t>(i)] = scaled.get_num();
    }
    out.normalize();
    return out;
}

Cyclo Cyclo::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclo r = Cyclo::one(F_);
    Cyclo x = *this;
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

bool Cyclo::is_rational_integer(mpz_class& out) const {
    if (den_ != 1) return false;
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    out = num_[0];
    return true;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < num_.size(); ++i) {
        if (i) os << ",";
        os << num_[i];
        if (den_ != 1) os << "/" << den_;
    }
    os << "]";
    return os.str();
}

GFp GFp::pow(unsigned long long e) const { return GFp(gfp_pow(v, e, p), p); }

GFp GFp::inv() const {
    if (v == 0) throw domain_error("inverse of zero in F_p");
    return pow(p - 2);
}

Cyclo specialize(const Laurent& x, const FieldSpec& f) {
    if (f.kind != FieldSpec::Kind::cyclotomic)
        throw domain_error("specialize: cyclotomic field expected");
    const CycloField* F = CycloField::get(f.lprime);
    Cyclo r = Cyclo::zero(F);
    for (const auto& [e, c] : x.terms())
        r += Cyclo::from_int(F, c) * Cyclo::eps_pow(F, e);
    return r;
}

GFp specialize_prime(const Laurent& x, const FieldSpec& f) {
    if (f.kind != FieldSpec::Kind::prime)
        throw domain_error("specialize_prime: prime field expected");
    unsigned long long p = static_cast<unsigned long long>(f.p);
    GFp eps(static_cast<unsigned long long>(f.eps_p), p);
    GFp r(0, p);
    for (const auto& [e, c] : x.terms()) {
        long long m = ((e % f.lprime) + f.lprime) % f.lprime;
        long long cc = c % static_cast<long long>(p);
        if (cc < 0) cc += static_cast<long long>(p);
        r = r + GFp(static_cast<unsigned long long>(cc), p) * eps.pow(static_cast<unsigned long long>(m));
    }
    return r;
}

std::optional<int> eps_log(const Cyclo& x, const FieldSpec& f) {
    const CycloField* F = CycloField::get(f.lprime);
    for (int m = 0; m < f.lprime; ++m)
        if (x == Cyclo::eps_pow(F, m)) return m;
    return std::nullopt;
}

std::optional<int> eps_log_prime(const GFp& x, const FieldSpec& f) {
    GFp eps(static_cast<unsigned long long>(f.eps_p), static_cast<unsigned long long>(f.p));
    GFp acc(1, static_cast<unsigned long long>(f.p));
    for (int m = 0; m < f.lprime; ++m) {
        if (x == acc) return m;
        acc = acc * eps;
    }
    return std::nullopt;
}

}
