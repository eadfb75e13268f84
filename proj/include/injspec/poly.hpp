#ifndef INJSPEC_POLY_HPP
#define INJSPEC_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "injspec/common.hpp"
#include "injspec/field.hpp"

namespace injspec {

// Univariate polynomial over GF(p), coefficients lowest degree first,
// leading coefficient nonzero unless the polynomial is zero.
struct Poly {
    std::uint32_t p = 2;
    std::vector<std::uint32_t> c; // c[i] = coefficient of x^i

    Poly() = default;
    explicit Poly(std::uint32_t p_) : p(p_) { check_prime_field(p_); }
    Poly(std::uint32_t p_, std::vector<std::uint32_t> coeffs) : p(p_), c(std::move(coeffs)) {
        check_prime_field(p_);
        for (auto& x : c) x %= p;
        trim();
    }

    static Poly zero(std::uint32_t p) { return Poly(p); }
    static Poly constant(std::uint32_t p, std::uint32_t v) { return Poly(p, {v}); }
    static Poly x(std::uint32_t p) { return Poly(p, {0, 1}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; } // -1 for zero
    std::uint32_t lead() const { return c.empty() ? 0 : c.back(); }
    std::uint32_t coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : 0; }
    bool is_unit() const { return degree() == 0; }
    bool is_monic() const { return lead() == 1 % p; }

    bool operator==(const Poly& o) const { return p == o.p && c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // degree first, then lexicographic on coefficients highest-first:
    // the deterministic ordering used for factor lists and enumeration.
    bool operator<(const Poly& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        for (int i = degree(); i >= 0; --i)
            if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
        return false;
    }
};

inline void check_same_field(const Poly& f, const Poly& g) {
    if (f.p != g.p) throw invariant_violation("polynomial field mismatch");
}

inline Poly operator+(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    Poly r(f.p);
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = fadd(f.coeff(int(i)), g.coeff(int(i)), f.p);
    r.trim();
    return r;
}

inline Poly operator-(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    Poly r(f.p);
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = fsub(f.coeff(int(i)), g.coeff(int(i)), f.p);
    r.trim();
    return r;
}

inline Poly operator*(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.p);
    Poly r(f.p);
    r.c.assign(f.c.size() + g.c.size() - 1, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i]) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = fadd(r.c[i + j], fmul(f.c[i], g.c[j], f.p), f.p);
    }
    r.trim();
    return r;
}

inline Poly scale(const Poly& f, std::uint32_t k) {
    Poly r = f;
    for (auto& x : r.c) x = fmul(x, k, f.p);
    r.trim();
    return r;
}

inline Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return scale(f, finv(f.lead(), f.p));
}

// Quotient and remainder: f = q*g + r with deg r < deg g.
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = f, q(f.p);
    if (f.degree() >= g.degree()) q.c.assign(f.degree() - g.degree() + 1, 0);
    std::uint32_t glead_inv = finv(g.lead(), g.p);
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int shift = r.degree() - g.degree();
        std::uint32_t coef = fmul(r.lead(), glead_inv, f.p);
        q.c[shift] = coef;
        for (int i = 0; i <= g.degree(); ++i)
            r.c[i + shift] = fsub(r.c[i + shift], fmul(coef, g.c[i], f.p), f.p);
        r.trim();
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

inline Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }
inline Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

inline bool divides(const Poly& g, const Poly& f) { return (f % g).is_zero(); }

inline Poly gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f);
}

inline std::uint32_t eval(const Poly& f, std::uint32_t x) {
    std::uint32_t r = 0;
    for (int i = f.degree(); i >= 0; --i) r = fadd(fmul(r, x, f.p), f.c[i], f.p);
    return r;
}

// All monic polynomials of the given degree, in the canonical (degree, then
// lexicographic highest-first) order.
inline std::vector<Poly> monic_polys_of_degree(std::uint32_t p, int d) {
    std::vector<Poly> out;
    if (d < 0) return out;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> c(std::size_t(d) + 1, 0);
        std::uint64_t x = code;
        // decode highest-first so increasing code follows operator<
        for (int i = d - 1; i >= 0; --i) {
            std::uint64_t pw = 1;
            for (int k = 0; k < i; ++k) pw *= p;
            c[std::size_t(i)] = std::uint32_t(x / pw);
            x %= pw;
        }
        c[std::size_t(d)] = 1;
        out.emplace_back(p, std::move(c));
    }
    return out;
}

// Factorization into monic irreducibles by trial division: divisors are
// tried in increasing canonical order, so every divisor found is
// automatically irreducible. Returns (factor, multiplicity) pairs in
// canonical order; the product of all factors times lead(f) equals f.
inline std::vector<std::pair<Poly, int>> poly_factor(const Poly& f) {
    if (f.is_zero()) throw invariant_violation("cannot factor the zero polynomial");
    std::map<Poly, int> acc;
    Poly rest = monic(f);
    for (int d = 1; !rest.is_unit() && 2 * d <= rest.degree(); ++d) {
        for (const Poly& g : monic_polys_of_degree(f.p, d)) {
            while (divides(g, rest)) {
                ++acc[g];
                rest = rest / g;
            }
            if (rest.is_unit() || 2 * d > rest.degree()) break;
        }
    }
    if (!rest.is_unit()) ++acc[rest]; // what is left is irreducible
    return std::vector<std::pair<Poly, int>>(acc.begin(), acc.end());
}

inline bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    auto fac = poly_factor(f);
    return fac.size() == 1 && fac[0].second == 1;
}

// ---- text form: "x^2+x+1", coefficients reduced mod p --------------------

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        std::uint32_t c = f.coeff(i);
        if (!c) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

inline Poly parse_poly(std::uint32_t p, const std::string& text) {
    Poly r(p);
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw invariant_violation("empty polynomial text");
    std::size_t pos = 0;
    bool first = true;
    while (pos < t.size()) {
        std::uint32_t sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            if (t[pos] == '-') sign = p - 1; // -1 mod p
            ++pos;
        } else if (!first) {
            throw invariant_violation("malformed polynomial: expected + or - in '" + text + "'");
        }
        first = false;
        std::uint64_t coef = 0;
        bool saw_digits = false;
        while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) {
            coef = coef * 10 + std::uint64_t(t[pos] - '0');
            saw_digits = true;
            ++pos;
        }
        coef = saw_digits ? coef % p : 1;
        int exp = 0;
        if (pos < t.size() && t[pos] == 'x') {
            ++pos;
            exp = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                if (pos >= t.size() || !isdigit(static_cast<unsigned char>(t[pos])))
                    throw invariant_violation("malformed exponent in '" + text + "'");
                exp = 0;
                while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos])))
                    exp = exp * 10 + (t[pos++] - '0');
            }
        } else if (!saw_digits) {
            throw invariant_violation("malformed term in '" + text + "'");
        }
        if (int(r.c.size()) <= exp) r.c.resize(std::size_t(exp) + 1, 0);
        r.c[std::size_t(exp)] = fadd(r.c[std::size_t(exp)], fmul(std::uint32_t(coef), sign, p), p);
    }
    r.trim();
    return r;
}

} // namespace injspec

#endif
