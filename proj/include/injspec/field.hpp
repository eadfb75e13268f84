#ifndef INJSPEC_FIELD_HPP
#define INJSPEC_FIELD_HPP

#include <cstdint>
#include <stdexcept>

#include "injspec/common.hpp"

namespace injspec {

// Scalars of GF(p) are plain uint32_t values kept in canonical form 0..p-1.
// The modulus is carried by the containing object (Mat, Poly, ...), not the
// scalar, so these helpers take p explicitly.

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void check_prime_field(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw invariant_violation("field modulus " + std::to_string(p) + " is not prime");
}

inline std::uint32_t fadd(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + b) % p; }
inline std::uint32_t fsub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + p - b % p) % p; }
inline std::uint32_t fneg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t fmul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
}

inline std::uint32_t fpow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fmul(r, a, p);
        a = fmul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t finv(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of 0 in GF(p)");
    return fpow(a, p - 2, p); // Fermat; p prime
}

inline std::uint32_t fdiv(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return fmul(a % p, finv(b, p), p);
}

inline std::uint32_t freduce(long long a, std::uint32_t p) {
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

} // namespace injspec

#endif
