#ifndef PISOTMOD_NUMERIC_HPP
#define PISOTMOD_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "pisotmod/errors.hpp"

namespace pisotmod {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Multiplicity of the prime p in n; n must be nonzero.
inline unsigned valuation(Int n, const Int& p) {
    if (n == 0) throw InvalidInputError("valuation of zero is undefined");
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

/// True iff every prime factor of b divides z. Runs on gcds only, no
/// factorization.
inline bool radical_divides(Int b, const Int& z) {
    if (b < 0) b = -b;
    if (b == 0) return false;
    while (true) {
        Int g = gcd(b, z);
        if (g == 1) break;
        while (mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t())) b /= g;
    }
    return b == 1;
}

/// Deterministic Miller-Rabin, complete for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (!n.fits_ulong_p()) {
        // Word-size moduli only at this scale.
        throw UnsupportedInputError("primality test restricted to word-size integers");
    }
    return is_prime_u64(n.get_ui());
}

struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors; // (prime, multiplicity), ascending
    Int cofactor = 1;                              // 1 when complete
    bool complete() const { return cofactor == 1; }
};

/// Trial division up to `bound`; a leftover cofactor below bound^2 is prime
/// and gets included. Anything larger stays in `cofactor`.
Factorization trial_factor(Int n, std::uint64_t bound = 1000000000ULL);

} // namespace pisotmod

#endif
