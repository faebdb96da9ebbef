#include "pisotmod/numeric.hpp"

namespace pisotmod {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all 64-bit inputs.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Factorization trial_factor(Int n, std::uint64_t bound) {
    Factorization out;
    if (n < 0) n = -n;
    if (n <= 1) {
        out.cofactor = 1;
        return out;
    }
    auto take = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.factors.emplace_back(p, e);
    };
    take(Int(2));
    take(Int(3));
    Int d = 5;
    // wheel over 6k +- 1
    while (n > 1 && d * d <= n && d <= Int(static_cast<unsigned long>(bound))) {
        take(d);
        take(d + 2);
        d += 6;
    }
    if (n > 1) {
        if (d * d > n) {
            // no divisor up to sqrt(n): prime
            out.factors.emplace_back(n, 1);
        } else {
            Int b2 = Int(static_cast<unsigned long>(bound));
            b2 *= b2;
            // no divisor up to `bound`, so n < bound^2 forces primality
            if (n < b2) out.factors.emplace_back(n, 1);
            else out.cofactor = n;
        }
    }
    return out;
}

} // namespace pisotmod
