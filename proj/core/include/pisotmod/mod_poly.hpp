/**
 * Polynomials over the prime field with q elements, complete factorization,
 * and the divisor polynomial attached to a reduced Pisot polynomial.
 *
 * Moduli are word-size primes. Roots in extension fields are never
 * materialized: a degree-h irreducible factor stands for its h conjugate
 * roots in the field with q^h elements, which is all the structure the
 * divisor-polynomial computation needs (the factors are separable, so
 * grouping roots by irreducible factor loses nothing).
 */
#ifndef PISOTMOD_MOD_POLY_HPP
#define PISOTMOD_MOD_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pisotmod/int_poly.hpp"
#include "pisotmod/numeric.hpp"

namespace pisotmod {

class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::uint64_t q, std::vector<std::uint64_t> coeffs);
    ModPoly(std::uint64_t q, const IntPoly& p); // reduce an integer polynomial mod q

    static ModPoly one(std::uint64_t q) { return ModPoly(q, std::vector<std::uint64_t>{1}); }
    static ModPoly x(std::uint64_t q) { return ModPoly(q, std::vector<std::uint64_t>{0, 1}); }

    std::uint64_t modulus() const { return q_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint64_t coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t lc() const;

    ModPoly monic() const;
    ModPoly derivative() const;
    std::uint64_t operator()(std::uint64_t x) const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) = default;
    // strict weak order for canonical sorting of factor lists
    friend bool operator<(const ModPoly& a, const ModPoly& b);

    std::string str(const std::string& var = "X") const;

private:
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> c_;
    void normalize();
    void check_compatible(const ModPoly& other) const;
};

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);
ModPoly mod(const ModPoly& a, const ModPoly& b);

/// Monic gcd; zero polynomial iff both inputs are zero.
ModPoly mod_gcd(const ModPoly& a, const ModPoly& b);

/// X^e mod f, with e given in bits (e may be q^d sized).
ModPoly pow_x_mod(const Int& e, const ModPoly& f);
ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& f);

struct ModFactorization {
    std::uint64_t unit = 1;
    std::vector<std::pair<ModPoly, int>> factors; // (monic irreducible, multiplicity)
    ModPoly expand(std::uint64_t q) const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x9e3779b97f4a7c15ULL;

/// Complete factorization: squarefree split (including the char-q case
/// p(X) = s(X^q)), distinct-degree split, then equal-degree split driven by
/// a counter-based trial sequence from `seed`. Factors come out sorted, so
/// the result does not depend on the seed.
ModFactorization factor_mod(const ModPoly& p, std::uint64_t seed = kDefaultFactorSeed);

/// The divisor polynomial of a reduced monic integer polynomial: product of
/// the distinct irreducible factors whose multiplicity is not divisible by
/// q, taken once each, with a single factor X removed when present. Monic;
/// may be 1, never 0.
ModPoly compute_R(const ModPoly& p_mod, std::uint64_t seed = kDefaultFactorSeed);

/// True iff r divides s (r nonzero, same modulus).
bool divides_mod(const ModPoly& r, const ModPoly& s);

} // namespace pisotmod

#endif
