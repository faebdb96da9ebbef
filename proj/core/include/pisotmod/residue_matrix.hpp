/**
 * Row reduction over Z/q^m with explicit elementary-divisor bookkeeping.
 *
 * The Howell form is the canonical row-reduced presentation of a submodule
 * of (Z/q^m)^k: pivots are powers of q with unit part normalized to 1,
 * entries above a pivot are reduced, and the span is closed under the
 * annihilator rows q^{m-v} * row. Two generating sets span the same module
 * iff their Howell forms are identical.
 */
#ifndef PISOTMOD_RESIDUE_MATRIX_HPP
#define PISOTMOD_RESIDUE_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "pisotmod/numeric.hpp"

namespace pisotmod {

struct PrimePowerRing {
    std::uint64_t q;       // prime
    unsigned m;            // exponent
    std::uint64_t modulus; // q^m, must fit well below 2^63

    PrimePowerRing(std::uint64_t q_, unsigned m_);

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    /// Valuation of a in q; valuation(0) == m by convention.
    unsigned val(std::uint64_t a) const;
    /// Inverse of a unit (gcd(a, q) = 1).
    std::uint64_t unit_inv(std::uint64_t a) const;
};

/// Maintains the Howell form of the row space of everything inserted.
/// Rows have fixed width k; memory stays O(k^2) no matter how many rows
/// stream through.
class HowellAccumulator {
public:
    HowellAccumulator(PrimePowerRing ring, int width);

    void add_row(std::vector<std::uint64_t> row);
    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
    const PrimePowerRing& ring() const { return ring_; }
    int width() const { return width_; }

private:
    PrimePowerRing ring_;
    int width_;
    std::vector<std::vector<std::uint64_t>> rows_; // sorted by pivot column
    void reduce_and_insert(std::vector<std::uint64_t> row, std::vector<std::vector<std::uint64_t>>& pending);
};

/// Canonical Howell basis of the span of `rows` in (Z/q^m)^k.
std::vector<std::vector<std::uint64_t>> howell_form(const PrimePowerRing& ring, int width,
                                                    const std::vector<std::vector<std::uint64_t>>& rows);

/// Generators of {x : A x == 0 over Z/q^m}, returned in Howell form.
/// Uses an integer Smith normal form of the lifted matrix, so the
/// elementary divisors gcd(s_i, q^m) are explicit.
std::vector<std::vector<std::uint64_t>> kernel_mod_prime_power(const PrimePowerRing& ring,
                                                               const std::vector<std::vector<std::uint64_t>>& a,
                                                               int width);

} // namespace pisotmod

#endif
