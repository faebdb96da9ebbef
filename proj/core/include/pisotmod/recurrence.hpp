/**
 * The integer power-sum sequence d_n attached to a certified Pisot
 * polynomial, the nearest-integer reading of zeta^n, and eventual-period
 * analysis of weighted reductions mod M.
 *
 * d_n is the sum of the n-th powers of all roots; it satisfies the linear
 * recurrence given by the polynomial coefficients, and d_n equals the
 * nearest integer to zeta^n once (k-1) * r^n < 1/2, where r is the
 * certified conjugate radius. That threshold index n0 is an artifact
 * convention (the crude uniform bound, one radius for all small roots); it
 * only gates the `certified` flag, never the value.
 */
#ifndef PISOTMOD_RECURRENCE_HPP
#define PISOTMOD_RECURRENCE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "pisotmod/pisot.hpp"

namespace pisotmod {

inline constexpr std::uint64_t kDefaultStateBudget = 10000000ULL;

/// Reads PISOT_STATE_BUDGET from the environment, else the default.
std::uint64_t state_budget_from_env();

class PowerSumSeq {
public:
    explicit PowerSumSeq(PisotCert cert);

    const PisotCert& cert() const { return cert_; }
    int order() const { return cert_.degree; }
    /// d_0 .. d_{k-1}, bootstrapped by Newton's identities.
    std::vector<Int> initial() const;

    /// Exact d_n. Thread-safe; memoized behind a lock.
    Int at(std::size_t n) const;

    /// Least n with (k-1) * r^n < 1/2.
    std::size_t certified_index() const { return n0_; }

private:
    PisotCert cert_;
    std::size_t n0_;
    struct Memo;
    std::shared_ptr<Memo> memo_;
};

PowerSumSeq power_sums(const PisotCert& cert);
Int extend(const PowerSumSeq& seq, std::size_t n);

struct NearestInteger {
    Int value;
    bool certified;
};
/// d_n together with the flag n >= n0.
NearestInteger nearest_integer_power(const PowerSumSeq& seq, std::size_t n);

struct ModularOrbit {
    Int modulus;
    std::size_t preperiod = 0;           // rho
    std::size_t period = 1;              // pi
    std::vector<std::uint64_t> prefix;   // s_0 .. s_{rho-1}
    std::vector<std::uint64_t> cycle;    // s_rho .. s_{rho+pi-1}

    std::uint64_t value_at(std::size_t n) const {
        if (n < preperiod) return prefix[n];
        return cycle[(n - preperiod) % period];
    }
};

/// Orbit of s_n = sum_i weights[i] * d_{n+i} mod M. Preperiod and period are
/// those of the underlying k-tuple d-state (minimal for the state sequence);
/// the weighted values are derived from that single source of truth.
/// Budget counts visited states; exceeding it raises ResourceLimitError.
ModularOrbit modular_orbit(const PowerSumSeq& seq, const std::vector<Int>& weights, const Int& M,
                           std::uint64_t budget = state_budget_from_env());

/// True iff every residue in the cycle is zero (prefix irrelevant).
bool eventually_zero(const ModularOrbit& orbit);

namespace detail {

/// Streams the d-state rows (d_n, ..., d_{n+k-1}) mod M for n over exactly
/// one full cycle [rho, rho+pi), without materializing the orbit.
/// `on_row` sees each row; returns (rho, pi).
std::pair<std::size_t, std::size_t> scan_state_cycle(
    const PowerSumSeq& seq, std::uint64_t M, std::uint64_t budget,
    const std::function<void(const std::vector<std::uint64_t>&)>& on_row);

} // namespace detail

} // namespace pisotmod

#endif
