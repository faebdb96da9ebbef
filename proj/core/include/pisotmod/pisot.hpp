/**
 * Exact certification of Pisot polynomials.
 *
 * Everything here is decided in exact arithmetic: root counts come from
 * Schur-Cohn reflection chains (with disk-automorphism and radius
 * perturbation to escape the degenerate steps that unit polynomials always
 * trigger), unit-circle roots are detected by a Sturm count on the
 * self-reciprocal part, and irreducibility is settled by factor
 * reconstruction from a lifted modular factorization. Floating point never
 * decides anything.
 */
#ifndef PISOTMOD_PISOT_HPP
#define PISOTMOD_PISOT_HPP

#include <optional>
#include <string>
#include <utility>

#include "pisotmod/int_poly.hpp"

namespace pisotmod {

inline constexpr int kMaxDegree = 8;

struct PisotCert {
    IntPoly poly;          // monic irreducible
    int degree = 0;        // k
    Rat conjugate_radius;  // rational r in (0,1); all non-dominant roots have modulus < r
    bool is_unit = false;  // |P(0)| == 1
};

/// Exact number of roots with modulus < 1. Throws BoundaryRootError when a
/// root cannot be separated from the unit circle (genuine circle roots, or
/// the input defeats every perturbation).
int count_roots_in_unit_disk(const IntPoly& p);

/// Exact number of roots with modulus < r, r > 0 rational; same error
/// contract.
int count_roots_in_disk(const IntPoly& p, const Rat& r);

/// True iff p has a root on the unit circle. Exact (Sturm count on the
/// reciprocal transform of gcd(p, reverse(p))).
bool has_unimodular_root(const IntPoly& p);

/// Irreducibility over Q for monic p of degree <= 8. Mod-prime factor
/// patterns prune; a Hensel-lifted factorization with Mignotte-bounded
/// subset recombination settles the rest. Complete at this scale.
bool is_irreducible(const IntPoly& p);

enum class RejectReason {
    None,
    NotMonic,
    Unsupported,    // degree > 8 or coefficients beyond 64 bits
    DegreeZero,
    NotGreaterOne,  // k = 1 with constant root <= 1 (zeta = 1 is rejected)
    NoDominantRoot, // P(1) >= 0
    Reducible,
    WrongRootCount,
    BoundaryRoot,
};

std::string to_string(RejectReason r);

struct CertifyResult {
    std::optional<PisotCert> cert;
    RejectReason reason = RejectReason::None;
    std::string detail;
    bool accepted() const { return cert.has_value(); }
};

/// Full certificate or a structured rejection. The conjugate radius is
/// found by bisection on r with the exact disk count as predicate, to
/// interval width 2^-20.
CertifyResult certify_pisot(const IntPoly& p);

/// certify_pisot that throws InvalidInputError on rejection.
PisotCert certify_pisot_checked(const IntPoly& p);

/// Minimal L >= 1 such that N * zeta^L is again a Pisot number, with its
/// certificate. The minimal polynomial is the characteristic polynomial of
/// N * X^L mod P, integral by the power-sum argument.
std::pair<PisotCert, long> scaled_power_pisot(const PisotCert& base, const Int& N);

} // namespace pisotmod

#endif
