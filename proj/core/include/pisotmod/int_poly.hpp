/**
 * Dense exact polynomials over Z and Q.
 *
 * Coefficient order is constant-first throughout: coeff(i) multiplies X^i.
 * The zero polynomial is the empty coefficient sequence with degree() == -1.
 */
#ifndef PISOTMOD_INT_POLY_HPP
#define PISOTMOD_INT_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pisotmod/numeric.hpp"

namespace pisotmod {

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly x_power(int n, Int scale = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& lc() const;
    Int coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    Int content() const;           // gcd of coefficients, >= 0; 0 for the zero poly
    IntPoly primitive_part() const;
    IntPoly derivative() const;
    /// X^deg * p(1/X): the coefficient sequence reversed (zero roots dropped).
    IntPoly reversed() const;

    Int operator()(const Int& x) const;
    Rat operator()(const Rat& x) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator*(const Int& s) const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    std::string str(const std::string& var = "X") const;

private:
    std::vector<Int> c_;
    void normalize();
};

/// Quotient and remainder by a monic divisor; deg(remainder) < deg(b).
std::pair<IntPoly, IntPoly> divrem(const IntPoly& a, const IntPoly& b);
IntPoly mod(const IntPoly& a, const IntPoly& b);

/// Resultant by the fraction-free subresultant remainder sequence.
/// Res(a,b) = 0 iff a and b share a root. Inputs must be nonzero.
Int resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^{k(k-1)/2} Res(p, p') / lc(p), for deg(p) >= 1.
Int discriminant(const IntPoly& p);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(const IntPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lc() const;

    bool is_integral() const; // all denominators 1

    Rat operator()(const Rat& x) const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator*(const Rat& s) const;
    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

    /// Numerator primitive part over Z (clears denominators, strips content).
    IntPoly primitive_over_z() const;

    std::string str(const std::string& var = "X") const;

private:
    std::vector<Rat> c_;
    void normalize();
};

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
RatPoly mod(const RatPoly& a, const RatPoly& b);

/// g = gcd(a,b) monic, plus u,v with u*a + v*b = g.
struct RatPolyXgcd {
    RatPoly g, u, v;
};
RatPolyXgcd xgcd(const RatPoly& a, const RatPoly& b);

/// Characteristic polynomial (monic in Y, degree k = deg p) of gamma = g(zeta)
/// where zeta is a root of the monic polynomial p and deg(g) < k. Computed
/// from the multiplication-by-gamma matrix in the power basis with a
/// division-free determinant expansion.
RatPoly char_poly_of_element(const IntPoly& p, const RatPoly& g);

/// True iff char_poly_of_element(p, g) has integer coefficients.
bool is_algebraic_integer(const IntPoly& p, const RatPoly& g);

/// For monic p of degree k and q_in of degree r < k with content 1, a
/// polynomial R such that (q_in * R) mod p has coefficient 1 at X^{k-1}.
IntPoly monicize_mod(const IntPoly& p, const IntPoly& q_in);

} // namespace pisotmod

#endif
