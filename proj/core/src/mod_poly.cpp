#include "pisotmod/mod_poly.hpp"

#include <algorithm>

namespace pisotmod {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 q) { return powmod_u64(a % q, q - 2, q); }

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

ModPoly::ModPoly(u64 q, std::vector<u64> coeffs) : q_(q), c_(std::move(coeffs)) {
    if (q_ < 2 || !is_prime_u64(q_)) throw InvalidInputError("ModPoly: modulus must be a word-size prime");
    for (u64& v : c_) v %= q_;
    normalize();
}

ModPoly::ModPoly(u64 q, const IntPoly& p) : q_(q) {
    if (q_ < 2 || !is_prime_u64(q_)) throw InvalidInputError("ModPoly: modulus must be a word-size prime");
    c_.reserve(p.coeffs().size());
    Int m(static_cast<unsigned long>(q));
    for (const Int& v : p.coeffs()) {
        Int r = v % m;
        if (r < 0) r += m;
        c_.push_back(r.get_ui());
    }
    normalize();
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void ModPoly::check_compatible(const ModPoly& other) const {
    if (q_ != other.q_) throw InvalidInputError("ModPoly: modulus mismatch");
}

u64 ModPoly::lc() const {
    if (c_.empty()) throw InvalidInputError("leading coefficient of zero polynomial");
    return c_.back();
}

ModPoly ModPoly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    u64 inv = invmod(c_.back(), q_);
    std::vector<u64> c(c_);
    for (u64& v : c) v = mulmod(v, inv, q_);
    return ModPoly(q_, std::move(c));
}

ModPoly ModPoly::derivative() const {
    if (degree() < 1) return ModPoly(q_, std::vector<u64>{});
    std::vector<u64> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % q_, q_);
    return ModPoly(q_, std::move(c));
}

u64 ModPoly::operator()(u64 x) const {
    u64 r = 0;
    x %= q_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mulmod(r, x, q_) + *it) % q_;
    return r;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check_compatible(b);
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + b.c_[i]) % a.q_;
    return ModPoly(a.q_, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    a.check_compatible(b);
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + a.q_ - b.c_[i]) % a.q_;
    return ModPoly(a.q_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.q_, std::vector<u64>{});
    std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = (c[i + j] + (u128)a.c_[i] * b.c_[j]) % a.q_;
    }
    return ModPoly(a.q_, std::move(c));
}

bool operator<(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::string ModPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        std::string coeff = std::to_string(c_[i]);
        if (!first) s += " + ";
        if (i == 0) {
            s += coeff;
        } else {
            if (c_[i] != 1) s += coeff + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        first = false;
    }
    return s;
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
    a.check_compatible(b);
    if (b.is_zero()) throw InvalidInputError("division by zero polynomial");
    u64 q = a.modulus();
    std::vector<u64> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {ModPoly(q, std::vector<u64>{}), a};
    std::vector<u64> quo(a.degree() - db + 1, 0);
    u64 inv_lb = invmod(b.lc(), q);
    for (int i = a.degree(); i >= db; --i) {
        u64 f = mulmod(rem[i], inv_lb, q);
        if (f == 0) continue;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) {
            u64 sub = mulmod(f, b.coeff(j), q);
            rem[i - db + j] = (rem[i - db + j] + q - sub) % q;
        }
    }
    return {ModPoly(q, std::move(quo)), ModPoly(q, std::move(rem))};
}

ModPoly mod(const ModPoly& a, const ModPoly& b) { return divrem(a, b).second; }

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    a.check_compatible(b);
    ModPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        ModPoly r = mod(r0, r1);
        r0 = r1;
        r1 = r;
    }
    return r0.monic();
}

ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& f) {
    ModPoly result = ModPoly::one(f.modulus());
    ModPoly b = mod(base, f);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = mod(result * result, f);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(result * b, f);
    }
    return result;
}

ModPoly pow_x_mod(const Int& e, const ModPoly& f) { return pow_mod(ModPoly::x(f.modulus()), e, f); }

ModPoly ModFactorization::expand(u64 q) const {
    ModPoly r(q, std::vector<u64>{unit});
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) r = r * f;
    return r;
}

namespace {

// Squarefree decomposition over F_q; returns (squarefree monic part, multiplicity).
// Handles the vanishing-derivative case p(X) = s(X^q) via the Frobenius
// root s~(X) with the same coefficients, since c^q = c over the prime field.
void squarefree_split(const ModPoly& p, int outer_mult,
                      std::vector<std::pair<ModPoly, int>>& out) {
    u64 q = p.modulus();
    if (p.degree() < 1) return;
    ModPoly d = p.derivative();
    if (d.is_zero()) {
        // p = s(X^q): take the q-th root and recurse with multiplicity * q
        std::vector<u64> s;
        for (int i = 0; i <= p.degree(); i += static_cast<int>(q)) s.push_back(p.coeff(i));
        squarefree_split(ModPoly(q, std::move(s)), outer_mult * static_cast<int>(q), out);
        return;
    }
    // Yun-style loop
    ModPoly g = mod_gcd(p, d);
    ModPoly w = divrem(p, g).first; // product of squarefree factors with mult not divisible by q
    int i = 1;
    while (!w.is_one()) {
        ModPoly y = mod_gcd(w, g);
        ModPoly part = divrem(w, y).first; // factors of exact multiplicity i
        if (part.degree() >= 1) out.emplace_back(part.monic(), outer_mult * i);
        g = divrem(g, y).first;
        w = y;
        ++i;
    }
    if (g.degree() >= 1) squarefree_split(g, outer_mult, out); // leftover has derivative issues again
}

// Distinct-degree split of a squarefree monic f: returns (product, degree d).
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f_in) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly f = f_in;
    u64 q = f.modulus();
    ModPoly h = ModPoly::x(q); // X^{q^d} mod f, iterated
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (f.degree() < 2 * d) {
            out.emplace_back(f, f.degree());
            break;
        }
        h = pow_mod(h, Int(static_cast<unsigned long>(q)), f);
        ModPoly g = mod_gcd(f, h - ModPoly::x(q));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divrem(f, g).first;
            h = mod(h, f);
        }
    }
    return out;
}

// Equal-degree split (Cantor-Zassenhaus) of a monic squarefree product of
// irreducibles all of degree d, driven by a deterministic counter sequence.
void equal_degree(const ModPoly& f, int d, u64 seed, u64& counter,
                  std::vector<ModPoly>& out) {
    u64 q = f.modulus();
    int n = f.degree();
    if (n == d) {
        out.push_back(f.monic());
        return;
    }
    while (true) {
        // deterministic trial element of degree < n
        std::vector<u64> tc(static_cast<size_t>(n), 0);
        u64 state = splitmix64(seed ^ (counter * 0xd1342543de82ef95ULL));
        ++counter;
        for (auto& v : tc) {
            state = splitmix64(state);
            v = state % q;
        }
        ModPoly t(q, std::move(tc));
        if (t.is_zero()) continue;
        ModPoly g = mod_gcd(f, t);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, d, seed, counter, out);
            equal_degree(divrem(f, g).first, d, seed, counter, out);
            return;
        }
        ModPoly v;
        if (q == 2) {
            // trace map over F_{2^d}: t + t^2 + t^4 + ... + t^{2^{d-1}}
            ModPoly acc = mod(t, f);
            ModPoly cur = acc;
            for (int i = 1; i < d; ++i) {
                cur = mod(cur * cur, f);
                acc = acc + cur;
            }
            v = acc;
        } else {
            Int e = pow(Int(static_cast<unsigned long>(q)), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            v = pow_mod(t, e, f) - ModPoly::one(q);
        }
        g = mod_gcd(f, v);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, d, seed, counter, out);
            equal_degree(divrem(f, g).first, d, seed, counter, out);
            return;
        }
    }
}

} // namespace

ModFactorization factor_mod(const ModPoly& p, u64 seed) {
    if (p.is_zero()) throw InvalidInputError("factor_mod: zero polynomial");
    ModFactorization out;
    out.unit = p.lc();
    if (p.degree() == 0) return out;

    std::vector<std::pair<ModPoly, int>> sqfree;
    squarefree_split(p.monic(), 1, sqfree);

    u64 counter = 0;
    for (const auto& [part, mult] : sqfree) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<ModPoly> irr;
            equal_degree(prod, d, seed, counter, irr);
            for (ModPoly& f : irr) out.factors.emplace_back(std::move(f), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
                  if (a.first < b.first) return true;
                  if (b.first < a.first) return false;
                  return a.second < b.second;
              });
    return out;
}

ModPoly compute_R(const ModPoly& p_mod, u64 seed) {
    if (!p_mod.is_monic())
        throw InvalidInputError("compute_R: input must be the reduction of a monic polynomial");
    u64 q = p_mod.modulus();
    ModFactorization fac = factor_mod(p_mod, seed);
    ModPoly r = ModPoly::one(q);
    const ModPoly x = ModPoly::x(q);
    for (const auto& [f, mult] : fac.factors) {
        if (static_cast<u64>(mult) % q == 0) continue; // multiplicity divisible by q: dropped
        if (f == x) continue;                          // the M(X) = X division
        r = r * f;
    }
    return r;
}

bool divides_mod(const ModPoly& r, const ModPoly& s) {
    r.check_compatible(s);
    if (r.is_zero()) throw InvalidInputError("divides_mod: zero divisor");
    return mod(s, r).is_zero();
}

} // namespace pisotmod
