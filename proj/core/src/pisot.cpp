#include "pisotmod/pisot.hpp"

#include <algorithm>
#include <array>

#include "pisotmod/errors.hpp"
#include "pisotmod/mod_poly.hpp"

namespace pisotmod {

namespace {

int sgn(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// ---------------------------------------------------------- Schur-Cohn

/// Removes X^v, returning v (roots at the origin).
int strip_zero_roots(IntPoly& p) {
    if (p.is_zero()) return 0;
    int v = 0;
    while (p.coeff(0) == 0 && p.degree() >= 1) {
        std::vector<Int> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = IntPoly(std::move(c));
        ++v;
    }
    return v;
}

/// Count of roots in |z| < 1 by the reflection chain
///   T f = f(0) f - lc(f) reverse(f),
/// valid when every step drops the degree by exactly one with nonzero
/// constant term; the count is the number of negative partial products of
/// the chain constants. Requires f(0) != 0. nullopt flags a degenerate
/// chain.
std::optional<int> schur_cohn(IntPoly f) {
    int n = f.degree();
    if (n <= 0) return 0;
    if (f.coeff(0) == 0) return std::nullopt;
    int count = 0;
    int sign_prod = 1;
    for (int j = 0; j < n; ++j) {
        if (f.degree() != n - j) return std::nullopt;
        Int a0 = f.coeff(0);
        Int an = f.lc();
        IntPoly g = f * a0 - f.reversed() * an;
        if (g.is_zero() || g.degree() != n - j - 1) return std::nullopt;
        Int gamma = g.coeff(0);
        if (gamma == 0) return std::nullopt;
        sign_prod *= sgn(gamma);
        if (sign_prod < 0) ++count;
        // positive rescaling keeps all later chain signs intact
        f = g.primitive_part();
    }
    return count;
}

/// g(z) = (1 + a z)^n f((z + a)/(1 + a z)) cleared of denominators for
/// a = u/v: sum_i f_i (v z + u)^i (u z + v)^{n-i}. A unit-disk automorphism,
/// so inside/boundary/outside root counts are preserved (an outside root at
/// exactly v/u drops the degree, which is harmless).
IntPoly disk_automorphism(const IntPoly& f, long u, long v) {
    int n = f.degree();
    IntPoly a{u, v}; // v z + u
    IntPoly b{v, u}; // u z + v
    std::vector<IntPoly> apow(n + 1), bpow(n + 1);
    apow[0] = IntPoly{1};
    bpow[0] = IntPoly{1};
    for (int i = 1; i <= n; ++i) {
        apow[i] = apow[i - 1] * a;
        bpow[i] = bpow[i - 1] * b;
    }
    IntPoly g;
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i) == 0) continue;
        g = g + (apow[i] * bpow[n - i]) * f.coeff(i);
    }
    return g;
}

/// v^k p((u/v) z): roots scaled so that |root| < u/v becomes |root| < 1.
IntPoly scale_radius(const IntPoly& f, const Int& u, const Int& v) {
    int n = f.degree();
    std::vector<Int> c(n + 1);
    Int up = 1;
    for (int i = 0; i <= n; ++i) {
        c[i] = f.coeff(i) * up * pow(v, n - i);
        up *= u;
    }
    return IntPoly(std::move(c));
}

constexpr std::array<std::pair<long, long>, 23> kAutomorphisms{{
    {0, 1},  {1, 3},  {-1, 3}, {1, 4},  {-1, 4}, {2, 5},  {-2, 5}, {1, 2},
    {-1, 2}, {3, 7},  {-3, 7}, {2, 7},  {-2, 7}, {1, 5},  {-1, 5}, {3, 8},
    {-3, 8}, {5, 12}, {-5, 12}, {1, 7}, {-1, 7}, {4, 9},  {-4, 9},
}};

/// Unit-disk count for g via the automorphism ladder; nullopt when every
/// conjugate of the chain degenerates (reciprocal inputs do this for all a).
std::optional<int> ladder_count(IntPoly g) {
    int z0 = strip_zero_roots(g);
    if (g.degree() == 0) return z0;
    for (auto [u, v] : kAutomorphisms) {
        IntPoly h = (u == 0) ? g : disk_automorphism(g, u, v);
        int z1 = strip_zero_roots(h);
        if (h.degree() == 0) return z0 + z1;
        if (auto c = schur_cohn(h)) return z0 + z1 + *c;
    }
    return std::nullopt;
}

// ------------------------------------------------- unimodular root test

IntPoly gcd_over_q(const IntPoly& a, const IntPoly& b) {
    RatPolyXgcd x = xgcd(RatPoly(a), RatPoly(b));
    IntPoly g = x.g.primitive_over_z();
    if (!g.is_zero() && g.lc() < 0) g = -g;
    return g;
}

/// Real-root count of squarefree T in the open interval (lo, hi) by a Sturm
/// chain; endpoints must not be roots.
int sturm_count_open(const RatPoly& t_in, const Rat& lo, const Rat& hi) {
    // squarefree part
    RatPoly t = t_in;
    {
        RatPoly d{std::vector<Rat>{}};
        std::vector<Rat> dc(t.degree() > 0 ? t.degree() : 0);
        for (int i = 1; i <= t.degree(); ++i) dc[i - 1] = t.coeff(i) * Rat(i);
        d = RatPoly(std::move(dc));
        if (!d.is_zero()) {
            RatPolyXgcd x = xgcd(t, d);
            if (x.g.degree() > 0) t = divrem(t, x.g).first;
        }
    }
    std::vector<RatPoly> chain;
    chain.push_back(t);
    std::vector<Rat> dc(t.degree() > 0 ? t.degree() : 0);
    for (int i = 1; i <= t.degree(); ++i) dc[i - 1] = t.coeff(i) * Rat(i);
    chain.emplace_back(std::move(dc));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r = mod(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    auto variations = [&](const Rat& x) {
        int var = 0, last = 0;
        for (const RatPoly& p : chain) {
            if (p.is_zero()) continue;
            Rat v = p(x);
            int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++var;
            last = s;
        }
        return var;
    };
    return variations(lo) - variations(hi);
}

} // namespace

bool has_unimodular_root(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInputError("has_unimodular_root: zero polynomial");
    if (p.degree() == 0) return false;
    if (p(Int(1)) == 0 || p(Int(-1)) == 0) return true;
    IntPoly g = gcd_over_q(p, p.reversed());
    if (g.degree() == 0) return false;
    // Roots of g come in (z, 1/z) pairs with g(+-1) != 0, so g is
    // self-reciprocal of even degree.
    if (!(g == g.reversed()) || (g.degree() % 2) != 0)
        throw InvalidInputError("has_unimodular_root: unexpected non-reciprocal common part");
    int m = g.degree() / 2;
    // g(z) = z^m T(z + 1/z) with T from the Chebyshev-style basis
    // B_0 = 2, B_1 = w, B_j = w B_{j-1} - B_{j-2}.
    std::vector<IntPoly> basis(m + 1);
    basis[0] = IntPoly{2};
    if (m >= 1) basis[1] = IntPoly{0, 1};
    for (int j = 2; j <= m; ++j) basis[j] = basis[j - 1] * IntPoly{0, 1} - basis[j - 2];
    IntPoly t = IntPoly{} + IntPoly::x_power(0, g.coeff(m));
    for (int j = 1; j <= m; ++j) t = t + basis[j] * g.coeff(m + j);
    // unimodular non-real pairs <=> real roots of T in (-2, 2)
    return sturm_count_open(RatPoly(t), Rat(-2), Rat(2)) > 0;
}

int count_roots_in_disk(const IntPoly& p, const Rat& r) {
    if (p.is_zero()) throw InvalidInputError("count_roots_in_disk: zero polynomial");
    if (r <= 0) throw InvalidInputError("count_roots_in_disk: radius must be positive");
    IntPoly g = scale_radius(p, Int(r.get_num()), Int(r.get_den()));
    if (has_unimodular_root(g))
        throw BoundaryRootError("root on the circle of radius " + r.get_str());
    if (auto c = ladder_count(g)) return *c;

    // Bracket the circle with rational radii; the counts must meet because
    // no modulus equals the target radius. At degree <= 8 with 64-bit
    // coefficients, integer separation bounds put every off-circle modulus
    // at distance > 2^-1200 from 1, so the cap below loses nothing.
    std::optional<int> lo_c, hi_c;
    Int two_j = 2;
    for (int j = 1; j <= 1200; ++j, two_j *= 2) {
        if (!lo_c || !hi_c || j <= 24 || j % 8 == 0) {
            IntPoly glo = scale_radius(g, two_j - 1, two_j);
            if (auto c = ladder_count(glo)) lo_c = *c;
            IntPoly ghi = scale_radius(g, two_j + 1, two_j);
            if (auto c = ladder_count(ghi)) hi_c = *c;
        }
        if (lo_c && hi_c && *lo_c == *hi_c) return *lo_c;
    }
    throw BoundaryRootError("boundary root suspected: bracketing radii never agreed");
}

int count_roots_in_unit_disk(const IntPoly& p) { return count_roots_in_disk(p, Rat(1)); }

// --------------------------------------------------------- irreducibility

namespace {

IntPoly from_mod(const ModPoly& f) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (auto v : f.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
}

IntPoly reduce_mod_m(const IntPoly& a, const Int& m) {
    std::vector<Int> c(a.coeffs());
    for (Int& v : c) {
        v %= m;
        if (v < 0) v += m;
    }
    return IntPoly(std::move(c));
}

IntPoly reduce_sym(const IntPoly& a, const Int& m) {
    std::vector<Int> c(a.coeffs());
    Int half = m / 2;
    for (Int& v : c) {
        v %= m;
        if (v < 0) v += m;
        if (v > half) v -= m;
    }
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> div_mod_monic(const IntPoly& a, const IntPoly& b, const Int& m) {
    // b monic mod m
    std::vector<Int> rem(reduce_mod_m(a, m).coeffs());
    int db = b.degree();
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db) return {IntPoly{}, IntPoly(std::move(rem))};
    std::vector<Int> quo(da - db + 1, Int(0));
    for (int i = da; i >= db; --i) {
        Int f = rem[i] % m;
        if (f < 0) f += m;
        if (f == 0) { rem[i] = 0; continue; }
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) {
            Int t = (rem[i - db + j] - f * b.coeff(j)) % m;
            if (t < 0) t += m;
            rem[i - db + j] = t;
        }
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

struct ModXgcd {
    ModPoly s, t; // s*a + t*b = 1, deg s < deg b, deg t < deg a
};

ModXgcd mod_bezout_coprime(const ModPoly& a, const ModPoly& b) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::one(a.modulus()), s1(a.modulus(), std::vector<std::uint64_t>{});
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        ModPoly s2 = s0 - q * s1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
    }
    // r0 = gcd (constant since coprime); normalize to 1
    if (r0.degree() != 0) throw InvalidInputError("hensel: factors not coprime");
    std::uint64_t inv_c = divrem(ModPoly::one(a.modulus()), r0).first.coeff(0);
    (void)inv_c;
    ModPoly s = s0.monic(); // placeholder, fixed below
    // scale s0 so that s0*a == 1 mod b
    // r0 = s0*a + t0*b with r0 constant c: s = s0 / c
    std::uint64_t c = r0.coeff(0);
    // multiply s0 by c^{-1}
    std::vector<std::uint64_t> sc(s0.coeffs());
    // inverse via Fermat on the prime field
    auto powm = [&](std::uint64_t x, std::uint64_t e, std::uint64_t md) {
        unsigned __int128 acc = 1, base = x % md;
        while (e) {
            if (e & 1) acc = acc * base % md;
            base = base * base % md;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(acc);
    };
    std::uint64_t cinv = powm(c, a.modulus() - 2, a.modulus());
    for (auto& v : sc) v = static_cast<std::uint64_t>((unsigned __int128)v * cinv % a.modulus());
    s = ModPoly(a.modulus(), std::move(sc));
    s = mod(s, b); // deg s < deg b
    // t = (1 - s*a) / b exactly over F_q
    auto [t, rr] = divrem(ModPoly::one(a.modulus()) - s * a, b);
    if (!rr.is_zero()) throw InvalidInputError("hensel: bezout reconstruction failed");
    return {s, t};
}

/// One quadratic Hensel step capped at `target`: from f == g h (mod m),
/// s g + t h == 1 (mod m) to the same statements mod min(m^2, target).
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t,
                 const Int& m, Int& m_next, const Int& target) {
    Int m2 = m * m;
    if (m2 > target) m2 = target;
    m_next = m2;
    IntPoly e = reduce_mod_m(f - g * h, m2);
    auto [q, r] = div_mod_monic(s * e, h, m2);
    IntPoly g_new = reduce_mod_m(g + t * e + q * g, m2);
    IntPoly h_new = reduce_mod_m(h + r, m2);
    IntPoly b = reduce_mod_m(s * g_new + t * h_new - IntPoly{1}, m2);
    auto [c, d] = div_mod_monic(s * b, h_new, m2);
    IntPoly s_new = reduce_mod_m(s - d, m2);
    IntPoly t_new = reduce_mod_m(t - t * b - c * g_new, m2);
    g = std::move(g_new);
    h = std::move(h_new);
    s = std::move(s_new);
    t = std::move(t_new);
}

/// Lifts the factor list of monic f (squarefree mod q) to factors mod
/// `target` = q^e, by the factor tree.
void hensel_tree(const IntPoly& f, const std::vector<ModPoly>& facs, std::uint64_t q,
                 const Int& target, std::vector<IntPoly>& out) {
    if (facs.size() == 1) {
        out.push_back(reduce_mod_m(f, target));
        return;
    }
    size_t half = facs.size() / 2;
    std::vector<ModPoly> left(facs.begin(), facs.begin() + half);
    std::vector<ModPoly> right(facs.begin() + half, facs.end());
    ModPoly gq = left[0];
    for (size_t i = 1; i < left.size(); ++i) gq = gq * left[i];
    ModPoly hq = right[0];
    for (size_t i = 1; i < right.size(); ++i) hq = hq * right[i];
    ModXgcd bez = mod_bezout_coprime(gq, hq);

    IntPoly g = from_mod(gq), h = from_mod(hq);
    IntPoly s = from_mod(bez.s), t = from_mod(bez.t);
    Int m(static_cast<unsigned long>(q));
    while (m < target) {
        Int m_next;
        hensel_step(f, g, h, s, t, m, m_next, target);
        m = m_next;
    }
    hensel_tree(g, left, q, target, out);
    hensel_tree(h, right, q, target, out);
}

} // namespace

bool is_irreducible(const IntPoly& p) {
    if (!p.is_monic()) throw InvalidInputError("is_irreducible: monic input required");
    int k = p.degree();
    if (k < 1) throw InvalidInputError("is_irreducible: degree >= 1 required");
    if (k > kMaxDegree) throw UnsupportedInputError("is_irreducible: unsupported degree (max 8)");
    if (k == 1) return true;
    if (p.coeff(0) == 0) return false; // X divides
    Int disc = discriminant(p);
    if (disc == 0) return false; // repeated factor

    // factor-degree patterns mod several good primes
    std::vector<std::pair<std::uint64_t, ModFactorization>> fps;
    unsigned mask_all = (1u << (k + 1)) - 2; // degrees 1..k
    unsigned possible = mask_all;
    for (std::uint64_t q = 3; fps.size() < 5 && q < 3000; q += 2) {
        if (!is_prime_u64(q)) continue;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(q))) continue;
        ModFactorization fac = factor_mod(ModPoly(q, p));
        unsigned reach = 1; // bit i = degree i reachable as a subset sum
        for (const auto& [fpoly, mult] : fac.factors) {
            int d = fpoly.degree();
            for (int rep = 0; rep < mult; ++rep) { // mult is 1 here (squarefree)
                unsigned next = reach;
                for (int s = k; s >= 0; --s)
                    if (reach & (1u << s))
                        if (s + d <= k) next |= (1u << (s + d));
                reach = next;
            }
        }
        possible &= reach;
        fps.emplace_back(q, std::move(fac));
    }
    bool splittable = false;
    for (int d = 1; d <= k / 2; ++d)
        if (possible & (1u << d)) splittable = true;
    if (!splittable) return true;

    // Zassenhaus recombination over the prime with the fewest factors
    const auto* best = &fps.front();
    for (const auto& fp : fps)
        if (fp.second.factors.size() < best->second.factors.size()) best = &fp;
    std::uint64_t q = best->first;
    std::vector<ModPoly> facs;
    for (const auto& [fpoly, mult] : best->second.factors) facs.push_back(fpoly);
    if (facs.size() == 1) return true; // irreducible mod q

    // coefficient bound for any monic factor: 2^k * |p|_2
    Int norm2 = 0;
    for (const Int& c : p.coeffs()) norm2 += c * c;
    Int bound = (sqrt(norm2) + 1) * pow(Int(2), k + 1) + 1;
    Int target = 1;
    while (target <= 2 * bound) target *= Int(static_cast<unsigned long>(q));

    std::vector<IntPoly> lifted;
    hensel_tree(reduce_mod_m(p, target), facs, q, target, lifted);

    size_t tcount = lifted.size();
    for (unsigned msk = 1; msk + 1 < (1u << tcount); ++msk) {
        int d = 0;
        for (size_t i = 0; i < tcount; ++i)
            if (msk & (1u << i)) d += lifted[i].degree();
        if (d < 1 || d > k / 2) continue;
        IntPoly prod{1};
        for (size_t i = 0; i < tcount; ++i)
            if (msk & (1u << i)) prod = reduce_mod_m(prod * lifted[i], target);
        IntPoly cand = reduce_sym(prod, target);
        if (!cand.is_monic()) continue;
        auto [quo, rem] = divrem(p, cand);
        if (rem.is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------- certification

std::string to_string(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "none";
        case RejectReason::NotMonic: return "not monic";
        case RejectReason::Unsupported: return "unsupported input (degree or coefficient cap)";
        case RejectReason::DegreeZero: return "degree zero";
        case RejectReason::NotGreaterOne: return "no integer root greater than one";
        case RejectReason::NoDominantRoot: return "P(1) >= 0: dominant real root > 1 impossible";
        case RejectReason::Reducible: return "reducible over Q";
        case RejectReason::WrongRootCount: return "wrong number of roots inside the unit disk";
        case RejectReason::BoundaryRoot: return "boundary root suspected";
    }
    return "unknown";
}

CertifyResult certify_pisot(const IntPoly& p) {
    CertifyResult res;
    if (p.is_zero() || p.degree() < 1) {
        res.reason = RejectReason::DegreeZero;
        return res;
    }
    if (p.degree() > kMaxDegree) {
        res.reason = RejectReason::Unsupported;
        res.detail = "degree cap is 8";
        return res;
    }
    for (const Int& c : p.coeffs()) {
        if (mpz_sizeinbase(c.get_mpz_t(), 2) > 64) {
            res.reason = RejectReason::Unsupported;
            res.detail = "coefficient cap is 64 bits";
            return res;
        }
    }
    if (!p.is_monic()) {
        res.reason = RejectReason::NotMonic;
        return res;
    }
    int k = p.degree();
    if (k == 1) {
        Int root = -p.coeff(0);
        if (root < 2) { // zeta = 1 is not admitted
            res.reason = RejectReason::NotGreaterOne;
            return res;
        }
        res.cert = PisotCert{p, 1, Rat(0), false};
        return res;
    }
    if (p(Int(1)) >= 0) {
        res.reason = RejectReason::NoDominantRoot;
        return res;
    }
    if (!is_irreducible(p)) {
        res.reason = RejectReason::Reducible;
        return res;
    }
    int inside;
    try {
        inside = count_roots_in_unit_disk(p);
    } catch (const BoundaryRootError& e) {
        res.reason = RejectReason::BoundaryRoot;
        res.detail = e.what();
        return res;
    }
    if (inside != k - 1) {
        res.reason = RejectReason::WrongRootCount;
        res.detail = "expected " + std::to_string(k - 1) + " roots inside, found " + std::to_string(inside);
        return res;
    }

    // bisect for the conjugate radius; predicate is exact
    auto count_at = [&](const Rat& r) -> std::optional<int> {
        try {
            return count_roots_in_disk(p, r);
        } catch (const BoundaryRootError&) {
            return std::nullopt; // a root modulus equals r exactly; nudge
        }
    };
    Rat lo(0), hi(1);
    Rat width_target(1, 1 << 20);
    const std::array<Rat, 5> blend{Rat(1, 2), Rat(9, 16), Rat(7, 16), Rat(5, 8), Rat(3, 8)};
    int rounds = 0;
    while (hi == 1 || hi - lo > width_target) {
        if (++rounds > 5000)
            throw BoundaryRootError("conjugate radius bisection failed to converge");
        std::optional<int> c;
        Rat mid;
        for (const Rat& lambda : blend) {
            mid = lo + (hi - lo) * lambda;
            c = count_at(mid);
            if (c) break;
        }
        if (!c) throw BoundaryRootError("conjugate radius bisection blocked by boundary radii");
        if (*c == k - 1)
            hi = mid;
        else
            lo = mid;
    }
    Int abs0;
    mpz_abs(abs0.get_mpz_t(), p.coeff(0).get_mpz_t());
    res.cert = PisotCert{p, k, hi, abs0 == 1};
    return res;
}

PisotCert certify_pisot_checked(const IntPoly& p) {
    CertifyResult r = certify_pisot(p);
    if (!r.accepted())
        throw InvalidInputError("not a Pisot polynomial: " + to_string(r.reason) +
                                (r.detail.empty() ? "" : " (" + r.detail + ")"));
    return *r.cert;
}

std::pair<PisotCert, long> scaled_power_pisot(const PisotCert& base, const Int& N) {
    if (N < 1) throw InvalidInputError("scaled_power_pisot: N >= 1 required");
    const IntPoly& p = base.poly;
    for (long L = 1; L <= 100000; ++L) {
        IntPoly xl = mod(IntPoly::x_power(static_cast<int>(L)), p);
        RatPoly g = RatPoly(xl * N);
        RatPoly cp = char_poly_of_element(p, g);
        if (!cp.is_integral()) continue; // cannot happen; power sums are integers
        std::vector<Int> c;
        c.reserve(cp.coeffs().size());
        for (const Rat& v : cp.coeffs()) c.emplace_back(v.get_num());
        CertifyResult res = certify_pisot(IntPoly(std::move(c)));
        if (res.accepted()) return {*res.cert, L};
    }
    throw InvalidInputError("scaled_power_pisot: no Pisot power found (should be unreachable)");
}

} // namespace pisotmod
