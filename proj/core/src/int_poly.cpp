#include "pisotmod/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace pisotmod {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::x_power(int n, Int scale) {
    std::vector<Int> c(n + 1, Int(0));
    c[n] = std::move(scale);
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw InvalidInputError("leading coefficient of zero polynomial");
    return c_.back();
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& v : c_) g = pisotmod::gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    std::vector<Int> c(c_);
    for (Int& v : c) v /= g;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return IntPoly(std::move(c));
}

Int IntPoly::operator()(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rat IntPoly::operator()(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_);
    for (Int& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> c(c_);
    for (Int& v : c) v *= s;
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> divrem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InvalidInputError("division by zero polynomial");
    if (!b.is_monic()) throw InvalidInputError("divrem requires a monic divisor");
    std::vector<Int> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {IntPoly{}, a};
    std::vector<Int> quo(a.degree() - db + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly mod(const IntPoly& a, const IntPoly& b) { return divrem(a, b).second; }

namespace {

std::string term_str(const std::string& coeff, int deg, const std::string& var, bool first) {
    std::string s;
    std::string c = coeff;
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first)
        s += neg ? "-" : "";
    else
        s += neg ? " - " : " + ";
    bool unit = (c == "1");
    if (deg == 0) {
        s += c;
    } else {
        if (!unit) s += c + "*";
        s += var;
        if (deg > 1) s += "^" + std::to_string(deg);
    }
    return s;
}

} // namespace

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        s += term_str(c_[i].get_str(), i, var, first);
        first = false;
    }
    return s;
}

// ------------------------------------------------------------- resultant

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(a.coeffs());
    int da = a.degree(), db = b.degree();
    const Int& lb = b.lc();
    for (int i = da; i >= db; --i) {
        Int head = r[i];
        for (int j = 0; j < i; ++j) r[j] *= lb;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= head * b.coeff(j);
        r[i] = 0;
    }
    return IntPoly(std::move(r));
}

} // namespace

Int resultant(const IntPoly& a_in, const IntPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero())
        throw InvalidInputError("resultant requires nonzero polynomials");
    IntPoly a = a_in, b = b_in;
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        // Res(a, c) = c^deg(a)
        return Int(sign) * pow(b.lc(), a.degree());
    }
    Int ca = a.content(), cb = b.content();
    a = a.primitive_part();
    b = b.primitive_part();
    Int scale = pow(ca, b.degree()) * pow(cb, a.degree());

    Int g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = prem(a, b);
        if (r.is_zero()) return 0; // common factor
        a = b;
        Int denom = g * pow(h, delta);
        {
            std::vector<Int> c(r.coeffs());
            for (Int& v : c) v /= denom; // exact by subresultant theory
            b = IntPoly(std::move(c));
        }
        g = a.lc();
        // h = h^(1-delta) * g^delta, kept exact
        if (delta == 0) {
            // h unchanged
        } else {
            Int gnum = pow(g, delta);
            Int hden = pow(h, delta - 1);
            h = gnum / hden;
        }
        if (b.degree() == 0) {
            // Res = s * t * h^(1-deg a) * lc(b)^(deg a)
            Int num = pow(b.lc(), a.degree());
            Int den = pow(h, a.degree() - 1);
            return Int(sign) * scale * (num / den);
        }
    }
}

Int discriminant(const IntPoly& p) {
    if (p.degree() < 1) throw InvalidInputError("discriminant requires degree >= 1");
    if (p.degree() == 1) return 1;
    Int res = resultant(p, p.derivative());
    int k = p.degree();
    int s = ((static_cast<long>(k) * (k - 1) / 2) % 2 == 0) ? 1 : -1;
    Int num = Int(s) * res;
    return num / p.lc(); // exact
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (Rat& v : c_) v.canonicalize();
    normalize();
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) c_.emplace_back(v);
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::lc() const {
    if (c_.empty()) throw InvalidInputError("leading coefficient of zero polynomial");
    return c_.back();
}

bool RatPoly::is_integral() const {
    for (const Rat& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> c(c_);
    for (Rat& v : c) v = -v;
    return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (Rat& v : c) v *= s;
    return RatPoly(std::move(c));
}

IntPoly RatPoly::primitive_over_z() const {
    if (is_zero()) return {};
    Int den = 1;
    for (const Rat& v : c_) den = lcm(den, v.get_den());
    std::vector<Int> c;
    c.reserve(c_.size());
    for (const Rat& v : c_) c.emplace_back(v.get_num() * (den / v.get_den()));
    return IntPoly(std::move(c)).primitive_part();
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        s += term_str(c_[i].get_str(), i, var, first);
        first = false;
    }
    return s;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw InvalidInputError("division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
    Rat inv_lb = 1 / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        Rat q = rem[i] * inv_lb;
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly mod(const RatPoly& a, const RatPoly& b) { return divrem(a, b).second; }

RatPolyXgcd xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0{std::vector<Rat>{Rat(1)}}, u1{};
    RatPoly v0{}, v1{std::vector<Rat>{Rat(1)}};
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat s = 1 / r0.lc();
    return {r0 * s, u0 * s, v0 * s};
}

// ----------------------------------------------------------- char_poly

namespace {

// Sums of principal minors e_j of a k x k rational matrix, by exact
// elimination on each of the 2^k principal submatrices. k <= 8 keeps this
// trivial, and char(Y) = Y^k - e1 Y^{k-1} + e2 Y^{k-2} - ... follows.
std::vector<Rat> principal_minor_sums(const std::vector<std::vector<Rat>>& m) {
    int k = static_cast<int>(m.size());
    int full = 1 << k;
    std::vector<Rat> e(k + 1, Rat(0));
    e[0] = 1;
    for (int s = 1; s < full; ++s) {
        int idx[8], n = 0;
        for (int j = 0; j < k; ++j)
            if (s & (1 << j)) idx[n++] = j;
        // exact determinant of the n x n principal submatrix via rational
        // Gaussian elimination with pivoting
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a[r][c] = m[idx[r]][idx[c]];
        Rat det = 1;
        bool zero = false;
        for (int col = 0; col < n && !zero; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (a[r][col] != 0) { piv = r; break; }
            if (piv < 0) { zero = true; break; }
            if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
            det *= a[col][col];
            Rat inv = 1 / a[col][col];
            for (int r = col + 1; r < n; ++r) {
                Rat f = a[r][col] * inv;
                if (f == 0) continue;
                for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            }
        }
        e[n] += zero ? Rat(0) : det;
    }
    return e;
}

} // namespace

RatPoly char_poly_of_element(const IntPoly& p, const RatPoly& g) {
    if (!p.is_monic()) throw InvalidInputError("char_poly_of_element: p must be monic");
    int k = p.degree();
    if (k < 1) throw InvalidInputError("char_poly_of_element: deg(p) >= 1 required");
    if (g.degree() >= k) throw InvalidInputError("char_poly_of_element: deg(g) < deg(p) required");

    // columns of M: coordinates of gamma * zeta^j mod p
    RatPoly pq(p);
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k, Rat(0)));
    RatPoly cur = mod(g, pq);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) m[i][j] = cur.coeff(i);
        if (j + 1 < k) {
            // multiply by X mod p
            std::vector<Rat> shifted(cur.coeffs().size() + 1, Rat(0));
            for (size_t t = 0; t < cur.coeffs().size(); ++t) shifted[t + 1] = cur.coeff(static_cast<int>(t));
            cur = mod(RatPoly(std::move(shifted)), pq);
        }
    }

    std::vector<Rat> e = principal_minor_sums(m);
    // char(Y) = Y^k - e1 Y^{k-1} + e2 Y^{k-2} - ...
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    for (int j = 1; j <= k; ++j) {
        Rat v = e[j];
        if (j & 1) v = -v;
        c[k - j] = v;
    }
    return RatPoly(std::move(c));
}

bool is_algebraic_integer(const IntPoly& p, const RatPoly& g) {
    return char_poly_of_element(p, g).is_integral();
}

IntPoly monicize_mod(const IntPoly& p, const IntPoly& q_in) {
    if (!p.is_monic()) throw InvalidInputError("monicize_mod: p must be monic");
    int k = p.degree();
    int r = q_in.degree();
    if (q_in.is_zero() || r >= k) throw InvalidInputError("monicize_mod: need 0 <= deg(q_in) < deg(p)");
    if (q_in.content() != 1) throw InvalidInputError("monicize_mod: content(q_in) must be 1");

    // c_t = coefficient of X^{k-1} in X^t * q_in mod p, t = k-1-r, ..., k-1.
    // gcd of these is 1 (content-1 hypothesis), so Bezout gives R.
    int t0 = k - 1 - r;
    IntPoly cur = mod(q_in * IntPoly::x_power(t0), p);
    std::vector<Int> cs;
    std::vector<int> ts;
    Int g = 0;
    int t = t0;
    while (true) {
        cs.push_back(cur.coeff(k - 1));
        ts.push_back(t);
        g = pisotmod::gcd(g, cs.back());
        if (g == 1) break;
        if (t >= 2 * k) // r+1 terms suffice in theory; generous cap
            throw InvalidInputError("monicize_mod: gcd of head coefficients never reached 1");
        cur = mod(cur * IntPoly::x_power(1), p);
        ++t;
    }
    // Extended gcd over the collected c_t: find d_t with sum d_t c_t = 1.
    std::vector<Int> d(cs.size(), Int(0));
    Int acc = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (acc == 0) {
            if (cs[i] == 0) continue;
            d[i] = (cs[i] > 0) ? 1 : -1;
            acc = cs[i] * d[i];
            continue;
        }
        Int gg, u, v;
        mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), acc.get_mpz_t(), cs[i].get_mpz_t());
        for (size_t j = 0; j < i; ++j) d[j] *= u;
        d[i] = v;
        acc = gg;
        if (acc == 1) break;
    }
    // acc == 1 guaranteed by the content hypothesis
    IntPoly result;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (d[i] == 0) continue;
        result = result + IntPoly::x_power(ts[i], d[i]);
    }
    return result;
}

} // namespace pisotmod
