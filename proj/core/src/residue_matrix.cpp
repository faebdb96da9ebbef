#include "pisotmod/residue_matrix.hpp"

#include <algorithm>

namespace pisotmod {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
} // namespace

PrimePowerRing::PrimePowerRing(u64 q_, unsigned m_) : q(q_), m(m_) {
    if (!is_prime_u64(q)) throw InvalidInputError("PrimePowerRing: q must be prime");
    if (m == 0) throw InvalidInputError("PrimePowerRing: exponent must be >= 1");
    modulus = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (modulus > (1ULL << 62) / q) throw UnsupportedInputError("PrimePowerRing: q^m exceeds word size");
        modulus *= q;
    }
}

u64 PrimePowerRing::mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % modulus); }

u64 PrimePowerRing::sub(u64 a, u64 b) const { return (a + modulus - b) % modulus; }

unsigned PrimePowerRing::val(u64 a) const {
    if (a == 0) return m;
    unsigned v = 0;
    while (a % q == 0) {
        a /= q;
        ++v;
    }
    return v;
}

u64 PrimePowerRing::unit_inv(u64 a) const {
    // extended gcd; a is a unit mod q^m
    long long t0 = 0, t1 = 1;
    long long r0 = static_cast<long long>(modulus), r1 = static_cast<long long>(a % modulus);
    while (r1 != 0) {
        long long qq = r0 / r1;
        long long tmp = r0 - qq * r1;
        r0 = r1; r1 = tmp;
        tmp = t0 - qq * t1;
        t0 = t1; t1 = tmp;
    }
    if (r0 != 1) throw InvalidInputError("unit_inv: not a unit");
    long long t = t0 % static_cast<long long>(modulus);
    if (t < 0) t += static_cast<long long>(modulus);
    return static_cast<u64>(t);
}

HowellAccumulator::HowellAccumulator(PrimePowerRing ring, int width) : ring_(ring), width_(width) {}

namespace {

int first_nonzero(const std::vector<u64>& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return static_cast<int>(i);
    return -1;
}

} // namespace

void HowellAccumulator::add_row(std::vector<u64> row) {
    if (static_cast<int>(row.size()) != width_) throw InvalidInputError("row width mismatch");
    for (u64& v : row) v %= ring_.modulus;
    std::vector<std::vector<u64>> pending;
    pending.push_back(std::move(row));
    while (!pending.empty()) {
        std::vector<u64> r = std::move(pending.back());
        pending.pop_back();
        reduce_and_insert(std::move(r), pending);
    }
    // canonicalize: entries above each pivot q^v reduced into [0, q^v)
    for (size_t j = 0; j < rows_.size(); ++j) {
        int col = first_nonzero(rows_[j]);
        u64 pivot = rows_[j][col]; // q^v after normalization
        for (size_t i = 0; i < j; ++i) {
            u64 f = rows_[i][col] / pivot;
            if (f == 0) continue;
            for (int c = col; c < width_; ++c)
                rows_[i][c] = ring_.sub(rows_[i][c], ring_.mul(f, rows_[j][c]));
        }
    }
}

void HowellAccumulator::reduce_and_insert(std::vector<u64> row, std::vector<std::vector<u64>>& pending) {
    auto normalize_pivot = [&](std::vector<u64>& r, int col) -> unsigned {
        unsigned v = ring_.val(r[col]);
        u64 unit = r[col];
        for (unsigned i = 0; i < v; ++i) unit /= ring_.q;
        u64 inv = ring_.unit_inv(unit);
        for (u64& x : r) x = ring_.mul(x, inv);
        if (v > 0) {
            // annihilator row keeps the span Howell-closed
            u64 ann = 1;
            for (unsigned i = 0; i < ring_.m - v; ++i) ann *= ring_.q;
            std::vector<u64> extra(r.size());
            for (size_t i = 0; i < r.size(); ++i) extra[i] = ring_.mul(r[i], ann);
            pending.push_back(std::move(extra));
        }
        return v;
    };

    while (true) {
        int col = first_nonzero(row);
        if (col < 0) return; // reduced to zero
        // basis rows are sorted by pivot column; find slot for `col`
        size_t at = 0;
        int existing_col = -1;
        while (at < rows_.size()) {
            int pcol = first_nonzero(rows_[at]);
            if (pcol >= col) {
                existing_col = pcol;
                break;
            }
            ++at;
        }
        if (existing_col != col) {
            normalize_pivot(row, col);
            rows_.insert(rows_.begin() + at, std::move(row));
            return;
        }
        unsigned pv = ring_.val(rows_[at][col]);
        if (ring_.val(row[col]) < pv) {
            std::swap(rows_[at], row);
            pv = normalize_pivot(rows_[at], col);
        }
        // pivot is q^pv; entry valuation >= pv, so this zeroes it exactly
        u64 factor = row[col];
        for (unsigned i = 0; i < pv; ++i) factor /= ring_.q;
        for (int c = col; c < width_; ++c)
            row[c] = ring_.sub(row[c], ring_.mul(factor, rows_[at][c]));
    }
}

std::vector<std::vector<u64>> howell_form(const PrimePowerRing& ring, int width,
                                          const std::vector<std::vector<u64>>& rows) {
    HowellAccumulator acc(ring, width);
    for (const auto& r : rows) acc.add_row(r);
    return acc.rows();
}

namespace {

// Integer Smith normal form, tracking only column transforms:
// S = (row ops) * A * C with C unimodular. Returns diag of S and C.
struct SnfResult {
    std::vector<Int> diag;            // elementary divisors (may be unsorted by absolute value)
    std::vector<std::vector<Int>> c;  // k x k column transform
};

SnfResult integer_snf_columns(std::vector<std::vector<Int>> a, int width) {
    int rows = static_cast<int>(a.size());
    SnfResult res;
    res.c.assign(width, std::vector<Int>(width, 0));
    for (int i = 0; i < width; ++i) res.c[i][i] = 1;

    int t = 0; // current diagonal position
    while (t < rows && t < width) {
        // find nonzero pivot
        int pr = -1, pc = -1;
        for (int i = t; i < rows && pr < 0; ++i)
            for (int j = t; j < width; ++j)
                if (a[i][j] != 0) { pr = i; pc = j; break; }
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        if (pc != t)
            for (int i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][t]);
        if (pc != t)
            for (int i = 0; i < width; ++i) std::swap(res.c[i][pc], res.c[i][t]);

        bool again = true;
        while (again) {
            again = false;
            // clear column t with row ops
            for (int i = t + 1; i < rows; ++i) {
                while (a[i][t] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : Int(a[i][t] / a[t][t]);
                    if (q != 0)
                        for (int j = t; j < width; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) std::swap(a[i], a[t]);
                }
            }
            // clear row t with column ops
            for (int j = t + 1; j < width; ++j) {
                while (a[t][j] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : Int(a[t][j] / a[t][t]);
                    if (q != 0) {
                        for (int i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
                        for (int i = 0; i < width; ++i) res.c[i][j] -= q * res.c[i][t];
                    }
                    if (a[t][j] != 0) {
                        for (int i = 0; i < rows; ++i) std::swap(a[i][j], a[i][t]);
                        for (int i = 0; i < width; ++i) std::swap(res.c[i][j], res.c[i][t]);
                        again = true; // column swap may have dirtied the column below
                    }
                }
            }
            if (!again) {
                // recheck column below pivot
                for (int i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0) { again = true; break; }
            }
        }
        res.diag.push_back(a[t][t]);
        ++t;
    }
    return res;
}

} // namespace

std::vector<std::vector<u64>> kernel_mod_prime_power(const PrimePowerRing& ring,
                                                     const std::vector<std::vector<u64>>& a_in,
                                                     int width) {
    // lift to Z
    std::vector<std::vector<Int>> a;
    a.reserve(a_in.size());
    for (const auto& row : a_in) {
        if (static_cast<int>(row.size()) != width) throw InvalidInputError("row width mismatch");
        std::vector<Int> r(width);
        for (int j = 0; j < width; ++j) r[j] = Int(static_cast<unsigned long>(row[j] % ring.modulus));
        a.push_back(std::move(r));
    }
    Int M(static_cast<unsigned long>(ring.modulus));

    SnfResult snf = integer_snf_columns(std::move(a), width);

    // x solves Ax == 0 mod q^m iff (C^{-1} x)_i is a multiple of M/gcd(s_i, M)
    // (free for i beyond the diagonal), so the kernel generators are the
    // columns of C scaled accordingly.
    HowellAccumulator acc(ring, width);
    for (int i = 0; i < width; ++i) {
        Int s = (i < static_cast<int>(snf.diag.size())) ? snf.diag[i] : Int(0);
        Int g = gcd(s, M);
        Int scale = M / g; // M when s == 0 ... wait, gcd(0,M)=M so scale=1: free column
        std::vector<u64> gen(width);
        bool nonzero = false;
        for (int r = 0; r < width; ++r) {
            Int v = (snf.c[r][i] * scale) % M;
            if (v < 0) v += M;
            gen[r] = v.get_ui();
            if (gen[r] != 0) nonzero = true;
        }
        if (nonzero) acc.add_row(std::move(gen));
    }
    return acc.rows();
}

} // namespace pisotmod
