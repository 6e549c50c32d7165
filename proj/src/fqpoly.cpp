#include "carlitz/fqpoly.hpp"

#include <algorithm>

#include "carlitz/errors.hpp"

namespace carlitz {

FqPoly fp_zero() { return FqPoly(); }

FqPoly fp_const(FqElem a) {
    FqPoly r;
    if (a != 0) r.c = {a};
    return r;
}

FqPoly fp_one() { return fp_const(1); }

FqPoly fp_monomial(FqElem a, std::int64_t k) {
    if (k < 0 || k > kMaxPolyDegree)
        throw domain_error("polynomial degree exceeds the supported size");
    FqPoly r;
    if (a != 0) {
        r.c.assign(std::size_t(k) + 1, 0);
        r.c.back() = a;
    }
    return r;
}

namespace {

#if defined(__x86_64__) && defined(__GNUC__)
#define CARLITZ_KERNEL __attribute__((target_clones("default", "avx2")))
#else
#define CARLITZ_KERNEL
#endif

// dst[k] += src[k], characteristic 2: plain xor.
CARLITZ_KERNEL
void axpy_char2(FqElem* dst, const FqElem* src, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) dst[k] ^= src[k];
}

// GF(4) packed indices: addition is xor, multiplication by the generator y
// maps bits (b0,b1) -> (b1, b0^b1).
CARLITZ_KERNEL
void axpy_gf4_y(FqElem* dst, const FqElem* src, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        FqElem s = src[k];
        FqElem b0 = s & 1, b1 = (s >> 1) & 1;
        dst[k] ^= FqElem(b1 | ((b0 ^ b1) << 1));
    }
}

CARLITZ_KERNEL
void axpy_gf4_y1(FqElem* dst, const FqElem* src, std::size_t n) { // c = y+1
    for (std::size_t k = 0; k < n; ++k) {
        FqElem s = src[k];
        FqElem b0 = s & 1, b1 = (s >> 1) & 1;
        dst[k] ^= FqElem((b1 | ((b0 ^ b1) << 1)) ^ s);
    }
}

void axpy_gf4(FqElem* dst, const FqElem* src, std::size_t n, FqElem c) {
    if (c == 1)
        axpy_char2(dst, src, n);
    else if (c == 2)
        axpy_gf4_y(dst, src, n);
    else
        axpy_gf4_y1(dst, src, n);
}

// F_3: values live in {0,1,2}; c=2 is negation. The sum is at most 4, and
// min(s, s-3) with unsigned wraparound reduces it (pminub after psubb).
CARLITZ_KERNEL
void axpy_mod3_add(FqElem* dst, const FqElem* src, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        FqElem s = FqElem(dst[k] + src[k]);
        dst[k] = std::min<FqElem>(s, FqElem(s - 3));
    }
}

CARLITZ_KERNEL
void axpy_mod3_sub(FqElem* dst, const FqElem* src, std::size_t n) {
    // c == 2 == -1: 2*a = (3 - a) masked to 0 at a = 0
    for (std::size_t k = 0; k < n; ++k) {
        FqElem a = src[k];
        FqElem t = FqElem((3 - a) & -(a != 0));
        FqElem s = FqElem(dst[k] + t);
        dst[k] = std::min<FqElem>(s, FqElem(s - 3));
    }
}

void axpy_mod3(FqElem* dst, const FqElem* src, std::size_t n, FqElem c) {
    if (c == 1)
        axpy_mod3_add(dst, src, n);
    else
        axpy_mod3_sub(dst, src, n);
}

// Prime field, general p: uint16 intermediate, runtime modulus.
void axpy_modp(FqElem* dst, const FqElem* src, std::size_t n, FqElem c, int p) {
    for (std::size_t k = 0; k < n; ++k)
        dst[k] = FqElem((dst[k] + unsigned(c) * src[k]) % unsigned(p));
}

// Generic table path for extension fields.
void axpy_table(const Fq& F, FqElem* dst, const FqElem* src, std::size_t n, FqElem c) {
    const FqElem* row = F.mul_row(c);
    const FqElem* add = F.add_table();
    const std::size_t q = std::size_t(F.q());
    for (std::size_t k = 0; k < n; ++k) dst[k] = add[dst[k] * q + row[src[k]]];
}

} // namespace

void fp_axpy(const Fq& F, FqElem* dst, const FqElem* src, std::size_t n, FqElem c) {
    if (c == 0 || n == 0) return;
    if (F.p() == 2) {
        if (c == 1) {
            axpy_char2(dst, src, n);
        } else if (F.q() == 4) {
            axpy_gf4(dst, src, n, c);
        } else {
            axpy_table(F, dst, src, n, c);
        }
    } else if (F.q() == 3) {
        axpy_mod3(dst, src, n, c);
    } else if (F.gamma() == 1) {
        axpy_modp(dst, src, n, c, F.p());
    } else {
        axpy_table(F, dst, src, n, c);
    }
}

FqPoly fp_add(const Fq& F, const FqPoly& a, const FqPoly& b) {
    const FqPoly& lo = a.c.size() <= b.c.size() ? a : b;
    const FqPoly& hi = a.c.size() <= b.c.size() ? b : a;
    FqPoly r = hi;
    for (std::size_t k = 0; k < lo.c.size(); ++k) r.c[k] = F.add(r.c[k], lo.c[k]);
    r.trim();
    return r;
}

FqPoly fp_neg(const Fq& F, const FqPoly& a) {
    FqPoly r = a;
    for (auto& v : r.c) v = F.neg(v);
    return r;
}

FqPoly fp_sub(const Fq& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), 0);
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] = F.sub(r.c[k], b.c[k]);
    r.trim();
    return r;
}

FqPoly fp_scale(const Fq& F, const FqPoly& a, FqElem s) {
    if (s == 0) return FqPoly();
    FqPoly r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    r.trim();
    return r;
}

FqPoly fp_shift(const FqPoly& a, std::int64_t k) {
    if (a.is_zero()) return a;
    if (k < 0 || a.deg() + k > kMaxPolyDegree)
        throw domain_error("polynomial degree exceeds the supported size");
    FqPoly r;
    r.c.assign(a.c.size() + std::size_t(k), 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

FqPoly fp_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return FqPoly();
    const FqPoly& small = a.c.size() <= b.c.size() ? a : b;
    const FqPoly& big = a.c.size() <= b.c.size() ? b : a;
    FqPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t k = 0; k < small.c.size(); ++k)
        fp_axpy(F, r.c.data() + k, big.c.data(), big.c.size(), small.c[k]);
    r.trim();
    return r;
}

FqPoly fp_pow_q(const Fq& F, const FqPoly& a, int j) {
    if (j == 0 || a.is_zero()) return a;
    __int128 step = 1;
    for (int k = 0; k < j; ++k) {
        step *= F.q();
        if (step * a.deg() > kMaxPolyDegree)
            throw domain_error("polynomial degree exceeds the supported size");
    }
    FqPoly r;
    r.c.assign(std::size_t(a.deg() * std::int64_t(step)) + 1, 0);
    for (std::size_t k = 0; k < a.c.size(); ++k)
        r.c[std::size_t(k) * std::size_t(step)] = a.c[k];
    return r;
}

FqPoly fp_pow(const Fq& F, const FqPoly& a, std::uint64_t e) {
    FqPoly r = fp_one();
    FqPoly base = a;
    while (e) {
        if (e & 1) r = fp_mul(F, r, base);
        e >>= 1;
        if (e) base = fp_mul(F, base, base);
    }
    return r;
}

std::pair<FqPoly, FqPoly> fp_divrem(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.deg() < b.deg()) return {FqPoly(), a};
    FqPoly rem = a;
    FqPoly quo;
    quo.c.assign(std::size_t(a.deg() - b.deg()) + 1, 0);
    const FqElem lead_inv = F.inv(b.lead());
    for (std::int64_t k = a.deg() - b.deg(); k >= 0; --k) {
        FqElem top = rem.at(k + b.deg());
        if (top == 0) continue;
        FqElem cq = F.mul(top, lead_inv);
        quo.c[std::size_t(k)] = cq;
        fp_axpy(F, rem.c.data() + k, b.c.data(), b.c.size(), F.neg(cq));
    }
    rem.trim();
    quo.trim();
    return {quo, rem};
}

FqPoly fp_div_exact(const Fq& F, const FqPoly& a, const FqPoly& b) {
    auto [q, r] = fp_divrem(F, a, b);
    if (!r.is_zero()) throw internal_error("exact polynomial division left a remainder");
    return q;
}

FqPoly fp_make_monic(const Fq& F, const FqPoly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return fp_scale(F, a, F.inv(a.lead()));
}

FqPoly fp_gcd(const Fq& F, FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = fp_divrem(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_make_monic(F, a);
}

FqElem fp_eval(const Fq& F, const FqPoly& a, FqElem t) {
    FqElem r = 0;
    for (std::size_t k = a.c.size(); k-- > 0;) r = F.add(F.mul(r, t), a.c[k]);
    return r;
}

FqPoly fp_eval_poly(const Fq& F, const FqPoly& a, const FqPoly& t) {
    FqPoly r;
    for (std::size_t k = a.c.size(); k-- > 0;) {
        r = fp_mul(F, r, t);
        r = fp_add(F, r, fp_const(a.c[k]));
    }
    return r;
}

std::int64_t fp_xorder(const FqPoly& a) {
    for (std::size_t k = 0; k < a.c.size(); ++k)
        if (a.c[k] != 0) return std::int64_t(k);
    return -1;
}

} // namespace carlitz
