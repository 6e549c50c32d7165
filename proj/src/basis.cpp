#include "carlitz/basis.hpp"

#include <algorithm>
#include <cstring>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

Enumeration default_enumeration(const Fq& F) { return Enumeration{F.enumerate()}; }

Enumeration alternative_enumeration(const Fq& F) {
    Enumeration en{F.enumerate()};
    if (en.order.size() > 3) std::reverse(en.order.begin() + 2, en.order.end());
    return en;
}

std::vector<int> q_digits(std::int64_t q, std::uint64_t n) {
    std::vector<int> d;
    while (n > 0) {
        d.push_back(int(n % std::uint64_t(q)));
        n /= std::uint64_t(q);
    }
    return d;
}

FqPoly bracket_poly(const Fq& F, int i) {
    if (i < 1) throw domain_error("bracket needs i >= 1");
    __int128 e = 1;
    for (int k = 0; k < i; ++k) {
        e *= F.q();
        if (e > kMaxPolyDegree) throw domain_error("bracket degree exceeds the supported size");
    }
    FqPoly b = fp_monomial(1, std::int64_t(e));
    b.c[1] = F.neg(1);
    return b;
}

std::vector<FqPoly> e_poly(const CarlitzCache& C, int i) {
    const Fq& F = C.field();
    std::vector<FqPoly> coeff(std::size_t(i) + 1);
    for (int j = 0; j <= i; ++j)
        coeff[std::size_t(j)] = fp_scale(F, C.binom(i, j), F.sign(std::uint64_t(i - j)));
    return coeff;
}

PolyFq e_product_oracle(const Fq& F, int i, std::int64_t max_factors) {
    if (i < 0) throw domain_error("oracle index must be nonnegative");
    if (i == 0) return PolyFq{{FqPoly(), fp_one()}}; // e_0 = t
    const std::int64_t q = F.q();
    const std::int64_t nfac = ipow(q, i);
    if (nfac > max_factors) throw domain_error("product oracle budget exceeded");

    // Flat coefficient arenas: row j holds the GF(q)[x] coefficient of t^j.
    // Multiplying by (t - m) is new[j] = old[j-1] - m*old[j], done row-wise
    // with the bulk axpy kernel, ping-ponging between two arenas.
    const std::size_t stride = std::size_t((i - 1) * nfac + 2);
    const std::size_t rows = std::size_t(nfac) + 1;
    std::vector<FqElem> arena_a(rows * stride, 0), arena_b(rows * stride, 0);
    std::vector<std::size_t> len(rows, 0), newlen(rows, 0);
    FqElem* cur = arena_a.data();
    FqElem* nxt = arena_b.data();
    cur[0] = 1;
    len[0] = 1;

    std::vector<int> mdig(std::size_t(i), 0); // coefficients of m, odometer order
    std::vector<FqElem> mneg(std::size_t(i), 0);
    for (std::int64_t s = 0; s < nfac; ++s) {
        std::size_t mlen = 0;
        for (int k = 0; k < i; ++k) {
            mneg[std::size_t(k)] = F.neg(FqElem(mdig[std::size_t(k)]));
            if (mdig[std::size_t(k)] != 0) mlen = std::size_t(k) + 1;
        }
        std::size_t sdeg = std::size_t(s); // current degree in t
        for (std::size_t j = 0; j <= sdeg + 1; ++j) {
            FqElem* out = nxt + j * stride;
            std::size_t n = 0;
            if (j > 0 && len[j - 1] > 0) {
                std::memcpy(out, cur + (j - 1) * stride, len[j - 1]);
                n = len[j - 1];
            }
            if (len[j] > 0 && mlen > 0) {
                const FqElem* src = cur + j * stride;
                std::size_t top = len[j] + mlen - 1;
                if (top > n) {
                    std::memset(out + n, 0, top - n);
                    n = top;
                }
                for (std::size_t e = 0; e < mlen; ++e)
                    if (mneg[e] != 0) fp_axpy(F, out + e, src, len[j], mneg[e]);
            }
            newlen[j] = n;
        }
        std::swap(cur, nxt);
        std::swap(len, newlen);
        // odometer
        for (int k = 0; k < i; ++k) {
            if (++mdig[std::size_t(k)] < q) break;
            mdig[std::size_t(k)] = 0;
        }
    }

    PolyFq out;
    out.c.resize(rows);
    for (std::size_t j = 0; j < rows; ++j) {
        FqPoly p;
        p.c.assign(cur + j * stride, cur + j * stride + len[j]);
        p.trim();
        out.c[j] = std::move(p);
    }
    out.trim();
    return out;
}

RatFunc f_coeff(const CarlitzCache& C, int i, int j) {
    const Fq& F = C.field();
    FqPoly num = fp_const(F.sign(std::uint64_t(i - j)));
    // denominator is monic and the numerator a unit: already reduced
    return RatFunc{std::move(num), C.f_denom(i, j)};
}

std::vector<RatFunc> f_poly(const CarlitzCache& C, int i) {
    std::vector<RatFunc> coeff(std::size_t(i) + 1);
    for (int j = 0; j <= i; ++j) coeff[std::size_t(j)] = f_coeff(C, i, j);
    return coeff;
}

HPoly h_poly(const CarlitzCache& C, std::uint64_t j) {
    const Fq& F = C.field();
    std::vector<int> dig = q_digits(F.q(), j);
    if (int(dig.size()) - 1 > C.imax())
        throw domain_error("h index needs digits within the cache depth");
    HPoly r;
    r.g = tp_one();
    r.gamma = fp_one();
    for (std::size_t k = 0; k < dig.size(); ++k) {
        if (dig[k] == 0) continue;
        auto coeffs = e_poly(C, int(k));
        PolyFq ek;
        ek.c.assign(std::size_t(ipow(F.q(), int(k))) + 1, FqPoly());
        for (std::size_t t = 0; t < coeffs.size(); ++t)
            ek.c[std::size_t(ipow(F.q(), int(t)))] = coeffs[t];
        r.g = tp_mul(F, r.g, tp_pow(F, ek, std::uint64_t(dig[k])));
        r.gamma = fp_mul(F, r.gamma, fp_pow(F, C.D(int(k)), std::uint64_t(dig[k])));
    }
    r.h = tr_scale_div(F, r.g, r.gamma);
    return r;
}

FqPoly m_seq(const Fq& F, std::uint64_t j, const Enumeration& en) {
    std::vector<int> dig = q_digits(F.q(), j);
    FqPoly m;
    m.c.resize(dig.size(), 0);
    for (std::size_t k = 0; k < dig.size(); ++k) m.c[k] = en.order[std::size_t(dig[k])];
    m.trim();
    return m;
}

QPoly q_poly(const Fq& F, std::uint64_t j, const Enumeration& en) {
    QPoly r;
    r.p = tp_one();
    for (std::uint64_t k = 0; k < j; ++k)
        r.p = tp_mul(F, r.p, tp_linear_root(F, m_seq(F, k, en)));
    r.p_at_m = tp_eval(F, r.p, m_seq(F, j, en));
    if (r.p_at_m.is_zero()) throw internal_error("P_j vanishes at m_j");
    return r;
}

std::vector<RatFunc> expand_h_in_q(const CarlitzCache& C, std::uint64_t n, const Enumeration& en) {
    const Fq& F = C.field();
    HPoly hn = h_poly(C, n);

    // incremental P_k and the triangular value table Q_i(m_k)
    std::vector<FqPoly> m(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) m[k] = m_seq(F, k, en);
    std::vector<PolyFq> p(n + 1);
    p[0] = tp_one();
    for (std::uint64_t k = 1; k <= n; ++k)
        p[k] = tp_mul(F, p[k - 1], tp_linear_root(F, m[k - 1]));

    std::vector<FqPoly> p_self(n + 1); // P_i(m_i)
    for (std::uint64_t i = 0; i <= n; ++i) p_self[i] = tp_eval(F, p[i], m[i]);

    std::vector<RatFunc> c(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) {
        RatFunc acc = tr_eval(F, hn.h, m[k]);
        for (std::uint64_t i = 0; i < k; ++i) {
            RatFunc qik = rf_make(F, tp_eval(F, p[i], m[k]), p_self[i]);
            acc = rf_sub(F, acc, rf_mul(F, c[i], qik));
        }
        c[k] = acc; // Q_k(m_k) = 1
    }
    return c;
}

LKappa l_and_kappa(const Fq& F, std::uint64_t n, const Enumeration& en) {
    const std::int64_t q = F.q();
    std::vector<int> dig = q_digits(q, n);
    LKappa r{0, 0};
    for (std::size_t k = 1; k < dig.size(); ++k)
        r.l += ((ipow(q, int(k)) - 1) / (q - 1)) * dig[k];

    FqPoly mn = m_seq(F, n, en);
    for (std::uint64_t k = 0; k < n; ++k) {
        FqPoly diff = fp_sub(F, mn, m_seq(F, k, en));
        r.kappa += fp_xorder(diff);
    }
    return r;
}

} // namespace carlitz
