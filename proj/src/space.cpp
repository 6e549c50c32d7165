#include "carlitz/space.hpp"

#include <algorithm>

#include "carlitz/errors.hpp"

namespace carlitz {

LinearPoly f_linear(const CarlitzCache& C, int i) {
    LinearPoly r;
    auto coeffs = f_poly(C, i);
    r.u.reserve(coeffs.size());
    for (auto& rc : coeffs) r.u.push_back(sc_from_ratfunc(std::move(rc)));
    return r;
}

Scalar eval_linear(const Fq& F, const LinearPoly& phi, const Scalar& t) {
    AbsVal vt = sc_abs(t);
    if (!vt.zero && av_cmp_exp(vt, 0, 1) > 0)
        throw domain_error("evaluation point must satisfy |t| <= 1");
    Scalar acc = sc_zero();
    Scalar tq = t;
    for (std::size_t j = 0; j < phi.u.size(); ++j) {
        if (j > 0) tq = sc_frobenius(F, tq);
        if (!sc_is_zero(phi.u[j])) acc = sc_add(F, acc, sc_mul(F, phi.u[j], tq));
    }
    return acc;
}

Scalar eval_coeffs(const CarlitzCache& C, const CarlitzCoeffs& c, const Scalar& t) {
    if (std::int64_t(c.c.size()) - 1 > C.imax())
        throw domain_error("basis cache is not deep enough for this coefficient list");
    const Fq& F = C.field();
    auto fv = basis_values(C, t, c.c.size());
    Scalar acc = sc_zero();
    for (std::size_t i = 0; i < c.c.size(); ++i)
        if (!sc_is_zero(c.c[i])) acc = sc_add(F, acc, sc_mul(F, c.c[i], fv[i]));
    return acc;
}

std::vector<Scalar> basis_values(const CarlitzCache& C, const Scalar& t, std::size_t m) {
    const Fq& F = C.field();
    std::vector<Scalar> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        out.push_back(eval_linear(F, f_linear(C, int(i)), t));
    return out;
}

CarlitzCoeffs to_carlitz(const CarlitzCache& C, const LinearPoly& phi) {
    const Fq& F = C.field();
    CarlitzCoeffs out;
    out.c.assign(phi.u.size(), sc_zero());
    std::vector<Scalar> rem = phi.u;
    for (std::size_t n = rem.size(); n-- > 0;) {
        if (sc_is_zero(rem[n])) continue;
        // top monomial of f_n is t^(q^n) / D_n
        Scalar cn = sc_mul(F, rem[n], sc_from_poly(C.D(int(n))));
        out.c[n] = cn;
        for (std::size_t j = 0; j < n; ++j)
            rem[j] = sc_sub(F, rem[j], sc_mul(F, cn, sc_from_ratfunc(f_coeff(C, int(n), int(j)))));
        rem[n] = sc_zero();
    }
    return out;
}

LinearPoly from_carlitz(const CarlitzCache& C, const CarlitzCoeffs& c) {
    const Fq& F = C.field();
    LinearPoly out;
    out.u.assign(c.c.size(), sc_zero());
    for (std::size_t i = 0; i < c.c.size(); ++i) {
        if (sc_is_zero(c.c[i])) continue;
        for (std::size_t j = 0; j <= i; ++j)
            out.u[j] = sc_add(F, out.u[j],
                              sc_mul(F, c.c[i], sc_from_ratfunc(f_coeff(C, int(i), int(j)))));
    }
    return out;
}

LinearPoly delta_linear(const Fq& F, const LinearPoly& phi) {
    LinearPoly out;
    out.u.assign(phi.u.size(), sc_zero());
    for (std::size_t j = 1; j < phi.u.size(); ++j)
        out.u[j] = sc_mul(F, phi.u[j], sc_from_poly(bracket_poly(F, int(j))));
    return out;
}

LinearPoly delta_iter(const Fq& F, const LinearPoly& phi, int i) {
    if (i < 0) throw domain_error("iterated difference needs i >= 0");
    auto qpow = [&](std::int64_t e) {
        __int128 v = 1;
        while (e-- > 0) {
            v *= F.q();
            if (v > kMaxPolyDegree)
                throw domain_error("bracket degree exceeds the supported size");
        }
        return std::int64_t(v);
    };
    LinearPoly cur = phi;
    for (int step = 1; step <= i; ++step) {
        // u_j -> u_j * (x^(q^j) - x^(q^(step-1)))
        std::int64_t qs = qpow(step - 1);
        for (std::size_t j = 0; j < cur.u.size(); ++j) {
            if (sc_is_zero(cur.u[j])) continue;
            FqPoly factor = fp_sub(F, fp_monomial(1, qpow(std::int64_t(j))), fp_monomial(1, qs));
            cur.u[j] = sc_mul(F, cur.u[j], sc_from_poly(factor));
        }
    }
    return cur;
}

CarlitzCoeffs delta_coeffs(const Fq& F, const CarlitzCoeffs& c) {
    CarlitzCoeffs out;
    if (c.c.empty()) return out;
    out.c.assign(c.c.size(), sc_zero());
    for (std::size_t i = 0; i < c.c.size(); ++i) {
        Scalar v = (i + 1 < c.c.size()) ? c.c[i + 1] : sc_zero();
        if (i >= 1)
            v = sc_add(F, v, sc_mul(F, c.c[i], sc_from_poly(bracket_poly(F, int(i)))));
        out.c[i] = v;
    }
    return out;
}

CarlitzCoeffs delta_qth_form(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap) {
    CarlitzCoeffs out;
    if (c.c.size() <= 1) return out;
    out.c.reserve(c.c.size() - 1);
    for (std::size_t i = 1; i < c.c.size(); ++i)
        out.c.push_back(sc_qth_root(F, c.c[i], ram_cap));
    return out;
}

CarlitzCoeffs a_plus(const Fq& F, const CarlitzCoeffs& c) {
    CarlitzCoeffs out;
    out.c.assign(c.c.size() + 1, sc_zero());
    for (std::size_t i = 0; i <= c.c.size(); ++i) {
        Scalar v = sc_zero();
        if (i >= 1 && !sc_is_zero(c.c[i - 1]))
            v = sc_mul(F, sc_frobenius(F, c.c[i - 1]), sc_from_poly(bracket_poly(F, int(i))));
        if (i < c.c.size() && !sc_is_zero(c.c[i]))
            v = sc_add(F, v, sc_sub(F, sc_frobenius(F, c.c[i]), c.c[i]));
        out.c[i] = v;
    }
    return out;
}

CarlitzCoeffs a_minus(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap) {
    return delta_qth_form(F, c, ram_cap);
}

CarlitzCoeffs number_op(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap) {
    return a_plus(F, a_minus(F, c, ram_cap));
}

CarlitzCoeffs qth_power_coeffs(const Fq& F, const CarlitzCoeffs& c) {
    CarlitzCoeffs out;
    out.c.assign(c.c.size() + 1, sc_zero());
    for (std::size_t j = 0; j <= c.c.size(); ++j) {
        Scalar v = sc_zero();
        if (j < c.c.size()) v = sc_frobenius(F, c.c[j]);
        if (j >= 1 && !sc_is_zero(c.c[j - 1]))
            v = sc_add(F, v,
                       sc_mul(F, sc_frobenius(F, c.c[j - 1]), sc_from_poly(bracket_poly(F, int(j)))));
        out.c[j] = v;
    }
    return out;
}

ScalarEq coeffs_eq(const Fq& F, const CarlitzCoeffs& a, const CarlitzCoeffs& b) {
    std::size_t n = std::min(a.c.size(), b.c.size());
    ScalarEq agg;
    agg.equal = true;
    agg.exact = true;
    bool have_prec = false;
    for (std::size_t i = 0; i < n; ++i) {
        ScalarEq e = sc_eq(F, a.c[i], b.c[i]);
        if (!e.equal) {
            e.exact = agg.exact && e.exact;
            return e;
        }
        if (!e.exact) {
            agg.exact = false;
            if (!have_prec ||
                (__int128)e.prec_num * agg.prec_den < (__int128)agg.prec_num * e.prec_den) {
                agg.prec_num = e.prec_num;
                agg.prec_den = e.prec_den;
            }
            have_prec = true;
        }
    }
    return agg;
}

CommutatorReport commutator_defect(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap) {
    CommutatorReport rep;
    CarlitzCoeffs minus_plus = a_minus(F, a_plus(F, c), ram_cap);
    CarlitzCoeffs plus_minus = a_plus(F, a_minus(F, c, ram_cap));
    rep.lhs.c.assign(c.c.size(), sc_zero());
    for (std::size_t i = 0; i < c.c.size(); ++i)
        rep.lhs.c[i] = sc_sub(F, minus_plus.c[i], plus_minus.c[i]);

    Scalar root1 = sc_qth_root(F, sc_from_poly(bracket_poly(F, 1)), ram_cap);
    rep.rhs.c.assign(c.c.size(), sc_zero());
    for (std::size_t i = 0; i < c.c.size(); ++i)
        rep.rhs.c[i] = sc_mul(F, root1, c.c[i]);

    rep.equal = coeffs_eq(F, rep.lhs, rep.rhs).equal;

    // q-th-power form, entirely inside the unramified field:
    // delta(c^q) - (delta c)^q = [1] * c^q
    CarlitzCoeffs cq = qth_power_coeffs(F, c);
    CarlitzCoeffs lhs_k = delta_coeffs(F, cq);
    CarlitzCoeffs dq = qth_power_coeffs(F, delta_coeffs(F, c));
    for (std::size_t i = 0; i < lhs_k.c.size(); ++i)
        lhs_k.c[i] = sc_sub(F, lhs_k.c[i], dq.c[i]);
    CarlitzCoeffs rhs_k;
    Scalar b1 = sc_from_poly(bracket_poly(F, 1));
    rhs_k.c.assign(cq.c.size(), sc_zero());
    for (std::size_t i = 0; i < cq.c.size(); ++i) rhs_k.c[i] = sc_mul(F, b1, cq.c[i]);
    rep.k_form_equal = coeffs_eq(F, lhs_k, rhs_k).equal;
    return rep;
}

CarlitzCoeffs coherent_state(const Fq& F, const Scalar& lambda, const Scalar& c0,
                             std::size_t m) {
    AbsVal vl = sc_abs(lambda);
    if (vl.zero) throw domain_error("coherent state needs lambda != 0");
    AbsVal vc = sc_abs(c0);
    if (!vc.zero) {
        // decay condition: q/(q-1) * v(lambda) + v(c0) > 0
        std::int64_t q = F.q();
        __int128 lhs = (__int128)q * vl.num * vc.den + (__int128)(q - 1) * vc.num * vl.den;
        if (lhs <= 0)
            throw domain_error("coherent state diverges: need |lambda|^(q/(q-1))*|c0| < 1");
    }
    CarlitzCoeffs out;
    out.c.reserve(m);
    Scalar cur = c0;
    for (std::size_t n = 0; n < m; ++n) {
        out.c.push_back(cur);
        cur = sc_frobenius(F, sc_mul(F, lambda, cur));
    }
    return out;
}

AbsVal norm(const CarlitzCoeffs& c) {
    AbsVal best;
    best.zero = true;
    for (const auto& ci : c.c) {
        AbsVal v = sc_abs(ci);
        if (av_cmp(v, best) > 0) best = v;
    }
    return best;
}

AbsVal sampled_norm(const CarlitzCache& C, const CarlitzCoeffs& c, int degree_bound) {
    const Fq& F = C.field();
    AbsVal nominal = norm(c);
    // evaluate far enough past the coefficient norm that a sampled zero at
    // working precision cannot hide the maximum
    std::int64_t margin = nominal.zero ? 16 : (nominal.num / nominal.den + 16);
    std::int64_t prec = std::max<std::int64_t>(margin, 16);

    AbsVal best;
    best.zero = true;
    std::int64_t count = 1;
    for (int k = 0; k < degree_bound; ++k) count *= F.q();
    for (std::int64_t idx = 0; idx < count; ++idx) {
        FqPoly t;
        std::int64_t v = idx;
        for (int k = 0; k < degree_bound; ++k) {
            t.c.push_back(FqElem(v % F.q()));
            v /= F.q();
        }
        t.trim();
        Scalar val = eval_coeffs(C, c, Scalar(ls_from_poly(t, prec)));
        AbsVal av = sc_abs(val);
        if (av_cmp(av, best) > 0) best = av;
    }
    return best;
}

} // namespace carlitz
