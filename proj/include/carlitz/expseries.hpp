#ifndef CARLITZ_EXPSERIES_HPP
#define CARLITZ_EXPSERIES_HPP

#include "carlitz/space.hpp"

namespace carlitz {

/// Exponent of the absolute value of term j of the exponential series at an
/// argument of valuation vz/dz: q^j * vz/dz - (q^j - 1)/(q - 1), in x-units
/// scaled by dz.
std::int64_t exp_term_exponent(std::int64_t q, int j, std::int64_t vz);

/// True when |z| < q^(-1/(q-1)), the strict convergence domain of the
/// exponential (rational-exponent comparison, no floating point).
bool exp_domain_ok(std::int64_t q, const AbsVal& z_abs);

/// sum_{j<=N} z^(q^j)/D_j with the truncation index derived from the
/// requested precision. Refuses out-of-domain arguments (domain_error) and
/// precision it cannot certify (precision_error). Input must be unramified.
LaurentSeries carlitz_exp(const CarlitzCache& C, const LaurentSeries& z, std::int64_t prec);

/// The explicit N-term partial sum; defined for every z, with precision
/// tracked from the operands only.
LaurentSeries carlitz_exp_partial(const CarlitzCache& C, const LaurentSeries& z, int n);
/// Exact partial sum of a rational argument.
RatFunc carlitz_exp_partial_rat(const CarlitzCache& C, const RatFunc& z, int n);

/// Formal inverse sum_{n<=N} (-1)^n zeta^(q^n)/L_n; needs |zeta| < 1.
LaurentSeries rho(const CarlitzCache& C, const LaurentSeries& zeta, std::int64_t prec);
LaurentSeries rho_partial(const CarlitzCache& C, const LaurentSeries& zeta, int n);
RatFunc rho_partial_rat(const CarlitzCache& C, const RatFunc& zeta, int n);

struct InverseReport {
    bool equal = false;
    std::int64_t prec = 0; ///< the composition was confirmed modulo x^prec
};
/// Checks exp(rho(zeta)) = zeta at the certified precision.
InverseReport verify_inverse(const CarlitzCache& C, const LaurentSeries& zeta,
                             std::int64_t prec);

/// Basis coefficients of t -> exp(t z): b_n = exp(z)^(q^n) for n < m.
CarlitzCoeffs wz_coeffs(const CarlitzCache& C, const LaurentSeries& z, std::size_t m,
                        std::int64_t prec);

/// The N-term truncation of the exponential as an F_q-linear polynomial with
/// exact coefficients 1/D_j.
LinearPoly exp_linear_truncation(const CarlitzCache& C, int n);

/// Partial basis coefficient b_n^(N) as an exact linear polynomial: the n-th
/// iterated difference of the N-term truncation. Equals the q^n-th power of
/// the (N-n)-term truncation, which wz_partial_identity_holds checks
/// coefficient-by-coefficient.
LinearPoly wz_partial_poly(const CarlitzCache& C, int big_n, int n);
bool wz_partial_identity_holds(const CarlitzCache& C, int big_n, int n);

struct WzTwoRoute {
    bool tail_ok = false;  ///< |sum_{n<m} b_n f_n(t) - exp_N(tz)| within the tail
    bool full_ok = false;  ///< with the last coefficient kept the match is exact
    std::int64_t residual_exponent = 0; ///< -1 when the residual vanished
    std::int64_t tail_exponent = 0;
};
/// Two-route check of the basis expansion of t -> exp(tz) using the
/// N = m truncated coefficients; exact for every z, including arguments on
/// the convergence boundary. Needs cache depth >= m.
WzTwoRoute wz_two_route_exact(const CarlitzCache& C, int m, const FqPoly& z, const FqPoly& t);

} // namespace carlitz

#endif
