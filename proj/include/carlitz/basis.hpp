#ifndef CARLITZ_BASIS_HPP
#define CARLITZ_BASIS_HPP

#include <cstdint>

#include "carlitz/cache.hpp"
#include "carlitz/ratfunc.hpp"
#include "carlitz/tpoly.hpp"

namespace carlitz {

/// An ordering a_0, ..., a_{q-1} of GF(q) with a_0 = 0 and a_1 = 1.
/// The default lists packed indices in increasing order, which is the
/// coordinate-lexicographic order.
struct Enumeration {
    std::vector<FqElem> order;
};

Enumeration default_enumeration(const Fq& F);
/// Same first two entries, remaining elements reversed (q >= 4 gives a
/// genuinely different order).
Enumeration alternative_enumeration(const Fq& F);

/// Base-q digits of n, least significant first; empty for n = 0.
std::vector<int> q_digits(std::int64_t q, std::uint64_t n);

/// [i] = x^(q^i) - x without a cache.
FqPoly bracket_poly(const Fq& F, int i);

/// e_i as an F_q-linear coefficient list: result[j] multiplies t^(q^j),
/// via the alternating binomial sum.
std::vector<FqPoly> e_poly(const CarlitzCache& C, int i);

/// Independent route for e_i: expand prod_{deg m < i} (t - m) over all q^i
/// polynomials m by brute-force multiplication. Dense in t.
PolyFq e_product_oracle(const Fq& F, int i, std::int64_t max_factors = 4096);

/// Coefficient of t^(q^j) in f_i = e_i / D_i, already in lowest terms:
/// (-1)^(i-j) / (D_j * L_{i-j}^(q^j)).
RatFunc f_coeff(const CarlitzCache& C, int i, int j);
std::vector<RatFunc> f_poly(const CarlitzCache& C, int i);

struct HPoly {
    PolyRat h;     ///< h_j = G_j / Gamma_j, degree j in t
    PolyFq g;      ///< G_j = prod e_i^(alpha_i)
    FqPoly gamma;  ///< Gamma_j = prod D_i^(alpha_i)
};
HPoly h_poly(const CarlitzCache& C, std::uint64_t j);

/// m_j = a_{alpha_0} + a_{alpha_1} x + ... for the base-q digits of j.
FqPoly m_seq(const Fq& F, std::uint64_t j, const Enumeration& en);

struct QPoly {
    PolyFq p;      ///< P_j = (t - m_0)...(t - m_{j-1})
    FqPoly p_at_m; ///< P_j(m_j), nonzero
};
/// Q_j = P_j / P_j(m_j); Q_j(m_k) = 0 for k < j and Q_j(m_j) = 1.
QPoly q_poly(const Fq& F, std::uint64_t j, const Enumeration& en);

/// Coefficients (c_n0, ..., c_nn) of h_n in the interpolation basis {Q_i},
/// by Newton-style triangular interpolation at m_0, ..., m_n.
std::vector<RatFunc> expand_h_in_q(const CarlitzCache& C, std::uint64_t n, const Enumeration& en);

struct LKappa {
    std::int64_t l;     ///< digit formula: sum alpha_k (1 + q + ... + q^(k-1))
    std::int64_t kappa; ///< x-order of P_n(m_n)
};
LKappa l_and_kappa(const Fq& F, std::uint64_t n, const Enumeration& en);

} // namespace carlitz

#endif
