#ifndef CARLITZ_LINEAR_HPP
#define CARLITZ_LINEAR_HPP

#include "carlitz/scalar.hpp"

namespace carlitz {

/// F_q-linear function in monomial form: sum_j u[j] * t^(q^j).
struct LinearPoly {
    std::vector<Scalar> u;
};

/// F_q-linear function as coefficients against the orthonormal basis {f_i}:
/// sum_i c[i] * f_i. The length is the truncation order M.
struct CarlitzCoeffs {
    std::vector<Scalar> c;

    static CarlitzCoeffs unit(std::size_t i, std::size_t m);
};

inline CarlitzCoeffs CarlitzCoeffs::unit(std::size_t i, std::size_t m) {
    CarlitzCoeffs r;
    r.c.assign(m, sc_zero());
    r.c[i] = sc_from_poly(fp_one());
    return r;
}

} // namespace carlitz

#endif
