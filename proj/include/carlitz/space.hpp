#ifndef CARLITZ_SPACE_HPP
#define CARLITZ_SPACE_HPP

#include "carlitz/basis.hpp"
#include "carlitz/linear.hpp"

namespace carlitz {

/// f_i in monomial form, exact coefficients.
LinearPoly f_linear(const CarlitzCache& C, int i);

/// Evaluate sum u_j t^(q^j) at a point of the integer ring (|t| <= 1).
/// Exact inputs give an exact result; series inputs track precision.
Scalar eval_linear(const Fq& F, const LinearPoly& phi, const Scalar& t);

/// Evaluate sum c_i f_i at t; needs cache depth >= M - 1.
Scalar eval_coeffs(const CarlitzCache& C, const CarlitzCoeffs& c, const Scalar& t);

/// Basis values f_0(t), ..., f_{m-1}(t) for reuse across many evaluations.
std::vector<Scalar> basis_values(const CarlitzCache& C, const Scalar& t, std::size_t m);

/// Change of basis, mutually inverse (exactly so on exact scalars).
CarlitzCoeffs to_carlitz(const CarlitzCache& C, const LinearPoly& phi);
LinearPoly from_carlitz(const CarlitzCache& C, const CarlitzCoeffs& c);

/// Difference operator on monomials: u_j -> u_j * (x^(q^j) - x).
LinearPoly delta_linear(const Fq& F, const LinearPoly& phi);
/// Iterated operator, i >= 0 (i = 0 is the identity).
LinearPoly delta_iter(const Fq& F, const LinearPoly& phi, int i);
/// The same operator against the basis: d_0 = c_1, d_i = c_i [i] + c_{i+1}.
CarlitzCoeffs delta_coeffs(const Fq& F, const CarlitzCoeffs& c);
/// Inner coefficients of the q-th-power form: delta(phi) = (sum b_i f_i)^q
/// with b_i = c_{i+1}^(1/q).
CarlitzCoeffs delta_qth_form(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap);

/// Raising operator u -> u^q - u; output has one more coefficient:
/// d_i = c_{i-1}^q [i] + c_i^q - c_i.
CarlitzCoeffs a_plus(const Fq& F, const CarlitzCoeffs& c);
/// Lowering operator: d_i = c_{i+1}^(1/q); output one coefficient shorter.
CarlitzCoeffs a_minus(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap);
/// Number operator a_plus(a_minus(.)) with eigenvalues [i] on the basis.
CarlitzCoeffs number_op(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap);

/// Function q-th power in the basis: g_j = c_j^q + c_{j-1}^q [j].
CarlitzCoeffs qth_power_coeffs(const Fq& F, const CarlitzCoeffs& c);

struct CommutatorReport {
    CarlitzCoeffs lhs;   ///< (a_minus a_plus - a_plus a_minus) c
    CarlitzCoeffs rhs;   ///< [1]^(1/q) * c
    bool equal = false;
    bool k_form_equal = false; ///< delta(c^q) - (delta c)^q = [1] c^q, no roots
};
CommutatorReport commutator_defect(const Fq& F, const CarlitzCoeffs& c, std::int64_t ram_cap);

/// Eigenfunction of the lowering operator built by c_{n+1} = (lambda c_n)^q.
/// Requires |lambda|^(q/(q-1)) * |c0| < 1 so the coefficients decay.
CarlitzCoeffs coherent_state(const Fq& F, const Scalar& lambda, const Scalar& c0,
                             std::size_t m);

/// Coefficient norm max_i |c_i|.
AbsVal norm(const CarlitzCoeffs& c);
/// max |eval(c, t)| over every polynomial t with deg t < degree_bound.
AbsVal sampled_norm(const CarlitzCache& C, const CarlitzCoeffs& c, int degree_bound);

/// Equality on the common valid prefix of two coefficient lists.
ScalarEq coeffs_eq(const Fq& F, const CarlitzCoeffs& a, const CarlitzCoeffs& b);

} // namespace carlitz

#endif
