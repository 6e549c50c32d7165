#ifndef CARLITZ_CACHE_HPP
#define CARLITZ_CACHE_HPP

#include <map>

#include "carlitz/fqpoly.hpp"

namespace carlitz {

/// Brackets and factorials of the Carlitz calculus, built once and shared
/// read-only:
///   [i] = x^(q^i) - x,
///   D_0 = L_0 = 1,  D_i = [i] * D_{i-1}^q,  L_i = [i] * L_{i-1}.
/// Construction cross-checks the recurrences against the closed products
/// and the known x-orders; a mismatch throws internal_error.
///
/// Test hook: setting the environment variable CARLITZ_TEST_FAULT=corrupt-d2
/// perturbs D_2 after the cross-check, so downstream verification suites can
/// demonstrate failure detection.
class CarlitzCache {
  public:
    CarlitzCache(const Fq& field, int imax);

    const Fq& field() const { return *F_; }
    int imax() const { return imax_; }

    const FqPoly& bracket(int i) const; ///< i >= 1
    const FqPoly& D(int i) const;
    const FqPoly& L(int i) const;

    /// The Carlitz binomial D_i / (D_j * L_{i-j}^(q^j)), an exact polynomial
    /// quotient; a nonzero remainder aborts via internal_error.
    const FqPoly& binom(int i, int j) const;

    /// Memoized denominator D_j * L_{i-j}^(q^j) of the f_i coefficient at
    /// t^(q^j).
    const FqPoly& f_denom(int i, int j) const;

  private:
    std::shared_ptr<const Fq> F_;
    int imax_;
    std::vector<FqPoly> br_, d_, l_;
    mutable std::map<std::pair<int, int>, FqPoly> binom_;
    mutable std::map<std::pair<int, int>, FqPoly> fden_;
};

} // namespace carlitz

#endif
