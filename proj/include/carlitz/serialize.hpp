#ifndef CARLITZ_SERIALIZE_HPP
#define CARLITZ_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "carlitz/scalar.hpp"
#include "carlitz/tpoly.hpp"

namespace carlitz {

/// Text forms, locale-independent ASCII:
///   element     -> integer when gamma = 1, else [d0,d1,...]
///   polynomial  -> sparse sum of c*x^k terms, descending k, "*" omitted
///                  for unit coefficients ("x^4+x", "x^3+2*x", "0")
///   rational    -> "num" or "(num)/(den)"
///   series      -> "x^(v)*(unit part) + O(x^(p))", exponents printed v/d
///                  when ramified
std::string elem_text(const Fq& F, FqElem a);
nlohmann::json elem_json(const Fq& F, FqElem a);

/// frac_den > 1 renders exponents as fractions over frac_den (for ramified
/// scalars written in powers of x^(1/d)).
std::string poly_text(const Fq& F, const FqPoly& p, std::int64_t frac_den = 1,
                      char var = 'x');
std::string ratfunc_text(const Fq& F, const RatFunc& r, std::int64_t frac_den = 1);

std::string laurent_text(const Fq& F, const LaurentSeries& s);
nlohmann::json laurent_json(const Fq& F, const LaurentSeries& s);
LaurentSeries laurent_from_json(const Fq& F, const nlohmann::json& j);

std::string scalar_text(const Fq& F, const Scalar& s);
nlohmann::json scalar_json(const Fq& F, const Scalar& s);

/// Polynomial in t over GF(q)[x], descending t-degree; multi-term
/// coefficients are parenthesized: "t^4+(x^2+x+1)*t^2+(x^2+x)*t".
std::string tpoly_text(const Fq& F, const PolyFq& p);

/// Parsers for the same grammar (used by CLI flags and round-trip checks).
FqPoly parse_poly(const Fq& F, std::string_view text);
RatFunc parse_ratfunc(const Fq& F, std::string_view text);

std::string absval_text(const AbsVal& v);

} // namespace carlitz

#endif
