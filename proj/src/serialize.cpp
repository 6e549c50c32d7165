#include "carlitz/serialize.hpp"

#include <cctype>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::string exp_text(std::int64_t num, std::int64_t den, char var) {
    std::string s(1, var);
    if (num == 1 && den == 1) return s;
    s += '^';
    bool paren = den != 1 || num < 0;
    if (paren) s += '(';
    s += std::to_string(num);
    if (den != 1) {
        s += '/';
        s += std::to_string(den);
    }
    if (paren) s += ')';
    return s;
}

} // namespace

std::string elem_text(const Fq& F, FqElem a) {
    if (F.gamma() == 1) return std::to_string(int(a));
    std::string s = "[";
    auto c = F.coords(a);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(c[k]);
    }
    s += ']';
    return s;
}

nlohmann::json elem_json(const Fq& F, FqElem a) {
    if (F.gamma() == 1) return int(a);
    return nlohmann::json(F.coords(a));
}

std::string poly_text(const Fq& F, const FqPoly& p, std::int64_t frac_den, char var) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::int64_t k = p.deg(); k >= 0; --k) {
        FqElem c = p.c[std::size_t(k)];
        if (c == 0) continue;
        if (!s.empty()) s += '+';
        if (k == 0) {
            s += elem_text(F, c);
            continue;
        }
        if (c != 1) {
            s += elem_text(F, c);
            s += '*';
        }
        s += exp_text(k, frac_den, var);
    }
    return s;
}

std::string ratfunc_text(const Fq& F, const RatFunc& r, std::int64_t frac_den) {
    if (r.den == fp_one()) return poly_text(F, r.num, frac_den);
    return "(" + poly_text(F, r.num, frac_den) + ")/(" + poly_text(F, r.den, frac_den) + ")";
}

std::string laurent_text(const Fq& F, const LaurentSeries& s) {
    std::string tail = "O(" + exp_text(s.prec, s.denom, 'x') + ")";
    if (s.is_zero()) return tail;
    std::string unit;
    for (std::size_t k = 0; k < s.c.size(); ++k) {
        if (s.c[k] == 0) continue;
        if (!unit.empty()) unit += '+';
        if (k == 0) {
            unit += elem_text(F, s.c[k]);
            continue;
        }
        if (s.c[k] != 1) {
            unit += elem_text(F, s.c[k]);
            unit += '*';
        }
        unit += exp_text(std::int64_t(k), s.denom, 'x');
    }
    if (unit.empty()) unit = "0";
    return exp_text(s.val, s.denom, 'x') + "*(" + unit + ") + " + tail;
}

nlohmann::json laurent_json(const Fq& F, const LaurentSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (FqElem c : s.c) coeffs.push_back(elem_json(F, c));
    return nlohmann::json{
        {"denom", s.denom}, {"val", s.val}, {"coeffs", coeffs}, {"prec", s.prec}};
}

LaurentSeries laurent_from_json(const Fq& F, const nlohmann::json& j) {
    std::vector<FqElem> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_array()) {
            std::vector<int> digits = c.get<std::vector<int>>();
            coeffs.push_back(F.from_coords(digits));
        } else {
            coeffs.push_back(FqElem(c.get<int>()));
        }
    }
    return ls_make(j.at("denom").get<std::int64_t>(), j.at("val").get<std::int64_t>(),
                   std::move(coeffs), j.at("prec").get<std::int64_t>());
}

std::string scalar_text(const Fq& F, const Scalar& s) {
    if (auto* r = std::get_if<RamRat>(&s)) return ratfunc_text(F, r->r, r->denom);
    return laurent_text(F, std::get<LaurentSeries>(s));
}

nlohmann::json scalar_json(const Fq& F, const Scalar& s) {
    if (auto* r = std::get_if<RamRat>(&s))
        return nlohmann::json{{"denom", r->denom},
                              {"num", poly_text(F, r->r.num, r->denom)},
                              {"den", poly_text(F, r->r.den, r->denom)}};
    return laurent_json(F, std::get<LaurentSeries>(s));
}

std::string tpoly_text(const Fq& F, const PolyFq& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::int64_t k = p.deg(); k >= 0; --k) {
        const FqPoly& c = p.c[std::size_t(k)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += '+';
        std::string ct = poly_text(F, c);
        if (k == 0) {
            s += ct;
            continue;
        }
        if (!(c == fp_one())) {
            int nz = 0;
            for (FqElem v : c.c)
                if (v != 0) ++nz;
            s += (nz > 1) ? "(" + ct + ")" : ct;
            s += '*';
        }
        s += exp_text(k, 1, 't');
    }
    return s;
}

namespace {

struct Parser {
    const Fq& F;
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw domain_error("expected an integer in '" + std::string(text) + "'");
        return std::stoll(std::string(text.substr(start, pos - start)));
    }

    FqElem parse_coeff() {
        skip_ws();
        if (eat('[')) {
            std::vector<int> digits;
            digits.push_back(int(parse_int()));
            while (eat(',')) digits.push_back(int(parse_int()));
            if (!eat(']')) throw domain_error("unterminated digit list");
            while (int(digits.size()) < F.gamma()) digits.push_back(0);
            return F.from_coords(digits);
        }
        std::int64_t v = parse_int();
        std::int64_t m = v % F.p();
        if (m < 0) m += F.p();
        return F.from_coords([&] {
            std::vector<int> d(std::size_t(F.gamma()), 0);
            d[0] = int(m);
            return d;
        }());
    }

    // term := coeff | coeff '*' xpart | xpart ; xpart := 'x' ('^' int)?
    void parse_term(std::vector<FqElem>& acc, bool negate) {
        skip_ws();
        FqElem c = 1;
        bool have_coeff = false;
        if (!peek('x')) {
            c = parse_coeff();
            have_coeff = true;
        }
        std::int64_t k = 0;
        skip_ws();
        if ((have_coeff && eat('*')) || peek('x')) {
            if (!eat('x')) throw domain_error("expected x after '*'");
            k = 1;
            if (eat('^')) {
                bool paren = eat('(');
                k = parse_int();
                if (paren && !eat(')')) throw domain_error("unterminated exponent");
            }
        }
        if (k < 0) throw domain_error("negative exponents are not polynomial");
        if (negate) c = F.neg(c);
        if (std::size_t(k) >= acc.size()) acc.resize(std::size_t(k) + 1, 0);
        acc[std::size_t(k)] = F.add(acc[std::size_t(k)], c);
    }

    FqPoly parse_polynomial() {
        std::vector<FqElem> acc;
        bool neg = eat('-');
        parse_term(acc, neg);
        while (true) {
            if (eat('+'))
                parse_term(acc, false);
            else if (eat('-'))
                parse_term(acc, true);
            else
                break;
        }
        return FqPoly(std::move(acc));
    }
};

} // namespace

FqPoly parse_poly(const Fq& F, std::string_view text) {
    Parser p{F, text};
    FqPoly r = p.parse_polynomial();
    if (!p.done()) throw domain_error("trailing input after polynomial: '" + std::string(text) + "'");
    return r;
}

RatFunc parse_ratfunc(const Fq& F, std::string_view text) {
    // split on a top-level '/', honoring parentheses
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '(' || text[k] == '[') ++depth;
        if (text[k] == ')' || text[k] == ']') --depth;
        if (text[k] == '/' && depth == 0) {
            slash = k;
            break;
        }
    }
    auto strip_parens = [](std::string_view s) {
        std::size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        if (b > a + 1 && s[a] == '(' && s[b - 1] == ')') {
            int d = 0;
            bool wraps = true;
            for (std::size_t k = a; k < b; ++k) {
                if (s[k] == '(') ++d;
                if (s[k] == ')') {
                    --d;
                    if (d == 0 && k + 1 != b) wraps = false;
                }
            }
            if (wraps) return s.substr(a + 1, b - a - 2);
        }
        return s.substr(a, b - a);
    };
    if (slash == std::string_view::npos) return rf_from_poly(parse_poly(F, strip_parens(text)));
    FqPoly num = parse_poly(F, strip_parens(text.substr(0, slash)));
    FqPoly den = parse_poly(F, strip_parens(text.substr(slash + 1)));
    if (den.is_zero()) throw domain_error("zero denominator");
    return rf_make(F, std::move(num), std::move(den));
}

std::string absval_text(const AbsVal& v) {
    if (v.zero) {
        if (!v.bound) return "0";
        return "<=q^(-" + std::to_string(v.bound->first) +
               (v.bound->second != 1 ? "/" + std::to_string(v.bound->second) : "") + ")";
    }
    std::string e = std::to_string(-v.num);
    if (v.den != 1) e += "/" + std::to_string(v.den);
    return "q^(" + e + ")";
}

} // namespace carlitz
