#include "carlitz/fq.hpp"

#include <algorithm>

namespace carlitz {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense F_p polynomial helpers used only at construction time.
using PPoly = std::vector<int>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

PPoly pmod(PPoly a, const PPoly& m, int p) {
    ptrim(a);
    // m monic
    while (a.size() >= m.size()) {
        int c = a.back();
        std::size_t off = a.size() - m.size();
        for (std::size_t k = 0; k < m.size(); ++k)
            a[off + k] = ((a[off + k] - c * m[k]) % p + p) % p;
        ptrim(a);
    }
    return a;
}

bool divides(const PPoly& d, PPoly a, int p) {
    return pmod(std::move(a), d, p).empty();
}

bool is_irreducible(const PPoly& m, int p) {
    int deg = int(m.size()) - 1;
    if (deg < 1) return false;
    if (m[0] == 0 && deg > 1) return false;
    // trial division by every monic polynomial of degree <= deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int k = 0; k < d; ++k) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            PPoly cand(d + 1, 0);
            std::int64_t t = idx;
            for (int k = 0; k < d; ++k) {
                cand[k] = int(t % p);
                t /= p;
            }
            cand[d] = 1;
            if (divides(cand, m, p)) return false;
        }
    }
    return true;
}

} // namespace

std::vector<int> Fq::default_modulus(int p, int gamma) {
    if (!is_prime(p)) throw domain_error("p must be prime");
    if (gamma < 1) throw domain_error("gamma must be positive");
    if (gamma == 1) return {0, 1}; // y
    std::int64_t count = 1;
    for (int k = 0; k < gamma; ++k) count *= p;
    // lexicographic order on (c_0, c_1, ..., c_{gamma-1})
    std::vector<int> c(gamma, 0);
    for (std::int64_t step = 0; step < count; ++step) {
        PPoly m(c.begin(), c.end());
        m.push_back(1);
        if (is_irreducible(m, p)) return {m.begin(), m.end()};
        for (int k = gamma - 1; k >= 0; --k) {
            if (++c[k] < p) break;
            c[k] = 0;
        }
    }
    throw internal_error("no irreducible modulus found");
}

Fq::Fq(int p, int gamma) : Fq(p, gamma, default_modulus(p, gamma)) {}

Fq::Fq(int p, int gamma, const std::vector<int>& modulus)
    : p_(p), gamma_(gamma), modulus_(modulus) {
    if (!is_prime(p)) throw domain_error("p must be prime");
    if (gamma < 1) throw domain_error("gamma must be positive");
    std::int64_t q = 1;
    for (int k = 0; k < gamma; ++k) {
        q *= p;
        if (q > 256) throw domain_error("q = p^gamma must be <= 256");
    }
    q_ = int(q);
    if (int(modulus_.size()) != gamma + 1 || modulus_.back() != 1)
        throw domain_error("modulus must be monic of degree gamma");
    for (int c : modulus_)
        if (c < 0 || c >= p) throw domain_error("modulus coefficients must be residues mod p");
    if (!is_irreducible(PPoly(modulus_.begin(), modulus_.end()), p))
        throw domain_error("modulus is reducible");
    build_tables();
}

void Fq::build_tables() {
    add_.assign(std::size_t(q_) * q_, 0);
    mul_.assign(std::size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    auto unpack = [&](int idx) {
        PPoly c(gamma_, 0);
        for (int k = 0; k < gamma_; ++k) {
            c[k] = idx % p_;
            idx /= p_;
        }
        return c;
    };
    auto pack = [&](const PPoly& c) {
        int idx = 0;
        for (int k = int(c.size()) - 1; k >= 0; --k) idx = idx * p_ + c[k];
        return FqElem(idx);
    };
    PPoly m(modulus_.begin(), modulus_.end());

    for (int a = 0; a < q_; ++a) {
        PPoly ca = unpack(a);
        PPoly cn(gamma_, 0);
        for (int k = 0; k < gamma_; ++k) cn[k] = (p_ - ca[k]) % p_;
        neg_[a] = pack(cn);
        for (int b = 0; b < q_; ++b) {
            PPoly cb = unpack(b);
            PPoly cs(gamma_, 0);
            for (int k = 0; k < gamma_; ++k) cs[k] = (ca[k] + cb[k]) % p_;
            add_[std::size_t(a) * q_ + b] = pack(cs);
            PPoly cp = pmod(pmul(ca, cb, p_), m, p_);
            cp.resize(gamma_, 0);
            mul_[std::size_t(a) * q_ + b] = pack(cp);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[std::size_t(a) * q_ + b] == 1) {
                inv_[a] = FqElem(b);
                break;
            }
}

FqElem Fq::inv(FqElem a) const {
    if (a == 0) throw domain_error("division by zero in GF(q)");
    return inv_[a];
}

FqElem Fq::pow(FqElem a, std::uint64_t e) const {
    FqElem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<int> Fq::coords(FqElem a) const {
    std::vector<int> c(gamma_, 0);
    int idx = a;
    for (int k = 0; k < gamma_; ++k) {
        c[k] = idx % p_;
        idx /= p_;
    }
    return c;
}

FqElem Fq::from_coords(const std::vector<int>& c) const {
    if (int(c.size()) != gamma_) throw domain_error("coordinate list has wrong length");
    int idx = 0;
    for (int k = gamma_ - 1; k >= 0; --k) {
        if (c[k] < 0 || c[k] >= p_) throw domain_error("coordinate out of range");
        idx = idx * p_ + c[k];
    }
    return FqElem(idx);
}

std::vector<FqElem> Fq::enumerate() const {
    std::vector<FqElem> e(q_);
    for (int k = 0; k < q_; ++k) e[k] = FqElem(k);
    return e;
}

} // namespace carlitz
