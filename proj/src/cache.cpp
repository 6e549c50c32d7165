#include "carlitz/cache.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

CarlitzCache::CarlitzCache(const Fq& field, int imax)
    : F_(std::make_shared<Fq>(field)), imax_(imax) {
    if (imax < 0) throw domain_error("cache depth must be nonnegative");
    const Fq& F = *F_;
    const std::int64_t q = F.q();

    br_.resize(std::size_t(imax) + 1);
    d_.resize(std::size_t(imax) + 1);
    l_.resize(std::size_t(imax) + 1);
    d_[0] = fp_one();
    l_[0] = fp_one();

    for (int i = 1; i <= imax; ++i) {
        // [i] = x^(q^i) - x
        FqPoly b = fp_monomial(1, ipow(q, i));
        b.c[1] = F.neg(1);
        br_[std::size_t(i)] = b;
        d_[std::size_t(i)] = fp_mul(F, b, fp_pow_q(F, d_[std::size_t(i - 1)], 1));
        l_[std::size_t(i)] = fp_mul(F, b, l_[std::size_t(i - 1)]);
    }

    // closed products: D_i = [i][i-1]^q...[1]^(q^(i-1)), L_i = [i]...[1],
    // where [k]^(q^(i-k)) = x^(q^i) - x^(q^(i-k))
    for (int i = 1; i <= imax; ++i) {
        FqPoly dp = fp_one(), lp = fp_one();
        for (int k = i; k >= 1; --k) {
            dp = fp_mul(F, dp, fp_pow_q(F, br_[std::size_t(k)], i - k));
            lp = fp_mul(F, lp, br_[std::size_t(k)]);
        }
        if (!(dp == d_[std::size_t(i)]) || !(lp == l_[std::size_t(i)]))
            throw internal_error("factorial recurrence disagrees with closed product");
        if (fp_xorder(d_[std::size_t(i)]) != (ipow(q, i) - 1) / (q - 1))
            throw internal_error("D_i has wrong x-order");
        if (fp_xorder(l_[std::size_t(i)]) != i)
            throw internal_error("L_i has wrong x-order");
    }

    const char* fault = std::getenv("CARLITZ_TEST_FAULT");
    if (fault && std::strcmp(fault, "corrupt-d2") == 0 && imax >= 2)
        d_[2] = fp_add(F, d_[2], fp_monomial(1, 1));
}

const FqPoly& CarlitzCache::bracket(int i) const {
    if (i < 1 || i > imax_) throw domain_error("bracket index out of range (needs 1 <= i <= imax)");
    return br_[std::size_t(i)];
}

const FqPoly& CarlitzCache::D(int i) const {
    if (i < 0 || i > imax_) throw domain_error("factorial index out of range");
    return d_[std::size_t(i)];
}

const FqPoly& CarlitzCache::L(int i) const {
    if (i < 0 || i > imax_) throw domain_error("factorial index out of range");
    return l_[std::size_t(i)];
}

const FqPoly& CarlitzCache::binom(int i, int j) const {
    if (j < 0 || j > i || i > imax_) throw domain_error("binomial indices need 0 <= j <= i <= imax");
    auto key = std::make_pair(i, j);
    auto it = binom_.find(key);
    if (it != binom_.end()) return it->second;
    const Fq& F = *F_;
    FqPoly q = fp_div_exact(F, d_[std::size_t(i)], f_denom(i, j));
    return binom_.emplace(key, std::move(q)).first->second;
}

const FqPoly& CarlitzCache::f_denom(int i, int j) const {
    if (j < 0 || j > i || i > imax_) throw domain_error("indices need 0 <= j <= i <= imax");
    auto key = std::make_pair(i, j);
    auto it = fden_.find(key);
    if (it != fden_.end()) return it->second;
    const Fq& F = *F_;
    FqPoly d = fp_mul(F, d_[std::size_t(j)], fp_pow_q(F, l_[std::size_t(i - j)], j));
    return fden_.emplace(key, std::move(d)).first->second;
}

} // namespace carlitz
