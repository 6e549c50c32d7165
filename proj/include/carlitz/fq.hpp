#ifndef CARLITZ_FQ_HPP
#define CARLITZ_FQ_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

/// An element of GF(q) stored as its packed coordinate index:
/// coords (c_0,...,c_{gamma-1}) base p, index = sum c_k p^k.
/// Index 0 is the additive identity, index 1 the multiplicative identity.
using FqElem = std::uint8_t;

/// The field GF(p^gamma) for a monic irreducible modulus of degree gamma
/// over F_p. Immutable after construction; all arithmetic is table-driven.
/// Supports q <= 256.
class Fq {
  public:
    /// modulus: gamma+1 residues mod p, low degree first, leading 1.
    Fq(int p, int gamma, const std::vector<int>& modulus);

    /// Uses the lexicographically first monic irreducible of degree gamma.
    Fq(int p, int gamma);

    int p() const { return p_; }
    int gamma() const { return gamma_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
    FqElem sub(FqElem a, FqElem b) const { return add_[a * q_ + neg_[b]]; }
    FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
    FqElem neg(FqElem a) const { return neg_[a]; }
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    FqElem pow(FqElem a, std::uint64_t e) const;

    /// (-1)^k in the field.
    FqElem sign(std::uint64_t k) const { return (k % 2 == 0) ? FqElem(1) : neg_[1]; }

    /// Coordinates of a, low degree first, length gamma.
    std::vector<int> coords(FqElem a) const;
    FqElem from_coords(const std::vector<int>& c) const;

    /// All q elements: index k holds the element with packed index k, so the
    /// list starts 0, 1 and continues in coordinate-lexicographic order.
    std::vector<FqElem> enumerate() const;

    /// Raw table rows for bulk kernels.
    const FqElem* mul_row(FqElem c) const { return &mul_[std::size_t(c) * q_]; }
    const FqElem* add_table() const { return add_.data(); }

    /// First monic irreducible of degree gamma over F_p, coefficient tuple
    /// ordered low-to-high and compared lexicographically.
    static std::vector<int> default_modulus(int p, int gamma);

    bool operator==(const Fq& o) const {
        return p_ == o.p_ && gamma_ == o.gamma_ && modulus_ == o.modulus_;
    }

  private:
    void build_tables();

    int p_ = 0;
    int gamma_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<FqElem> add_;
    std::vector<FqElem> mul_;
    std::vector<FqElem> neg_;
    std::vector<FqElem> inv_;
};

} // namespace carlitz

#endif
