#ifndef CARLITZ_PRNG_HPP
#define CARLITZ_PRNG_HPP

#include <cstdint>
#include <string>

namespace carlitz {

/// splitmix64; bit-exact across platforms so seeded suites reproduce
/// counterexamples byte-for-byte.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Derive an independent deterministic stream for a named sub-task.
    static std::uint64_t derive(std::uint64_t seed, const std::string& tag) {
        std::uint64_t h = 1469598103934665603ULL ^ seed;
        for (unsigned char ch : tag) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        return h;
    }

  private:
    std::uint64_t state_;
};

} // namespace carlitz

#endif
