#pragma once

// Small bit-twiddling helpers shared by the search and enumeration code.

#include <cstdint>

namespace lshape {

// 128-bit point mask. Point indices are x-positions 0..n-1 (n <= 128, which
// covers every instance handled here, including the 98-point family).
struct Mask128 {
    std::uint64_t lo = 0, hi = 0;

    static Mask128 all(int n) {
        Mask128 m;
        if (n >= 64) {
            m.lo = ~0ull;
            m.hi = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else {
            m.lo = (n == 64) ? ~0ull : ((1ull << n) - 1);
        }
        return m;
    }
    bool test(int i) const { return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1) != 0; }
    void set(int i) { (i < 64 ? lo : hi) |= 1ull << (i & 63); }
    void reset(int i) { (i < 64 ? lo : hi) &= ~(1ull << (i & 63)); }
    bool any() const { return (lo | hi) != 0; }
    bool none() const { return (lo | hi) == 0; }
    int popcount() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }

    friend Mask128 operator&(Mask128 a, Mask128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend Mask128 operator|(Mask128 a, Mask128 b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend Mask128 operator~(Mask128 a) { return {~a.lo, ~a.hi}; }
    friend bool operator==(const Mask128&, const Mask128&) = default;

    // Index of the lowest set bit; undefined on an empty mask.
    int first() const { return lo ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(hi); }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t w = lo; w;) {
            int i = __builtin_ctzll(w);
            w &= w - 1;
            f(i);
        }
        for (std::uint64_t w = hi; w;) {
            int i = __builtin_ctzll(w);
            w &= w - 1;
            f(64 + i);
        }
    }
};

// Deterministic 64-bit RNG (splitmix64). Used instead of <random> distributions
// so that seeded test sequences are stable across standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }
};

}  // namespace lshape
